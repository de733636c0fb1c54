#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "slring/errors.hpp"
#include "slring/scalar.hpp"

namespace slring {

// Dense row-major matrix over an exact scalar field.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw input_error("Matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return e_[idx(i, j)]; }
    const K& operator()(int i, int j) const { return e_[idx(i, j)]; }

    const std::vector<K>& entries() const { return e_; }

    bool is_zero() const {
        for (const K& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    Matrix& operator*=(const K& c) {
        for (K& v : e_) v *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(Matrix a, const K& c) { a *= c; return a; }
    friend Matrix operator*(const K& c, Matrix a) { a *= c; return a; }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw input_error("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int t = 0; t < a.cols_; ++t) {
                const K& av = a(i, t);
                if (av.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const K& bv = b(t, j);
                    if (bv.is_zero()) continue;
                    r(i, j) += av * bv;
                }
            }
        }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw input_error("Matrix: vector length mismatch");
        std::vector<K> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero())
                    out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    // Row-major flattening; the coordinates used by every operator subspace.
    const std::vector<K>& vectorized() const { return e_; }

    static Matrix from_vector(int rows, int cols, const std::vector<K>& v) {
        if (static_cast<std::size_t>(rows) * cols != v.size())
            throw input_error("Matrix: vector length does not match shape");
        Matrix m(rows, cols);
        m.e_ = v;
        return m;
    }

    void paste_block(int r0, int c0, const Matrix& b) {
        if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
            throw input_error("Matrix: block out of range");
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix block(int r0, int c0, int rows, int cols) const {
        if (r0 < 0 || c0 < 0 || r0 + rows > rows_ || c0 + cols > cols_)
            throw input_error("Matrix: block out of range");
        Matrix b(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw input_error("Matrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw input_error("Matrix: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<K> e_;
};

// Commutator ab - ba.
template <class K>
Matrix<K> bracket(const Matrix<K>& a, const Matrix<K>& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw input_error("bracket: operands must be square of equal size");
    return a * b - b * a;
}

} // namespace slring
