#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

#include "slring/errors.hpp"

namespace slring {

// Arbitrary-precision rational, always stored canonical: gcd(|num|, den) = 1
// and den > 0. Construction canonicalizes; GMP arithmetic keeps canonical
// operands canonical, so every value the class hands out is reduced.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw input_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p", "p/q", optional sign, arbitrary precision.
    static Rat parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw input_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    Rat inverse() const {
        if (is_zero()) throw input_error("Rat: inverse of zero");
        Rat r;
        r.v_ = 1 / v_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // Canonical "p/q" (denominator always printed, so files round-trip
    // byte-identically).
    std::string str() const;
    // Human form: "3", "-1/2".
    std::string pretty() const;

    // max(bits(num), bits(den)); the coefficient-growth statistic.
    std::size_t bit_size() const;

    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.pretty();
    }

private:
    mpq_class v_;
};

// Element of Q(i): re + im*i with i*i = -1. Componentwise canonical.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long n) : re_(n) {}
    GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }
    static GaussRat parse(const std::string& s);

    const Rat& real() const { return re_; }
    const Rat& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re_ * o.re_ - im_ * o.im_;
        Rat i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { a *= b; return a; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { a /= b; return a; }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat inverse() const {
        Rat n = re_ * re_ + im_ * im_;
        if (n.is_zero()) throw input_error("GaussRat: inverse of zero");
        Rat ni = n.inverse();
        return GaussRat(re_ * ni, -(im_ * ni));
    }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Canonical "p/q+r/s*i" (or "p/q-r/s*i" when the imaginary part is
    // negative).
    std::string str() const;
    std::string pretty() const;

    std::size_t bit_size() const {
        return std::max(re_.bit_size(), im_.bit_size());
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
        return os << g.pretty();
    }

private:
    Rat re_;
    Rat im_;
};

template <class K>
struct field_traits;

template <>
struct field_traits<Rat> {
    static constexpr const char* name = "Q";
    static constexpr bool ordered = true;
    static Rat parse(const std::string& s) { return Rat::parse(s); }
};

template <>
struct field_traits<GaussRat> {
    static constexpr const char* name = "Qi";
    static constexpr bool ordered = false;
    static GaussRat parse(const std::string& s) { return GaussRat::parse(s); }
};

} // namespace slring
