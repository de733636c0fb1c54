#include "slring/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace slring {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

mpz_class parse_int(const std::string& s) {
    if (s.empty()) throw input_error("empty integer literal");
    try {
        return mpz_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw input_error("bad integer literal: '" + s + "'");
    }
}

} // namespace

Rat Rat::parse(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw input_error("empty rational literal");
    const auto slash = s.find('/');
    mpz_class num, den;
    if (slash == std::string::npos) {
        num = parse_int(s);
        den = 1;
    } else {
        num = parse_int(s.substr(0, slash));
        den = parse_int(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in '" + text + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(std::move(q));
}

std::string Rat::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::pretty() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return str();
}

std::size_t Rat::bit_size() const {
    return std::max(mpz_sizeinbase(v_.get_num().get_mpz_t(), 2),
                    mpz_sizeinbase(v_.get_den().get_mpz_t(), 2));
}

GaussRat GaussRat::parse(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw input_error("empty scalar literal");
    if (s.size() < 2 || s.compare(s.size() - 2, 2, "*i") != 0) {
        return GaussRat(Rat::parse(s));
    }
    std::string body = s.substr(0, s.size() - 2);
    // Split at the last '+'/'-' that follows a digit; signs inside "p/q"
    // appear only at the front of a component.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') &&
            std::isdigit(static_cast<unsigned char>(body[k - 1]))) {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return GaussRat(Rat(0), Rat::parse(body));
    }
    Rat re = Rat::parse(body.substr(0, split));
    std::string imag = body.substr(split);
    if (imag.size() > 1 && imag[0] == '+') imag = imag.substr(1);
    return GaussRat(std::move(re), Rat::parse(imag));
}

std::string GaussRat::str() const {
    if (im_.sign() < 0) return re_.str() + "-" + (-im_).str() + "*i";
    return re_.str() + "+" + im_.str() + "*i";
}

std::string GaussRat::pretty() const {
    if (im_.is_zero()) return re_.pretty();
    if (im_.sign() < 0) return re_.pretty() + "-" + (-im_).pretty() + "*i";
    return re_.pretty() + "+" + im_.pretty() + "*i";
}

} // namespace slring
