#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "qsv/errors.hpp"

namespace qsv {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational; always held in lowest terms with a positive
/// denominator. Expression templates are off so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline BigInt parse_integer(std::string_view s) {
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("empty integer");
    BigInt value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("invalid digit '" + std::string(1, c) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace detail

/// Parses "n" or "n/d" (signs allowed on either part).
inline Rational parse_rational(std::string_view s) {
    s = detail::trim(s);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
    const BigInt num = detail::parse_integer(s.substr(0, slash));
    const BigInt den = detail::parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

/// Exact complex scalar re + im*i with rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(std::int64_t re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2, always a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw SingularMatrixError("division by zero scalar");
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Canonical text form: "a/b", "c/d*i", or "a/b+c/d*i"; unit denominators are dropped.
inline std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re());
    if (z.re() == 0) return to_string(z.im()) + "*i";
    std::string out = to_string(z.re());
    if (z.im() > 0) out += "+";
    return out + to_string(z.im()) + "*i";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

/// Inverse of to_string; additionally accepts "i", "-i", "2i" and surrounding spaces.
inline GaussianRational parse_scalar(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'i') return GaussianRational(parse_rational(s));

    s.remove_suffix(1);
    if (!s.empty() && s.back() == '*') s.remove_suffix(1);

    // The imaginary coefficient starts at the last sign that is not leading.
    std::size_t split = 0;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    const std::string_view re_part = s.substr(0, split);
    std::string_view im_part = s.substr(split);

    Rational im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else {
        if (im_part.front() == '+') im_part.remove_prefix(1);
        im = parse_rational(im_part);
    }
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {std::move(re), std::move(im)};
}

} // namespace qsv
