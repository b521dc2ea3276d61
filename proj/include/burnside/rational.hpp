#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "burnside/error.hpp"

namespace burnside {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always stored canonically:
/// denominator > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Integer v) : num_(std::move(v)), den_(1) {}

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }

    /// Parses "p/q" or "p" (optional sign, surrounding whitespace allowed).
    static Rational parse(std::string_view s);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return num_.sign(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const {
        std::string out = num_.str();
        if (den_ != 1) {
            out += '/';
            out += den_.str();
        }
        return out;
    }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational abs(const Rational& q) { return q.sgn() < 0 ? -q : q; }

inline Rational Rational::parse(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) throw SpecError("Rational::parse: empty string");
    auto check_int = [&](std::string_view v) {
        if (v.empty()) throw SpecError("Rational::parse: malformed rational");
        std::size_t i = (v[0] == '+' || v[0] == '-') ? 1 : 0;
        if (i == v.size()) throw SpecError("Rational::parse: malformed rational");
        for (; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i])))
                throw SpecError("Rational::parse: malformed rational");
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rational(Integer(std::string(s)));
    }
    std::string_view p = trim(s.substr(0, slash));
    std::string_view q = trim(s.substr(slash + 1));
    check_int(p);
    check_int(q);
    return Rational(Integer(std::string(p)), Integer(std::string(q)));
}

}  // namespace burnside
