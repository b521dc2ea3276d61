#pragma once

#include <string>
#include <vector>

#include "burnside/rational.hpp"

namespace burnside {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of t^i;
/// the zero polynomial has an empty coefficient list, so the leading
/// coefficient is nonzero whenever the list is nonempty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial variable() { return from_coeffs({Rational(0), Rational(1)}); }
    static Polynomial from_coeffs(std::vector<Rational> coeffs) {
        Polynomial p;
        p.coeffs_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const Rational& leading() const;

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant_term() const { return coeff(0); }

    Rational eval(const Rational& x) const;

    Polynomial monic() const;

    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& c);

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by b over Q; throws on division by zero.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

/// Exact quotient; throws if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd over Q, computed by content-and-primitive-part over the integers.
/// gcd(0, 0) = 0 by convention.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace burnside
