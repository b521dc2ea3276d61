#pragma once

#include <string>
#include <vector>

#include "burnside/polynomial.hpp"

namespace burnside {

/// Element of Q(t) in canonical form: gcd(num, den) = 1 and den monic.
/// Equality of canonical forms is equality of rational functions.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(int c) : RationalFunction(Rational(c)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}

    /// rf_reduce: canonical form of num/den; throws on zero denominator.
    static RationalFunction reduce(const Polynomial& num, const Polynomial& den);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// rf_regular_at: true iff den(x) != 0. Since the function is reduced this
    /// decides membership in the localization of Q[t] at (t - x).
    bool regular_at(const Rational& x) const { return !den_.eval(x).is_zero(); }

    /// rf_eval: exact value num(x)/den(x); throws PoleError if den(x) = 0.
    Rational eval_at(const Rational& x) const;

    /// Power series coefficients 0..n at t = 0; requires den(0) != 0.
    std::vector<Rational> taylor(std::size_t n) const;

    friend RationalFunction operator-(const RationalFunction& a) {
        return RationalFunction(-a.num_, a.den_);
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return reduce(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return reduce(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string str(const std::string& var = "t") const;

private:
    RationalFunction(Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;  // monic, nonzero
};

}  // namespace burnside
