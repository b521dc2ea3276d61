#include "burnside/rational_function.hpp"

#include "burnside/error.hpp"

namespace burnside {

RationalFunction RationalFunction::reduce(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num.is_zero()) return RationalFunction();
    Polynomial g = gcd(num, den);
    Polynomial n = exact_div(num, g);
    Polynomial d = exact_div(den, g);
    Rational lead = d.leading();
    n = n * (Rational(1) / lead);
    d = d * (Rational(1) / lead);
    return RationalFunction(std::move(n), std::move(d));
}

Rational RationalFunction::eval_at(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw PoleError("RationalFunction: pole at " + x.str());
    return num_.eval(x) / d;
}

std::vector<Rational> RationalFunction::taylor(std::size_t n) const {
    Rational d0 = den_.constant_term();
    if (d0.is_zero())
        throw std::domain_error("RationalFunction: no power series expansion, pole at 0");
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = num_.coeff(k);
        for (std::size_t j = 1; j <= k; ++j) acc -= den_.coeff(j) * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace burnside
