#include "burnside/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] * c;
    return Polynomial::from_coeffs(std::move(out));
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quo(a.degree() - db + 1);
    const Rational& lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        Rational q = rem[i] / lb;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {Polynomial::from_coeffs(std::move(quo)), Polynomial::from_coeffs(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("Polynomial: inexact division");
    return q;
}

namespace {

// Integer polynomial with positive leading coefficient and content 1.
std::vector<Integer> primitive_int(const Polynomial& p) {
    Integer den_lcm(1);
    for (const auto& c : p.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    std::vector<Integer> out(p.coeffs().size());
    Integer content(0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coeffs()[i].num() * (den_lcm / p.coeffs()[i].den());
        content = boost::multiprecision::gcd(content, out[i]);
    }
    if (!content.is_zero()) {
        if (out.back() < 0) content = -content;
        for (auto& c : out) c /= content;
    }
    return out;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, in Z[t].
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        Integer lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

void make_primitive(std::vector<Integer>& a) {
    if (a.empty()) return;
    Integer content(0);
    for (const auto& c : a) content = boost::multiprecision::gcd(content, c);
    if (a.back() < 0) content = -content;
    for (auto& c : a) c /= content;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Integer> pa = primitive_int(a);
    std::vector<Integer> pb = primitive_int(b);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        std::vector<Integer> r = pseudo_rem(std::move(pa), pb);
        make_primitive(r);
        pa = std::move(pb);
        pb = std::move(r);
    }
    std::vector<Rational> coeffs(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) coeffs[i] = Rational(pa[i]);
    return Polynomial::from_coeffs(std::move(coeffs)).monic();
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sgn() < 0 ? " - " : " + ";
        else if (c.sgn() < 0) out += "-";
        Rational mag = abs(c);
        if (i == 0 || !mag.is_one()) out += mag.str();
        if (i > 0) {
            if (!mag.is_one()) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace burnside
