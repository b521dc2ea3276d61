#include "burnside/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<char>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
    const std::size_t n = labels_.size();
    if (leq_.size() != n) throw std::invalid_argument("Poset: relation size mismatch");
    for (const auto& row : leq_)
        if (row.size() != n) throw std::invalid_argument("Poset: relation size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i][i]) throw std::invalid_argument("Poset: relation not reflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i])
                throw std::invalid_argument("Poset: relation not antisymmetric");
            if (!leq_[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (leq_[j][k] && !leq_[i][k])
                    throw std::invalid_argument("Poset: relation not transitive");
        }
    }
}

Poset Poset::antichain(std::size_t n) {
    std::vector<std::string> labels(n);
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = "a" + std::to_string(i);
        leq[i][i] = 1;
    }
    return Poset(std::move(labels), std::move(leq));
}

Poset Poset::chain(std::size_t n) {
    std::vector<std::string> labels(n);
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = "c" + std::to_string(i);
        for (std::size_t j = i; j < n; ++j) leq[i][j] = 1;
    }
    return Poset(std::move(labels), std::move(leq));
}

std::size_t Poset::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("Poset: unknown label " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

bool Poset::has_label(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Matrix<Rational> mobius(const Poset& P) {
    const std::size_t n = P.size();
    Matrix<Rational> zeta(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) zeta(i, j) = P.leq(i, j) ? Rational(1) : Rational(0);
    if (n == 0) return zeta;
    return mat_solve(zeta, Matrix<Rational>::identity(n));
}

namespace {

Poset augmented(const Poset& P, const std::string& label, bool top) {
    if (P.has_label(label))
        throw std::invalid_argument("Poset: augmentation label already present: " + label);
    const std::size_t n = P.size();
    std::vector<std::string> labels = P.labels();
    labels.push_back(label);
    std::vector<std::vector<char>> leq(n + 1, std::vector<char>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = P.leq(i, j) ? 1 : 0;
    leq[n][n] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (top)
            leq[i][n] = 1;
        else
            leq[n][i] = 1;
    }
    return Poset(std::move(labels), std::move(leq));
}

}  // namespace

Poset augment_top(const Poset& P, const std::string& label) { return augmented(P, label, true); }
Poset augment_bottom(const Poset& P, const std::string& label) { return augmented(P, label, false); }

Rational euler_char(const Poset& P) {
    Matrix<Rational> mu = mobius(P);
    Rational total(0);
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < P.size(); ++j) total += mu(i, j);
    return total;
}

Rational reduced_euler_char(const Poset& P) { return euler_char(P) - Rational(1); }

Poset interval(const Poset& P, std::size_t element, IntervalMode mode) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < P.size(); ++i) {
        bool in = false;
        switch (mode) {
            case IntervalMode::Greater: in = P.less(element, i); break;
            case IntervalMode::Less: in = P.less(i, element); break;
            case IntervalMode::AtLeast: in = P.leq(element, i); break;
            case IntervalMode::AtMost: in = P.leq(i, element); break;
        }
        if (in) keep.push_back(i);
    }
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (std::size_t i : keep) labels.push_back(P.labels()[i]);
    std::vector<std::vector<char>> leq(keep.size(), std::vector<char>(keep.size(), 0));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) leq[a][b] = P.leq(keep[a], keep[b]) ? 1 : 0;
    return Poset(std::move(labels), std::move(leq));
}

Integer chain_count(const Poset& P, std::size_t n) {
    const std::size_t m = P.size();
    std::vector<Integer> v(m, 1);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Integer> next(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (P.less(i, j)) next[i] += v[j];
        v = std::move(next);
    }
    Integer total(0);
    for (const auto& x : v) total += x;
    return total;
}

}  // namespace burnside
