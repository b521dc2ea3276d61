#pragma once

#include <string>
#include <vector>

#include "burnside/matrix.hpp"
#include "burnside/rational.hpp"

namespace burnside {

/// A finite poset: labelled elements plus the full (reflexive, antisymmetric,
/// transitive) order relation.
class Poset {
public:
    Poset() = default;  // empty poset
    Poset(std::vector<std::string> labels, std::vector<std::vector<char>> leq);

    static Poset antichain(std::size_t n);
    static Poset chain(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b] != 0; }

    std::size_t index_of(const std::string& label) const;
    bool has_label(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<char>> leq_;
};

/// Classical Möbius function: the inverse of the order relation's zeta matrix,
/// computed exactly (integer-valued).
Matrix<Rational> mobius(const Poset& P);

/// P plus a new maximum (resp. minimum) element; throws on label collision.
Poset augment_top(const Poset& P, const std::string& label = "inf");
Poset augment_bottom(const Poset& P, const std::string& label = "-inf");

/// chi(P) = sum of all Möbius values; chi of the empty poset is 0.
Rational euler_char(const Poset& P);
/// chi~(P) = chi(P) - 1, so chi~(empty) = -1.
Rational reduced_euler_char(const Poset& P);

enum class IntervalMode { Greater, Less, AtLeast, AtMost };

/// Induced subposet of elements strictly above / below (Greater / Less) or
/// weakly above / below (AtLeast / AtMost) the given element.
Poset interval(const Poset& P, std::size_t element, IntervalMode mode);

/// Number of strictly increasing chains x_0 < ... < x_n (n+1 elements).
Integer chain_count(const Poset& P, std::size_t n);

}  // namespace burnside
