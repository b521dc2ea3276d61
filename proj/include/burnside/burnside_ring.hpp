#pragma once

#include <map>
#include <vector>

#include "burnside/collection.hpp"
#include "burnside/matrix.hpp"
#include "burnside/permgroup.hpp"
#include "burnside/rational.hpp"

namespace burnside {

/// Table of marks of G: marks(H, K) = |(G/H)^K| over the canonical ordering of
/// subgroup classes. Lower triangular with positive diagonal, hence invertible.
/// A cheap handle: the matrix itself is computed once per group and shared.
class TableOfMarks {
public:
    explicit TableOfMarks(const PermGroup& G);
    /// The shared per-group matrix.
    static TableOfMarks of(const PermGroup& G);

    const PermGroup& group() const { return group_; }
    std::size_t class_count() const { return marks().rows(); }
    const Matrix<Rational>& marks() const { return shared_ ? *shared_ : *owned_; }
    const Rational& mark(std::size_t H_cls, std::size_t K_cls) const {
        return marks()(H_cls, K_cls);
    }

private:
    TableOfMarks(PermGroup group, const Matrix<Rational>* shared)
        : group_(std::move(group)), shared_(shared) {}

    PermGroup group_;
    const Matrix<Rational>* shared_ = nullptr;  // lives in the group's cache
    std::shared_ptr<const Matrix<Rational>> owned_;
};

/// An element of the rational Burnside ring Omega(G) in the transitive basis:
/// a sparse map from subgroup classes to coefficients (absent key = 0).
class BurnsideElement {
public:
    explicit BurnsideElement(PermGroup group) : group_(std::move(group)) {}
    /// [G/H] for the given subgroup class.
    static BurnsideElement basis(const PermGroup& G, std::size_t cls);
    /// [G/G], the ring identity.
    static BurnsideElement one(const PermGroup& G);

    const PermGroup& group() const { return group_; }
    const std::map<std::size_t, Rational>& coords() const { return coords_; }
    Rational coeff(std::size_t cls) const;
    bool is_zero() const { return coords_.empty(); }

    BurnsideElement& add_term(std::size_t cls, const Rational& c);

    friend BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b);
    friend BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b);
    friend BurnsideElement operator*(const BurnsideElement& a, const Rational& c);
    /// Product in Omega(G), computed through marks (pointwise) and back.
    friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
    friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

    /// The mark vector (m_K(x)) over all classes K; these are exactly the
    /// coordinates of x in the primitive idempotent basis.
    std::vector<Rational> marks_vector() const;
    std::vector<Rational> to_idempotent_coords() const { return marks_vector(); }
    /// Solves the triangular marks system exactly; inverse of the above.
    static BurnsideElement from_idempotent_coords(const PermGroup& G,
                                                  const std::vector<Rational>& v);

private:
    PermGroup group_;
    std::map<std::size_t, Rational> coords_;
};

/// Restriction to K <= G: each [G/H] decomposes into K-orbits of cosets with
/// stabilizers K meet gHg^-1. Returns an element over K.as_group().
BurnsideElement restrict_to(const BurnsideElement& x, const Subgroup& K);

/// Induction along K <= G: [K/L] goes to [G/L], linearly. The element must
/// live over a group whose elements all belong to G.
BurnsideElement induce_to(const BurnsideElement& x, const PermGroup& G);

/// eps_E = sum of the primitive idempotents eps_H over the classes in E.
BurnsideElement collection_idempotent(const SubgroupCollection& E);

}  // namespace burnside
