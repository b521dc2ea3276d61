#pragma once

#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/collection.hpp"
#include "burnside/fincat.hpp"

namespace burnside {

enum class Decomposition { Subgroup, Centralizer };

/// The orbit category O_E: objects the members of E, hom-sizes the counts of
/// G-maps G/H -> G/K, iso classes the G-conjugacy classes. EI by construction.
FinCat orbit_category(const SubgroupCollection& E);

/// The fusion category F_E: objects E, hom-sizes the counts of group
/// homomorphisms H -> K induced by conjugation in G. EI by construction.
FinCat fusion_category(const SubgroupCollection& E);

/// Closed-form skeletal weighting of O_E: k(H) = -chi~(E_{>H}) / |G:H|.
WeightFunction orbit_weighting(const SubgroupCollection& E);

/// Closed-form skeletal coweighting of F_E: t(K) = -chi~(E_{<K}) / |G:C_G(K)|.
WeightFunction fusion_coweighting(const SubgroupCollection& E);

/// A functor to finite G-sets, up to isomorphism: each object carries a
/// multiset of transitive pieces, recorded by subgroup class.
struct GSetAssignment {
    PermGroup group;
    std::vector<std::vector<std::size_t>> orbit_classes;  // per object
};

/// The series Lefschetz invariant of the Grothendieck construction of F over
/// C: the weighted sum of the [F(x)] with the skeletal weights of C.
BurnsideElement grothendieck_lefschetz(const FinCat& C, const GSetAssignment& F);

/// Lambda_Sigma of the subgroup decomposition category of E, in the
/// transitive basis (unreduced; subtract [G/G] for the reduced invariant).
BurnsideElement lefschetz_subgroup(const SubgroupCollection& E);

/// Lambda_Sigma of the centralizer decomposition category of E.
BurnsideElement lefschetz_centralizer(const SubgroupCollection& E);

/// Closed-form idempotent coordinates of the REDUCED invariant, computed from
/// poset Euler characteristics: an independent path from lefschetz_* + marks.
std::vector<Rational> idempotent_expansion_reduced(const SubgroupCollection& E,
                                                   Decomposition which);

/// The H-fixed subcategory, up to equivalence, as a poset: E_{>=H} for the
/// subgroup decomposition and E_{<=C_G(H)} for the centralizer one.
Poset fixed_point_poset(const SubgroupCollection& E, Decomposition which, const Subgroup& H);

}  // namespace burnside
