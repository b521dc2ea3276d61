#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/decomposition.hpp"

namespace burnside {

/// Which primes of the coefficient ring are not invertible. all_primes models
/// the integers; the explicit list must then be empty.
struct RingSpec {
    std::set<unsigned> primes;
    bool all_primes = false;

    static RingSpec none() { return {}; }
    static RingSpec all() { return {{}, true}; }
    static RingSpec of(std::initializer_list<unsigned> ps);
    /// "none" (or empty), "all", or a comma-separated prime list like "2,3".
    static RingSpec parse(std::string_view s);
    std::string str() const;

    /// The non-invertible primes that can matter for subgroups of a group of
    /// the given order.
    std::vector<unsigned> effective_primes(std::size_t group_order) const;
};

/// One collected term of an induction formula: the coefficient of
/// ind_H^G(1_H) for the class [H].
struct FormulaTerm {
    std::size_t class_index;
    Rational coefficient;
    friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

/// An identity 1_G = sum over terms of coefficient * ind_H^G(1_H), with
/// coefficients collected per conjugacy class and zero terms dropped.
/// The source collection is kept for hypothesis checks when known; it is not
/// part of the wire format.
struct InductionFormula {
    PermGroup group;
    Decomposition decomposition = Decomposition::Subgroup;
    RingSpec ring;
    std::vector<FormulaTerm> terms;  // sorted by class index
    bool hypothesis_ok = true;
    std::optional<bool> verified;
    std::optional<SubgroupCollection> collection;
};

/// Same group (by value), same decomposition tag, and identical term lists.
bool formulas_equal(const InductionFormula& a, const InductionFormula& b);

/// Dress primordial subgroups for the rational representation ring over a
/// ring with the given non-invertible primes: all cyclic H, plus all H with
/// H/O_p(H) cyclic for some non-invertible p.
SubgroupCollection primordial_subgroups(const PermGroup& G, const RingSpec& ring);

/// Conjugation closure of the centralizers of the members of E.
SubgroupCollection centralizer_collection(const SubgroupCollection& E);

/// Downward closure of E under taking subgroups.
SubgroupCollection subgroup_closure(const SubgroupCollection& E);

/// Collection spec grammar: "cyclic", "all", "primordial:<p,q|all|none>",
/// "centralizers-of:<collection>", or an explicit JSON list of generator
/// lists like [["(0 1)","(2 3)"],["(0 1 2)"]].
SubgroupCollection parse_collection(const PermGroup& G, std::string_view spec);

/// 1_G = sum over [H] in E of -chi~(E_{>H})/|G:H| ind_H^G(1_H), collected per
/// class. The hypothesis flag records whether E contains the primordial
/// subgroups for the given ring; a failing hypothesis is reported, not fatal.
InductionFormula formula_subgroup(const PermGroup& G, const SubgroupCollection& E,
                                  const RingSpec& ring = RingSpec::none());

/// 1_G = sum over [H] in E of -chi~(E_{<H})/|G:C_G(H)| ind_{C_G(H)}^G(1),
/// with terms landing on the same centralizer class merged.
InductionFormula formula_centralizer(const PermGroup& G, const SubgroupCollection& E,
                                     const RingSpec& ring = RingSpec::none());

/// Character verification: the formula holds in the complex character ring
/// iff sum of coefficient * |fixed points of g on G/H| is 1 for every g.
/// Residuals are listed per element conjugacy class; ok iff all are zero.
struct CharacterReport {
    bool ok = false;
    std::vector<Rational> residuals;
};
CharacterReport verify_character(const InductionFormula& f);

/// Checks m_K(Lambda_Sigma) = 1 on every class K in E (subgroup case) resp.
/// every K with C_G(K) in E (centralizer case): exactly where the reduced
/// invariant must vanish.
struct SupportReport {
    bool ok = false;
    std::vector<std::size_t> required_classes;
    std::vector<Rational> marks;  // over all classes
};
SupportReport verify_idempotent_support(const PermGroup& G, const SubgroupCollection& E,
                                        Decomposition which);

/// Mackey restriction: push every [G/H] down to K and collect; the result
/// asserts 1_K = sum gamma_L ind_L^K(1_L) over K.as_group().
InductionFormula mackey_restrict_formula(const InductionFormula& f, const Subgroup& K);

/// Applies the recipe (collection spec + decomposition) to G, restricts to K,
/// applies the same recipe directly to K, and compares term by term.
struct CanonicityReport {
    bool canonical = false;
    InductionFormula restricted;
    InductionFormula direct;
};
CanonicityReport canonicity_check(const PermGroup& G, std::string_view collection_spec,
                                  Decomposition which, const Subgroup& K);

/// Coefficient list of the formal wedge decomposition of the p-completed
/// classifying spectrum; reporting only, no topology. The hypothesis flag
/// records whether the formula's collection contains C_G(K) for every K with
/// K/O_p(K) cyclic; it is false when the collection is unknown.
struct WedgeReport {
    unsigned prime = 2;
    bool hypothesis_ok = false;
    PermGroup group;
    std::vector<FormulaTerm> terms;
};
WedgeReport wedge_report(const InductionFormula& f, unsigned p);

}  // namespace burnside
