#pragma once

#include <vector>

#include "burnside/permgroup.hpp"
#include "burnside/poset.hpp"

namespace burnside {

/// A set of subgroups closed under G-conjugation: the universal input of every
/// decomposition and induction formula. Construction conjugation-closes the
/// given members and records whether closure added anything.
class SubgroupCollection {
public:
    SubgroupCollection(PermGroup group, const std::vector<Subgroup>& members);

    const PermGroup& group() const { return group_; }
    const std::vector<Subgroup>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(const Subgroup& H) const;
    bool contains_class(std::size_t cls) const;
    /// The distinct G-conjugacy classes present, sorted.
    const std::vector<std::size_t>& classes() const { return classes_; }
    /// True when conjugation closure added members beyond the input.
    bool closure_added() const { return closure_added_; }

private:
    PermGroup group_;
    std::vector<Subgroup> members_;      // sorted by (order, element list)
    std::vector<std::size_t> classes_;   // sorted class indices
    bool closure_added_ = false;
};

/// All cyclic subgroups of G.
SubgroupCollection cyclic_collection(const PermGroup& G);
/// All subgroups of G.
SubgroupCollection full_collection(const PermGroup& G);

/// The members of E ordered by inclusion; labels are the canonical generator
/// strings of the members.
Poset containment_poset(const SubgroupCollection& E);

/// The subposet of E consisting of members strictly/weakly containing or
/// contained in H (which need not belong to E): E_{>H}, E_{<H}, E_{>=H},
/// E_{<=H} for modes Greater, Less, AtLeast, AtMost.
Poset containment_interval(const SubgroupCollection& E, const Subgroup& H, IntervalMode mode);

}  // namespace burnside
