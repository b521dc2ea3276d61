#include "burnside/collection.hpp"

#include <algorithm>
#include <set>

namespace burnside {

SubgroupCollection::SubgroupCollection(PermGroup group, const std::vector<Subgroup>& members)
    : group_(std::move(group)) {
    std::set<std::vector<std::size_t>> elems;
    for (const auto& H : members) {
        if (!H.parent().same_group(group_))
            throw std::invalid_argument("SubgroupCollection: member of a different group");
        elems.insert(H.element_indices());
    }
    std::set<std::size_t> classes;
    for (const auto& H : members) classes.insert(group_.class_of(H));
    const auto all_classes = group_.subgroup_classes();
    members_.clear();
    for (std::size_t cls : classes) {
        for (const auto& M : all_classes[cls].members) {
            if (elems.insert(M.element_indices()).second) closure_added_ = true;
            members_.push_back(M);
        }
    }
    std::sort(members_.begin(), members_.end());
    classes_.assign(classes.begin(), classes.end());
}

bool SubgroupCollection::contains(const Subgroup& H) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), H);
    return it != members_.end() && *it == H;
}

bool SubgroupCollection::contains_class(std::size_t cls) const {
    return std::binary_search(classes_.begin(), classes_.end(), cls);
}

SubgroupCollection cyclic_collection(const PermGroup& G) {
    std::vector<Subgroup> members;
    for (const auto& H : G.all_subgroups())
        if (H.is_cyclic()) members.push_back(H);
    return SubgroupCollection(G, members);
}

SubgroupCollection full_collection(const PermGroup& G) {
    return SubgroupCollection(G, G.all_subgroups());
}

Poset containment_poset(const SubgroupCollection& E) {
    const auto& ms = E.members();
    std::vector<std::string> labels(ms.size());
    std::vector<std::vector<char>> leq(ms.size(), std::vector<char>(ms.size(), 0));
    for (std::size_t i = 0; i < ms.size(); ++i) {
        labels[i] = ms[i].generator_string();
        for (std::size_t j = 0; j < ms.size(); ++j) leq[i][j] = ms[j].contains(ms[i]) ? 1 : 0;
    }
    return Poset(std::move(labels), std::move(leq));
}

Poset containment_interval(const SubgroupCollection& E, const Subgroup& H, IntervalMode mode) {
    std::vector<Subgroup> keep;
    for (const auto& K : E.members()) {
        bool in = false;
        switch (mode) {
            case IntervalMode::Greater: in = K.contains(H) && K.order() != H.order(); break;
            case IntervalMode::Less: in = H.contains(K) && K.order() != H.order(); break;
            case IntervalMode::AtLeast: in = K.contains(H); break;
            case IntervalMode::AtMost: in = H.contains(K); break;
        }
        if (in) keep.push_back(K);
    }
    std::vector<std::string> labels(keep.size());
    std::vector<std::vector<char>> leq(keep.size(), std::vector<char>(keep.size(), 0));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        labels[i] = keep[i].generator_string();
        for (std::size_t j = 0; j < keep.size(); ++j) leq[i][j] = keep[j].contains(keep[i]) ? 1 : 0;
    }
    return Poset(std::move(labels), std::move(leq));
}

}  // namespace burnside
