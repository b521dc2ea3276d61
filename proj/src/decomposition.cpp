#include "burnside/decomposition.hpp"

#include <algorithm>
#include <map>

namespace burnside {

namespace {

std::vector<std::string> member_labels(const SubgroupCollection& E) {
    std::vector<std::string> labels(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) labels[i] = E.members()[i].generator_string();
    return labels;
}

std::vector<std::vector<std::size_t>> member_iso_classes(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    std::vector<std::vector<std::size_t>> classes;
    std::map<std::size_t, std::size_t> cls_pos;
    for (std::size_t i = 0; i < E.size(); ++i) {
        std::size_t cls = G.class_of(E.members()[i]);
        auto it = cls_pos.find(cls);
        if (it == cls_pos.end()) {
            cls_pos.emplace(cls, classes.size());
            classes.push_back({i});
        } else {
            classes[it->second].push_back(i);
        }
    }
    return classes;
}

}  // namespace

FinCat orbit_category(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    const TableOfMarks& tom = TableOfMarks::of(G);
    Matrix<Rational> zeta(E.size(), E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        std::size_t ci = G.class_of(E.members()[i]);
        for (std::size_t j = 0; j < E.size(); ++j) {
            // |Map_G(G/H_i, G/H_j)| = |(G/H_j)^{H_i}|
            zeta(i, j) = tom.mark(G.class_of(E.members()[j]), ci);
        }
    }
    return FinCat(member_labels(E), std::move(zeta), member_iso_classes(E), true);
}

FinCat fusion_category(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    // Transporter sizes depend on the class pair only; compute once per pair.
    std::map<std::pair<std::size_t, std::size_t>, Rational> block;
    std::vector<std::size_t> cls(E.size());
    std::vector<std::size_t> centralizer_order(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        cls[i] = G.class_of(E.members()[i]);
        centralizer_order[i] = centralizer(G, E.members()[i]).order();
    }
    Matrix<Rational> zeta(E.size(), E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = 0; j < E.size(); ++j) {
            auto key = std::make_pair(cls[i], cls[j]);
            auto it = block.find(key);
            if (it == block.end()) {
                const Subgroup& H = E.members()[i];
                const Subgroup& K = E.members()[j];
                std::size_t transporter = 0;
                for (std::size_t g = 0; g < G.order(); ++g) {
                    bool inside = true;
                    for (std::size_t h : H.generator_indices())
                        if (!K.contains_index(G.conjugate(g, h))) {
                            inside = false;
                            break;
                        }
                    if (inside) ++transporter;
                }
                it = block.emplace(key, Rational(Integer(transporter / centralizer_order[i])))
                         .first;
            }
            zeta(i, j) = it->second;
        }
    }
    return FinCat(member_labels(E), std::move(zeta), member_iso_classes(E), true);
}

WeightFunction orbit_weighting(const SubgroupCollection& E) {
    WeightFunction k;
    k.values.reserve(E.size());
    for (const auto& H : E.members()) {
        Rational chi = reduced_euler_char(containment_interval(E, H, IntervalMode::Greater));
        k.values.push_back(-chi / Rational(Integer(H.index_in_parent())));
    }
    return k;
}

WeightFunction fusion_coweighting(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    WeightFunction t;
    t.values.reserve(E.size());
    for (const auto& K : E.members()) {
        Rational chi = reduced_euler_char(containment_interval(E, K, IntervalMode::Less));
        std::size_t index = G.order() / centralizer(G, K).order();
        t.values.push_back(-chi / Rational(Integer(index)));
    }
    return t;
}

BurnsideElement grothendieck_lefschetz(const FinCat& C, const GSetAssignment& F) {
    if (F.orbit_classes.size() != C.object_count())
        throw std::invalid_argument("grothendieck_lefschetz: assignment size mismatch");
    WeightFunction k = skeletal_weighting(C);
    BurnsideElement out(F.group);
    for (std::size_t x = 0; x < C.object_count(); ++x)
        for (std::size_t cls : F.orbit_classes[x]) out.add_term(cls, k.values[x]);
    return out;
}

BurnsideElement lefschetz_subgroup(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    WeightFunction k = orbit_weighting(E);
    BurnsideElement out(G);
    for (std::size_t i = 0; i < E.size(); ++i)
        out.add_term(G.class_of(E.members()[i]), k.values[i]);
    return out;
}

BurnsideElement lefschetz_centralizer(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    WeightFunction t = fusion_coweighting(E);
    BurnsideElement out(G);
    for (std::size_t i = 0; i < E.size(); ++i)
        out.add_term(G.class_of(centralizer(G, E.members()[i])), t.values[i]);
    return out;
}

std::vector<Rational> idempotent_expansion_reduced(const SubgroupCollection& E,
                                                   Decomposition which) {
    const PermGroup& G = E.group();
    const auto& classes = G.subgroup_classes();
    std::vector<Rational> out(classes.size(), Rational(0));
    for (std::size_t cls = 0; cls < classes.size(); ++cls) {
        const Subgroup& K = classes[cls].representative;
        if (which == Decomposition::Subgroup) {
            if (E.contains_class(cls)) continue;
            out[cls] = reduced_euler_char(containment_interval(E, K, IntervalMode::Greater));
        } else {
            Subgroup CK = centralizer(G, K);
            if (E.contains_class(G.class_of(CK))) continue;
            out[cls] = reduced_euler_char(containment_interval(E, CK, IntervalMode::Less));
        }
    }
    return out;
}

Poset fixed_point_poset(const SubgroupCollection& E, Decomposition which, const Subgroup& H) {
    if (which == Decomposition::Subgroup)
        return containment_interval(E, H, IntervalMode::AtLeast);
    return containment_interval(E, centralizer(E.group(), H), IntervalMode::AtMost);
}

}  // namespace burnside
