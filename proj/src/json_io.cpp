#include "burnside/json_io.hpp"

#include <map>

namespace burnside {

using nlohmann::json;

namespace {

json subgroup_to_json(const Subgroup& H) {
    json gens = json::array();
    for (std::size_t g : H.generator_indices())
        gens.push_back(H.parent().element(g).cycle_string());
    if (gens.empty()) gens.push_back("()");
    return json{{"generators", gens}, {"order", H.order()}};
}

}  // namespace

json formula_to_json(const InductionFormula& f) {
    const auto& classes = f.group.subgroup_classes();
    json terms = json::array();
    for (const auto& t : f.terms) {
        const auto& cls = classes[t.class_index];
        terms.push_back(json{{"subgroup", subgroup_to_json(cls.representative)},
                             {"class_size", cls.size()},
                             {"coefficient", t.coefficient.str()}});
    }
    json out{{"group", f.group.display_name()},
             {"decomposition", f.decomposition == Decomposition::Subgroup ? "subgroup" : "centralizer"},
             {"ring_primes", f.ring.str()},
             {"terms", terms},
             {"hypothesis_ok", f.hypothesis_ok}};
    if (f.verified)
        out["verified"] = *f.verified;
    else
        out["verified"] = nullptr;
    return out;
}

InductionFormula formula_from_json(const json& j, std::size_t cap) {
    if (!j.is_object() || !j.contains("group") || !j.contains("terms"))
        throw SpecError("formula JSON: missing group or terms");
    InductionFormula f;
    f.group = PermGroup::named(j.at("group").get<std::string>(), cap);
    std::string deco = j.value("decomposition", "subgroup");
    if (deco == "subgroup")
        f.decomposition = Decomposition::Subgroup;
    else if (deco == "centralizer")
        f.decomposition = Decomposition::Centralizer;
    else
        throw SpecError("formula JSON: unknown decomposition " + deco);
    f.ring = RingSpec::parse(j.value("ring_primes", "none"));
    f.hypothesis_ok = j.value("hypothesis_ok", true);
    if (j.contains("verified") && !j.at("verified").is_null())
        f.verified = j.at("verified").get<bool>();
    std::map<std::size_t, Rational> collected;
    for (const auto& term : j.at("terms")) {
        std::vector<Permutation> gens;
        for (const auto& s : term.at("subgroup").at("generators"))
            gens.push_back(Permutation::parse_cycles(s.get<std::string>(), f.group.degree()));
        Subgroup H = Subgroup::from_permutations(f.group, gens);
        if (term.at("subgroup").contains("order") &&
            term.at("subgroup").at("order").get<std::size_t>() != H.order())
            throw SpecError("formula JSON: subgroup order mismatch");
        collected[f.group.class_of(H)] += Rational::parse(term.at("coefficient").get<std::string>());
    }
    for (const auto& [cls, coeff] : collected)
        if (!coeff.is_zero()) f.terms.push_back({cls, coeff});
    return f;
}

json burnside_to_json(const BurnsideElement& x) {
    const auto& classes = x.group().subgroup_classes();
    json out = json::array();
    for (const auto& [cls, coeff] : x.coords()) {
        const auto& c = classes[cls];
        out.push_back(json{{"subgroup_class_key", c.representative.generator_string()},
                           {"order", c.representative.order()},
                           {"index", c.representative.index_in_parent()},
                           {"class_size", c.size()},
                           {"coefficient", coeff.str()}});
    }
    return out;
}

json poset_to_json(const Poset& P) {
    json leq = json::array();
    for (std::size_t i = 0; i < P.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < P.size(); ++j) row.push_back(P.leq(i, j));
        leq.push_back(row);
    }
    return json{{"labels", P.labels()}, {"leq", leq}};
}

json fincat_to_json(const FinCat& C) {
    json zeta = json::array();
    for (std::size_t i = 0; i < C.object_count(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < C.object_count(); ++j)
            row.push_back(C.zeta()(i, j).num().str());
        zeta.push_back(row);
    }
    return json{{"objects", C.objects()},
                {"zeta", zeta},
                {"iso_classes", C.iso_classes()},
                {"ei", C.is_ei()}};
}

FinCat fincat_from_json(const json& j) {
    std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
    Matrix<Rational> zeta(objects.size(), objects.size());
    const auto& zj = j.at("zeta");
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t k = 0; k < objects.size(); ++k) {
            const auto& cell = zj.at(i).at(k);
            zeta(i, k) = cell.is_string() ? Rational::parse(cell.get<std::string>())
                                          : Rational(cell.get<long long>());
        }
    auto iso = j.at("iso_classes").get<std::vector<std::vector<std::size_t>>>();
    return FinCat(std::move(objects), std::move(zeta), std::move(iso), j.value("ei", false));
}

json character_report_to_json(const CharacterReport& r, const PermGroup& G) {
    json residuals = json::array();
    const auto& classes = G.element_classes();
    for (std::size_t i = 0; i < r.residuals.size(); ++i) {
        residuals.push_back(
            json{{"element", G.element(classes[i].representative).cycle_string()},
                 {"class_size", classes[i].size()},
                 {"residual", r.residuals[i].str()}});
    }
    return json{{"ok", r.ok}, {"residuals", residuals}};
}

json support_report_to_json(const SupportReport& r, const PermGroup& G) {
    const auto& classes = G.subgroup_classes();
    json marks = json::array();
    for (std::size_t cls = 0; cls < r.marks.size(); ++cls)
        marks.push_back(json{{"subgroup_class_key", classes[cls].representative.generator_string()},
                             {"mark", r.marks[cls].str()}});
    json required = json::array();
    for (std::size_t cls : r.required_classes)
        required.push_back(classes[cls].representative.generator_string());
    return json{{"ok", r.ok}, {"required_classes", required}, {"marks", marks}};
}

json wedge_report_to_json(const WedgeReport& w) {
    const auto& classes = w.group.subgroup_classes();
    json terms = json::array();
    for (const auto& t : w.terms) {
        const auto& cls = classes[t.class_index];
        terms.push_back(json{{"subgroup", subgroup_to_json(cls.representative)},
                             {"class_size", cls.size()},
                             {"multiplicity", t.coefficient.str()}});
    }
    return json{{"prime", w.prime},
                {"group", w.group.display_name()},
                {"hypothesis_ok", w.hypothesis_ok},
                {"wedge", terms}};
}

}  // namespace burnside
