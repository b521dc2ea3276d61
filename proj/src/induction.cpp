#include "burnside/induction.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include <json.hpp>

namespace burnside {

// -------------------------------------------------------------------- RingSpec

RingSpec RingSpec::of(std::initializer_list<unsigned> ps) {
    RingSpec r;
    for (unsigned p : ps) {
        if (!is_prime(p)) throw std::invalid_argument("RingSpec: not a prime");
        r.primes.insert(p);
    }
    return r;
}

RingSpec RingSpec::parse(std::string_view s) {
    if (s.empty() || s == "none") return none();
    if (s == "all") return all();
    RingSpec r;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? comma : comma - start);
        unsigned p = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || !is_prime(p))
            throw SpecError("RingSpec: malformed prime list: " + std::string(s));
        r.primes.insert(p);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return r;
}

std::string RingSpec::str() const {
    if (all_primes) return "all";
    if (primes.empty()) return "none";
    std::string out;
    for (unsigned p : primes) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

std::vector<unsigned> RingSpec::effective_primes(std::size_t group_order) const {
    std::vector<unsigned> out;
    if (all_primes) {
        std::size_t n = group_order;
        for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p)
            if (n % p == 0) {
                out.push_back(p);
                while (n % p == 0) n /= p;
            }
        if (n > 1) out.push_back(static_cast<unsigned>(n));
    } else {
        out.assign(primes.begin(), primes.end());
    }
    return out;
}

// ---------------------------------------------------------------- collections

namespace {

// H/O_p(H) cyclic, decided through the regular action of H on the cosets of
// O_p(H): the quotient is cyclic iff some h acts with coset-order |H : O_p(H)|.
bool quotient_by_p_core_cyclic(const Subgroup& H, unsigned p) {
    const PermGroup& G = H.parent();
    Subgroup N = p_core(H, p);
    std::size_t quotient_order = H.order() / N.order();
    if (quotient_order == 1) return true;
    for (std::size_t h : H.element_indices()) {
        std::size_t k = 1;
        std::size_t cur = h;
        while (!N.contains_index(cur)) {
            cur = G.mul(cur, h);
            ++k;
        }
        if (k == quotient_order) return true;
    }
    return false;
}

}  // namespace

SubgroupCollection primordial_subgroups(const PermGroup& G, const RingSpec& ring) {
    std::vector<unsigned> primes = ring.effective_primes(G.order());
    std::vector<Subgroup> members;
    for (const auto& cls : G.subgroup_classes()) {
        const Subgroup& H = cls.representative;
        bool primordial = H.is_cyclic();
        for (unsigned p : primes) {
            if (primordial) break;
            if (G.order() % p == 0 && quotient_by_p_core_cyclic(H, p)) primordial = true;
        }
        if (primordial)
            members.insert(members.end(), cls.members.begin(), cls.members.end());
    }
    return SubgroupCollection(G, members);
}

SubgroupCollection centralizer_collection(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    std::vector<Subgroup> members;
    members.reserve(E.size());
    for (const auto& H : E.members()) members.push_back(centralizer(G, H));
    return SubgroupCollection(G, members);
}

SubgroupCollection subgroup_closure(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    std::vector<Subgroup> members;
    for (const auto& K : G.all_subgroups())
        for (const auto& H : E.members())
            if (H.contains(K)) {
                members.push_back(K);
                break;
            }
    return SubgroupCollection(G, members);
}

SubgroupCollection parse_collection(const PermGroup& G, std::string_view spec) {
    if (spec == "cyclic") return cyclic_collection(G);
    if (spec == "all") return full_collection(G);
    if (spec.rfind("primordial:", 0) == 0)
        return primordial_subgroups(G, RingSpec::parse(spec.substr(11)));
    if (spec == "primordial") return primordial_subgroups(G, RingSpec::none());
    if (spec.rfind("centralizers-of:", 0) == 0)
        return centralizer_collection(parse_collection(G, spec.substr(16)));
    if (!spec.empty() && spec.front() == '[') {
        nlohmann::json j = nlohmann::json::parse(spec, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw SpecError("malformed collection: " + std::string(spec));
        std::vector<Subgroup> members;
        for (const auto& gens_json : j) {
            if (!gens_json.is_array()) throw SpecError("malformed collection: expected generator lists");
            std::vector<Permutation> gens;
            for (const auto& s : gens_json)
                gens.push_back(Permutation::parse_cycles(s.get<std::string>(), G.degree()));
            members.push_back(Subgroup::from_permutations(G, gens));
        }
        return SubgroupCollection(G, members);
    }
    throw SpecError("malformed collection: " + std::string(spec));
}

// ------------------------------------------------------------------- formulas

bool formulas_equal(const InductionFormula& a, const InductionFormula& b) {
    return a.group == b.group && a.decomposition == b.decomposition && a.terms == b.terms;
}

InductionFormula formula_subgroup(const PermGroup& G, const SubgroupCollection& E,
                                  const RingSpec& ring) {
    InductionFormula f;
    f.group = G;
    f.decomposition = Decomposition::Subgroup;
    f.ring = ring;
    f.collection = E;
    const auto& classes = G.subgroup_classes();
    for (std::size_t cls : E.classes()) {
        const Subgroup& H = classes[cls].representative;
        Rational chi = reduced_euler_char(containment_interval(E, H, IntervalMode::Greater));
        Rational coeff = Rational(Integer(classes[cls].size())) *
                         (-chi / Rational(Integer(H.index_in_parent())));
        if (!coeff.is_zero()) f.terms.push_back({cls, coeff});
    }
    SubgroupCollection prim = primordial_subgroups(G, ring);
    f.hypothesis_ok = std::includes(E.classes().begin(), E.classes().end(),
                                    prim.classes().begin(), prim.classes().end());
    return f;
}

InductionFormula formula_centralizer(const PermGroup& G, const SubgroupCollection& E,
                                     const RingSpec& ring) {
    InductionFormula f;
    f.group = G;
    f.decomposition = Decomposition::Centralizer;
    f.ring = ring;
    f.collection = E;
    const auto& classes = G.subgroup_classes();
    std::map<std::size_t, Rational> collected;
    for (std::size_t cls : E.classes()) {
        const Subgroup& H = classes[cls].representative;
        Rational chi = reduced_euler_char(containment_interval(E, H, IntervalMode::Less));
        Subgroup CH = centralizer(G, H);
        Rational t = -chi / Rational(Integer(G.order() / CH.order()));
        collected[G.class_of(CH)] += Rational(Integer(classes[cls].size())) * t;
    }
    for (const auto& [cls, coeff] : collected)
        if (!coeff.is_zero()) f.terms.push_back({cls, coeff});
    SubgroupCollection prim = primordial_subgroups(G, ring);
    f.hypothesis_ok = true;
    for (std::size_t cls : prim.classes()) {
        Subgroup C = centralizer(G, classes[cls].representative);
        if (!E.contains_class(G.class_of(C))) {
            f.hypothesis_ok = false;
            break;
        }
    }
    return f;
}

CharacterReport verify_character(const InductionFormula& f) {
    const PermGroup& G = f.group;
    const auto& classes = G.subgroup_classes();
    CharacterReport report;
    report.ok = true;
    for (const auto& ecls : G.element_classes()) {
        Rational value(0);
        for (const auto& term : f.terms) {
            std::size_t fixed =
                fixed_point_count(G, ecls.representative, classes[term.class_index].representative);
            value += term.coefficient * Rational(Integer(fixed));
        }
        Rational residual = value - Rational(1);
        if (!residual.is_zero()) report.ok = false;
        report.residuals.push_back(residual);
    }
    return report;
}

SupportReport verify_idempotent_support(const PermGroup& G, const SubgroupCollection& E,
                                        Decomposition which) {
    SupportReport report;
    BurnsideElement lambda =
        which == Decomposition::Subgroup ? lefschetz_subgroup(E) : lefschetz_centralizer(E);
    report.marks = lambda.marks_vector();
    const auto& classes = G.subgroup_classes();
    for (std::size_t cls = 0; cls < classes.size(); ++cls) {
        bool required;
        if (which == Decomposition::Subgroup) {
            required = E.contains_class(cls);
        } else {
            Subgroup C = centralizer(G, classes[cls].representative);
            required = E.contains_class(G.class_of(C));
        }
        if (required) report.required_classes.push_back(cls);
    }
    report.ok = true;
    for (std::size_t cls : report.required_classes)
        if (report.marks[cls] != Rational(1)) report.ok = false;
    return report;
}

InductionFormula mackey_restrict_formula(const InductionFormula& f, const Subgroup& K) {
    BurnsideElement x(f.group);
    for (const auto& term : f.terms) x.add_term(term.class_index, term.coefficient);
    BurnsideElement r = restrict_to(x, K);
    InductionFormula out;
    out.group = r.group();
    out.decomposition = f.decomposition;
    out.ring = f.ring;
    for (const auto& [cls, coeff] : r.coords()) out.terms.push_back({cls, coeff});
    return out;
}

CanonicityReport canonicity_check(const PermGroup& G, std::string_view collection_spec,
                                  Decomposition which, const Subgroup& K) {
    auto build = [&](const PermGroup& target) {
        SubgroupCollection E = parse_collection(target, collection_spec);
        return which == Decomposition::Subgroup ? formula_subgroup(target, E)
                                                : formula_centralizer(target, E);
    };
    CanonicityReport report;
    report.restricted = mackey_restrict_formula(build(G), K);
    report.direct = build(K.as_group());
    report.canonical = formulas_equal(report.restricted, report.direct);
    return report;
}

WedgeReport wedge_report(const InductionFormula& f, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("wedge_report: p must be prime");
    if (f.decomposition != Decomposition::Centralizer)
        throw std::invalid_argument("wedge_report: needs a centralizer-decomposition formula");
    WedgeReport report;
    report.prime = p;
    report.group = f.group;
    report.terms = f.terms;
    report.hypothesis_ok = false;
    if (f.collection) {
        const PermGroup& G = f.group;
        const auto& classes = G.subgroup_classes();
        report.hypothesis_ok = true;
        for (const auto& cls : classes) {
            const Subgroup& Ksub = cls.representative;
            bool relevant = (G.order() % p == 0) ? quotient_by_p_core_cyclic(Ksub, p)
                                                 : Ksub.is_cyclic();
            if (!relevant) continue;
            Subgroup C = centralizer(G, Ksub);
            if (!f.collection->contains_class(G.class_of(C))) {
                report.hypothesis_ok = false;
                break;
            }
        }
    }
    return report;
}

}  // namespace burnside
