// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All arithmetic is exact, so every comparison below is equality.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "burnside/induction.hpp"

using namespace burnside;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

Rational rat(long long p, long long q = 1) { return Rational(Integer(p), Integer(q)); }

Subgroup sub(const PermGroup& G, std::initializer_list<std::string> gens) {
    std::vector<Permutation> ps;
    for (const auto& s : gens) ps.push_back(Permutation::parse_cycles(s, G.degree()));
    return Subgroup::from_permutations(G, ps);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Rational coeff_of(const InductionFormula& f, std::size_t cls) {
    for (const auto& t : f.terms)
        if (t.class_index == cls) return t.coefficient;
    return rat(0);
}

// 1. The S4 formula over the centralizers of cyclic subgroups, with the
//    expected coefficients, character-verified, in under 5 seconds.
void criterion1() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    PermGroup s4 = PermGroup::named("S4");
    SubgroupCollection E = parse_collection(s4, "centralizers-of:cyclic");
    InductionFormula f = formula_centralizer(s4, E, RingSpec::none());

    std::size_t cls_1 = s4.class_of(s4.trivial_subgroup());
    std::size_t cls_c2pp = s4.class_of(sub(s4, {"(0 1)(2 3)"}));
    std::size_t cls_v4p = s4.class_of(sub(s4, {"(0 1)", "(2 3)"}));
    std::size_t cls_c4 = s4.class_of(sub(s4, {"(0 1 2 3)"}));
    std::size_t cls_c3 = s4.class_of(sub(s4, {"(0 1 2)"}));

    pass = pass && f.terms.size() == 5;
    pass = pass && coeff_of(f, cls_1) == rat(-6, 24);
    pass = pass && coeff_of(f, cls_c2pp) == rat(3) * rat(-1, 12);
    pass = pass && coeff_of(f, cls_v4p) == rat(3) * rat(1, 6);
    pass = pass && coeff_of(f, cls_c4) == rat(3) * rat(1, 6);
    pass = pass && coeff_of(f, cls_c3) == rat(4) * rat(1, 8);
    CharacterReport rep = verify_character(f);
    pass = pass && rep.ok;
    for (const auto& r : rep.residuals) pass = pass && r.is_zero();
    double t = seconds_since(start);
    pass = pass && t < 5.0;
    std::ostringstream detail;
    detail << "coefficients -6/24, 3x(-1/12), 3x(1/6), 3x(1/6), 4x(1/8); " << t << " s";
    report(1, "S4 centralizer formula", pass, detail.str());
}

// 2. The A4 pair: direct formula, Mackey-restricted formula, and the
//    non-canonicity they witness.
void criterion2() {
    bool pass = true;
    PermGroup s4 = PermGroup::named("S4");
    Subgroup a4sub = sub(s4, {"(0 1 2)", "(0 1)(2 3)"});
    CanonicityReport rep =
        canonicity_check(s4, "centralizers-of:cyclic", Decomposition::Centralizer, a4sub);

    const PermGroup& a4 = rep.direct.group;
    std::size_t a_1 = a4.class_of(a4.trivial_subgroup());
    std::size_t a_c2 = a4.class_of(sub(a4, {"(0 1)(2 3)"}));
    std::size_t a_v4 = a4.class_of(sub(a4, {"(0 1)(2 3)", "(0 2)(1 3)"}));
    std::size_t a_c3 = a4.class_of(sub(a4, {"(0 1 2)"}));

    pass = pass && rep.direct.terms.size() == 3;
    pass = pass && coeff_of(rep.direct, a_1) == rat(-4, 12);
    pass = pass && coeff_of(rep.direct, a_v4) == rat(1, 3);
    pass = pass && coeff_of(rep.direct, a_c3) == rat(4) * rat(1, 4);

    pass = pass && rep.restricted.terms.size() == 3;
    pass = pass && coeff_of(rep.restricted, a_1) == rat(-1, 2);
    pass = pass && coeff_of(rep.restricted, a_c2) == rat(1, 2);
    pass = pass && coeff_of(rep.restricted, a_c3) == rat(1);

    pass = pass && !rep.canonical;
    pass = pass && verify_character(rep.direct).ok && verify_character(rep.restricted).ok;
    report(2, "A4 direct and restricted formulas, NOT canonical", pass,
           "direct -4/12, 1/3, 4x1/4; restricted -1/2, 1/2, 1");
}

// 3. Möbius values of the bottom-augmented S4 and A4 centralizer posets.
void criterion3() {
    bool pass = true;

    PermGroup s4 = PermGroup::named("S4");
    SubgroupCollection E = parse_collection(s4, "centralizers-of:cyclic");
    Poset em = augment_bottom(containment_poset(E));
    Matrix<Rational> mu = mobius(em);
    std::size_t bottom = em.index_of("-inf");
    pass = pass && mu(bottom, bottom) == rat(1);
    for (std::size_t i = 0; i < E.size(); ++i) {
        const Subgroup& H = E.members()[i];
        Rational expect = H.order() == 24 ? rat(6) : H.order() == 8 ? rat(1) : rat(-1);
        pass = pass && mu(bottom, i) == expect;
    }

    PermGroup a4 = PermGroup::named("A4");
    SubgroupCollection E2 = parse_collection(a4, "centralizers-of:cyclic");
    Poset em2 = augment_bottom(containment_poset(E2));
    Matrix<Rational> mu2 = mobius(em2);
    std::size_t bottom2 = em2.index_of("-inf");
    pass = pass && mu2(bottom2, bottom2) == rat(1);
    for (std::size_t i = 0; i < E2.size(); ++i) {
        Rational expect = E2.members()[i].order() == 12 ? rat(4) : rat(-1);
        pass = pass && mu2(bottom2, i) == expect;
    }
    report(3, "Mobius values of augmented centralizer posets", pass,
           "+6,+1,-1,-1,-1,+1 and +4,-1,-1,+1");
}

std::vector<std::string> battery_corpus() {
    std::vector<std::string> corpus;
    for (int n = 1; n <= 48; ++n) corpus.push_back("C" + std::to_string(n));
    for (int n = 6; n <= 48; n += 2) corpus.push_back("D" + std::to_string(n));
    for (int n = 1; n <= 4; ++n) corpus.push_back("S" + std::to_string(n));
    for (int n = 1; n <= 4; ++n) corpus.push_back("A" + std::to_string(n));
    corpus.push_back("Q8");
    corpus.push_back("perm:4:(0 1)(2 3);(0 2)(1 3)");  // V4
    return corpus;
}

// 4. Brauer/Webb battery: every named group of order <= 48 in the corpus,
//    ring specs none/{2}/{3}/{2,3}, zero residuals, under 60 s total.
void criterion4() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::size_t runs = 0;
    std::vector<RingSpec> rings = {RingSpec::none(), RingSpec::of({2}), RingSpec::of({3}),
                                   RingSpec::of({2, 3})};
    for (const auto& name : battery_corpus()) {
        PermGroup G = PermGroup::named(name);
        for (const auto& ring : rings) {
            SubgroupCollection prim = primordial_subgroups(G, ring);
            InductionFormula f = formula_subgroup(G, prim, ring);
            CharacterReport rep = verify_character(f);
            bool here = f.hypothesis_ok && rep.ok;
            for (const auto& r : rep.residuals) here = here && r.is_zero();
            if (!here) pass = false;
            ++runs;
        }
    }
    double t = seconds_since(start);
    pass = pass && t < 60.0;
    std::ostringstream detail;
    detail << runs << " formulas over " << battery_corpus().size() << " groups; " << t << " s";
    report(4, "Brauer/Webb battery", pass, detail.str());
}

// 5. Dual-path Lefschetz identity on at least 200 (group, collection,
//    decomposition) triples.
void criterion5() {
    bool pass = true;
    std::size_t triples = 0;
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 6; n <= 16; n += 2) names.push_back("D" + std::to_string(n));
    for (const char* s : {"S2", "S3", "S4", "A3", "A4", "Q8", "perm:4:(0 1)(2 3);(0 2)(1 3)"})
        names.push_back(s);
    std::vector<std::string> collections = {"cyclic", "all", "primordial:2", "primordial:3",
                                            "centralizers-of:cyclic"};
    for (const auto& name : names) {
        PermGroup G = PermGroup::named(name);
        const auto& classes = G.subgroup_classes();
        for (const auto& cspec : collections) {
            SubgroupCollection E = parse_collection(G, cspec);
            for (Decomposition which : {Decomposition::Subgroup, Decomposition::Centralizer}) {
                BurnsideElement lam = which == Decomposition::Subgroup
                                          ? lefschetz_subgroup(E)
                                          : lefschetz_centralizer(E);
                std::vector<Rational> marks = lam.marks_vector();
                for (std::size_t cls = 0; cls < classes.size(); ++cls) {
                    Rational chi =
                        euler_char(fixed_point_poset(E, which, classes[cls].representative));
                    if (marks[cls] != chi) pass = false;
                }
                ++triples;
            }
        }
    }
    pass = pass && triples >= 200;
    std::ostringstream detail;
    detail << triples << " triples, every mark equals the fixed-point poset Euler characteristic";
    report(5, "dual-path Lefschetz identity", pass, detail.str());
}

// 6. Closed-form weightings equal the linear-algebra skeletal weightings.
void criterion6() {
    bool pass = true;
    std::size_t checked = 0;
    std::vector<std::string> names = {"S4", "A4", "S3", "D8", "D12", "Q8", "C12", "C6",
                                      "perm:4:(0 1)(2 3);(0 2)(1 3)"};
    std::vector<std::string> collections = {"cyclic", "all", "primordial:2",
                                            "centralizers-of:cyclic"};
    for (const auto& name : names) {
        PermGroup G = PermGroup::named(name);
        for (const auto& cspec : collections) {
            SubgroupCollection E = parse_collection(G, cspec);
            if (orbit_weighting(E).values != skeletal_weighting(orbit_category(E)).values)
                pass = false;
            if (fusion_coweighting(E).values != skeletal_coweighting(fusion_category(E)).values)
                pass = false;
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << checked << " collections, orbit and fusion paths";
    report(6, "weighting cross-check", pass, detail.str());
}

// 7. Series machinery: one-object groups, Taylor-vs-nerve to degree 20, and
//    chi_Sigma = chi on the EI corpus.
void criterion7() {
    bool pass = true;
    for (long long n = 1; n <= 24; ++n) {
        if (series_euler(one_object_category(n, true)) != rat(1, n)) pass = false;
    }

    std::vector<FinCat> corpus;
    for (std::size_t n = 1; n <= 8; ++n) corpus.push_back(one_object_category(n, true));
    corpus.push_back(discrete_category(1));
    corpus.push_back(discrete_category(5));
    corpus.push_back(poset_category(Poset::chain(3)));
    corpus.push_back(poset_category(Poset::antichain(4)));
    for (const char* name : {"S4", "A4", "D8"}) {
        PermGroup G = PermGroup::named(name);
        SubgroupCollection E = cyclic_collection(G);
        corpus.push_back(orbit_category(E));
        corpus.push_back(fusion_category(E));
    }
    corpus.push_back(orbit_category(full_collection(PermGroup::named("S4"))));
    for (const auto& C : corpus) {
        std::vector<Rational> coeffs = series_generating(C).taylor(20);
        for (std::size_t n = 0; n <= 20; ++n)
            if (coeffs[n] != Rational(nerve_count(C, n))) pass = false;
        if (C.is_ei() && series_euler(C) != euler_char(C)) pass = false;
    }
    std::ostringstream detail;
    detail << "chi_Sigma(BC_n) = 1/n for n <= 24; " << corpus.size()
           << " categories match nerve counts to degree 20";
    report(7, "series machinery", pass, detail.str());
}

// 8. Canonicity positive control: the subgroup-closed cyclic recipe restricts
//    canonically to every subgroup of S4 and of D8.
void criterion8() {
    bool pass = true;
    std::size_t checked = 0;
    for (const char* name : {"S4", "D8"}) {
        PermGroup G = PermGroup::named(name);
        for (const auto& K : G.all_subgroups()) {
            CanonicityReport rep = canonicity_check(G, "cyclic", Decomposition::Subgroup, K);
            if (!rep.canonical) pass = false;
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << checked << " subgroups of S4 and D8";
    report(8, "canonicity positive control", pass, detail.str());
}

// 9. Idempotent support for the worked-example collection.
void criterion9() {
    PermGroup s4 = PermGroup::named("S4");
    SubgroupCollection E = parse_collection(s4, "centralizers-of:cyclic");
    SupportReport rep = verify_idempotent_support(s4, E, Decomposition::Centralizer);
    bool pass = rep.ok && rep.required_classes.size() == 6;
    for (std::size_t cls : rep.required_classes) pass = pass && rep.marks[cls] == rat(1);
    report(9, "idempotent support on the S4 centralizer collection", pass,
           "marks are 1 on all 6 classes K with C_G(K) in E");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
    return 1;
}
