#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burnside/burnside_ring.hpp"

using namespace burnside;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(Integer(p), Integer(q)); }

Permutation perm(const std::string& cycles, std::size_t degree) {
    return Permutation::parse_cycles(cycles, degree);
}

// Mackey double-coset oracle: res_K [G/L] = sum over K\G/L of [K / K meet gLg^-1],
// computed from scratch with raw double-coset enumeration.
BurnsideElement mackey_oracle(const PermGroup& G, const Subgroup& K, const Subgroup& L,
                              const PermGroup& KG) {
    BurnsideElement out(KG);
    std::vector<char> used(G.order(), 0);
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (used[g]) continue;
        for (std::size_t k : K.element_indices())
            for (std::size_t l : L.element_indices()) used[G.mul(G.mul(k, g), l)] = 1;
        std::vector<std::size_t> stab;
        for (std::size_t k : K.element_indices()) {
            // k in K meet gLg^-1  iff  g^-1 k g in L
            if (L.contains_index(G.mul(G.mul(G.inv(g), k), g)))
                stab.push_back(KG.index_of(G.element(k)));
        }
        std::sort(stab.begin(), stab.end());
        out.add_term(KG.class_of(Subgroup(KG, stab)), rat(1));
    }
    return out;
}

}  // namespace

TEST_CASE("table of marks basics") {
    PermGroup c2 = PermGroup::named("C2");
    const TableOfMarks& tom2 = TableOfMarks::of(c2);
    CHECK(tom2.class_count() == 2);
    CHECK(tom2.mark(0, 0) == rat(2));
    CHECK(tom2.mark(0, 1) == rat(0));
    CHECK(tom2.mark(1, 0) == rat(1));
    CHECK(tom2.mark(1, 1) == rat(1));

    PermGroup s4 = PermGroup::named("S4");
    const TableOfMarks& tom = TableOfMarks::of(s4);
    const auto& classes = s4.subgroup_classes();
    std::size_t c = tom.class_count();
    CHECK(c == 11);
    for (std::size_t k = 0; k < c; ++k) {
        // row of [G/G] is all ones
        CHECK(tom.mark(c - 1, k) == rat(1));
        // column at the trivial class is the index |G:H|
        CHECK(tom.mark(k, 0) == Rational(Integer(classes[k].representative.index_in_parent())));
        // triangular with positive diagonal
        CHECK(tom.mark(k, k) > rat(0));
        for (std::size_t h = 0; h < c; ++h) {
            if (classes[h].representative.order() % classes[k].representative.order() != 0)
                CHECK(tom.mark(h, k) == rat(0));
            if (k > h) CHECK(tom.mark(h, k) == rat(0));
        }
    }
}

TEST_CASE("marks of basis elements") {
    PermGroup s4 = PermGroup::named("S4");
    std::size_t c = s4.subgroup_classes().size();
    std::vector<Rational> top = BurnsideElement::one(s4).marks_vector();
    for (std::size_t k = 0; k < c; ++k) CHECK(top[k] == rat(1));

    std::vector<Rational> free_orbit = BurnsideElement::basis(s4, 0).marks_vector();
    CHECK(free_orbit[0] == rat(24));
    for (std::size_t k = 1; k < c; ++k) CHECK(free_orbit[k] == rat(0));
}

TEST_CASE("primitive idempotents of C2") {
    PermGroup c2 = PermGroup::named("C2");
    BurnsideElement eps1 = BurnsideElement::from_idempotent_coords(c2, {rat(1), rat(0)});
    CHECK(eps1.coeff(0) == rat(1, 2));
    CHECK(eps1.coeff(1) == rat(0));

    BurnsideElement eps2 = BurnsideElement::from_idempotent_coords(c2, {rat(0), rat(1)});
    CHECK(eps2.coeff(1) == rat(1));
    CHECK(eps2.coeff(0) == rat(-1, 2));
    std::vector<Rational> m = eps2.marks_vector();
    CHECK(m[0] == rat(0));
    CHECK(m[1] == rat(1));

    CHECK(eps1 * eps1 == eps1);
    CHECK(eps2 * eps2 == eps2);
    CHECK((eps1 * eps2).is_zero());
    CHECK(eps1 + eps2 == BurnsideElement::one(c2));
}

TEST_CASE("idempotent coordinate round trips") {
    PermGroup s4 = PermGroup::named("S4");
    std::size_t c = s4.subgroup_classes().size();
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        BurnsideElement x(s4);
        for (std::size_t k = 0; k < c; ++k) x.add_term(k, rat(num(rng), den(rng)));
        BurnsideElement back = BurnsideElement::from_idempotent_coords(s4, x.marks_vector());
        CHECK(back == x);
    }
    // and the other direction
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> v(c);
        for (auto& e : v) e = rat(num(rng), den(rng));
        BurnsideElement x = BurnsideElement::from_idempotent_coords(s4, v);
        CHECK(x.marks_vector() == v);
    }
}

TEST_CASE("marks are ring homomorphisms") {
    PermGroup a4 = PermGroup::named("A4");
    std::size_t c = a4.subgroup_classes().size();
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        BurnsideElement x(a4), y(a4);
        for (std::size_t k = 0; k < c; ++k) {
            x.add_term(k, rat(num(rng)));
            y.add_term(k, rat(num(rng)));
        }
        std::vector<Rational> mx = x.marks_vector();
        std::vector<Rational> my = y.marks_vector();
        std::vector<Rational> mxy = (x * y).marks_vector();
        for (std::size_t k = 0; k < c; ++k) CHECK(mxy[k] == mx[k] * my[k]);
    }
}

TEST_CASE("restriction of transitive G-sets") {
    PermGroup s4 = PermGroup::named("S4");
    Subgroup a4sub = Subgroup::from_permutations(s4, {perm("(0 1 2)", 4), perm("(0 1)(2 3)", 4)});
    PermGroup a4 = a4sub.as_group();

    // [G/G] -> [K/K]
    BurnsideElement top = restrict_to(BurnsideElement::one(s4), a4sub);
    CHECK(top.coords().size() == 1);
    CHECK(top.coeff(top.group().subgroup_classes().size() - 1) == rat(1));

    // [G/1] -> |G:K| [K/1]
    BurnsideElement free_orbit = restrict_to(BurnsideElement::basis(s4, 0), a4sub);
    CHECK(free_orbit.coords().size() == 1);
    CHECK(free_orbit.coeff(0) == rat(2));

    // [S4/D8] -> [A4/V4]: A4 is transitive on the three cosets, stabilizer the
    // even part of D8
    Subgroup d8 = Subgroup::from_permutations(s4, {perm("(0 1)", 4), perm("(0 2 1 3)", 4)});
    BurnsideElement r = restrict_to(BurnsideElement::basis(s4, s4.class_of(d8)), a4sub);
    CHECK(r.coords().size() == 1);
    auto it = r.coords().begin();
    CHECK(it->second == rat(1));
    const Subgroup v4 = a4.subgroup_classes()[it->first].representative;
    CHECK(v4.order() == 4);
    CHECK(v4 == Subgroup::from_permutations(a4, {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)}));
}

TEST_CASE("induction of transitive K-sets") {
    PermGroup s4 = PermGroup::named("S4");
    Subgroup a4sub = Subgroup::from_permutations(s4, {perm("(0 1 2)", 4), perm("(0 1)(2 3)", 4)});
    PermGroup a4 = a4sub.as_group();

    BurnsideElement ind_top = induce_to(BurnsideElement::one(a4), s4);
    CHECK(ind_top == BurnsideElement::basis(s4, s4.class_of(a4sub)));

    BurnsideElement ind_free = induce_to(BurnsideElement::basis(a4, 0), s4);
    CHECK(ind_free == BurnsideElement::basis(s4, 0));

    // f_G([G/H]) = ind_H^G(1_H), realized on the Burnside level
    for (const auto& cls : a4.subgroup_classes()) {
        BurnsideElement unit_h = BurnsideElement::one(cls.representative.as_group());
        BurnsideElement lifted = induce_to(unit_h, s4);
        CHECK(lifted.coords().size() == 1);
        CHECK(lifted.coords().begin()->second == rat(1));
    }
}

TEST_CASE("restriction commutes with marks") {
    PermGroup s4 = PermGroup::named("S4");
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<std::size_t> pick(0, s4.all_subgroups().size() - 1);
    std::size_t c = s4.subgroup_classes().size();
    for (int trial = 0; trial < 10; ++trial) {
        const Subgroup K = s4.all_subgroups()[pick(rng)];
        PermGroup KG = K.as_group();
        BurnsideElement x(s4);
        for (std::size_t k = 0; k < c; ++k) x.add_term(k, rat(num(rng)));
        BurnsideElement rx = restrict_to(x, K);
        std::vector<Rational> marks_down = rx.marks_vector();
        std::vector<Rational> marks_up = x.marks_vector();
        // m_L(res_K x) = m_L(x) for every subgroup class L of K
        for (std::size_t lk = 0; lk < KG.subgroup_classes().size(); ++lk) {
            const Subgroup L = KG.subgroup_classes()[lk].representative;
            std::vector<std::size_t> in_G;
            for (std::size_t e : L.element_indices()) in_G.push_back(s4.index_of(KG.element(e)));
            std::sort(in_G.begin(), in_G.end());
            std::size_t lg = s4.class_of(Subgroup(s4, in_G));
            CHECK(marks_down[lk] == marks_up[lg]);
        }
    }
}

TEST_CASE("collection idempotents") {
    PermGroup s4 = PermGroup::named("S4");
    CHECK(collection_idempotent(full_collection(s4)) == BurnsideElement::one(s4));
    CHECK(collection_idempotent(SubgroupCollection(s4, {})).is_zero());

    PermGroup c2 = PermGroup::named("C2");
    BurnsideElement eps = collection_idempotent(SubgroupCollection(c2, {c2.trivial_subgroup()}));
    CHECK(eps.coords().size() == 1);
    CHECK(eps.coeff(0) == rat(1, 2));

    // idempotency under the marks product, for assorted collections
    for (const char* spec : {"S4", "A4", "D12"}) {
        PermGroup G = PermGroup::named(spec);
        BurnsideElement e1 = collection_idempotent(cyclic_collection(G));
        CHECK(e1 * e1 == e1);
    }
}

TEST_CASE("restriction against the Mackey double-coset oracle") {
    std::mt19937 rng(41);
    std::vector<PermGroup> groups = {PermGroup::named("S4"), PermGroup::named("A4"),
                                     PermGroup::named("D12"), PermGroup::named("Q8"),
                                     PermGroup::named("C12"), PermGroup::named("D16"),
                                     PermGroup::named("S3")};
    int checked = 0;
    std::size_t gi = 0;
    while (checked < 20) {
        const PermGroup& G = groups[gi % groups.size()];
        ++gi;
        const auto& subs = G.all_subgroups();
        std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
        const Subgroup& K = subs[pick(rng)];
        const Subgroup& L = subs[pick(rng)];
        PermGroup KG = K.as_group();
        BurnsideElement lhs = restrict_to(BurnsideElement::basis(G, G.class_of(L)), K);
        BurnsideElement rhs = mackey_oracle(G, K, L, KG);
        CHECK(lhs == rhs);
        ++checked;
    }
}
