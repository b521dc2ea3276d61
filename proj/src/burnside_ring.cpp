#include "burnside/burnside_ring.hpp"

#include <algorithm>

namespace burnside {

namespace {

struct MarksMatrixCache {
    Matrix<Rational> marks;
};

Matrix<Rational> compute_marks(const PermGroup& G) {
    const auto classes = G.subgroup_classes();
    const std::size_t c = classes.size();
    Matrix<Rational> marks(c, c);
    for (std::size_t hi = 0; hi < c; ++hi) {
        const Subgroup& H = classes[hi].representative;
        for (std::size_t ki = 0; ki <= hi; ++ki) {
            const Subgroup& K = classes[ki].representative;
            if (H.order() % K.order() != 0) continue;
            // |(G/H)^K| = |{x : x^-1 K x <= H}| / |H|
            std::size_t count = 0;
            for (std::size_t x = 0; x < G.order(); ++x) {
                std::size_t xinv = G.inv(x);
                bool inside = true;
                for (std::size_t k : K.generator_indices())
                    if (!H.contains_index(G.mul(G.mul(xinv, k), x))) {
                        inside = false;
                        break;
                    }
                if (inside) ++count;
            }
            marks(hi, ki) = Rational(Integer(count / H.order()));
        }
    }
    return marks;
}

}  // namespace

TableOfMarks::TableOfMarks(const PermGroup& G)
    : group_(G), owned_(std::make_shared<const Matrix<Rational>>(compute_marks(G))) {}

TableOfMarks TableOfMarks::of(const PermGroup& G) {
    const auto& cached =
        G.memo().get<MarksMatrixCache>([&G] { return MarksMatrixCache{compute_marks(G)}; });
    return TableOfMarks(G, &cached.marks);
}

BurnsideElement BurnsideElement::basis(const PermGroup& G, std::size_t cls) {
    BurnsideElement x(G);
    x.add_term(cls, Rational(1));
    return x;
}

BurnsideElement BurnsideElement::one(const PermGroup& G) {
    return basis(G, G.subgroup_class_count() - 1);
}

Rational BurnsideElement::coeff(std::size_t cls) const {
    auto it = coords_.find(cls);
    return it == coords_.end() ? Rational(0) : it->second;
}

BurnsideElement& BurnsideElement::add_term(std::size_t cls, const Rational& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = coords_.emplace(cls, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coords_.erase(it);
    }
    return *this;
}

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
    if (!a.group_.same_group(b.group_))
        throw std::invalid_argument("BurnsideElement: mixing different groups");
    BurnsideElement r = a;
    for (const auto& [cls, c] : b.coords_) r.add_term(cls, c);
    return r;
}

BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b) {
    if (!a.group_.same_group(b.group_))
        throw std::invalid_argument("BurnsideElement: mixing different groups");
    BurnsideElement r = a;
    for (const auto& [cls, c] : b.coords_) r.add_term(cls, -c);
    return r;
}

BurnsideElement operator*(const BurnsideElement& a, const Rational& c) {
    BurnsideElement r(a.group_);
    if (c.is_zero()) return r;
    for (const auto& [cls, v] : a.coords_) r.coords_[cls] = v * c;
    return r;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
    if (!a.group_.same_group(b.group_))
        throw std::invalid_argument("BurnsideElement: mixing different groups");
    std::vector<Rational> ma = a.marks_vector();
    std::vector<Rational> mb = b.marks_vector();
    for (std::size_t i = 0; i < ma.size(); ++i) ma[i] *= mb[i];
    return BurnsideElement::from_idempotent_coords(a.group_, ma);
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    // Value equality of the groups: class indices are deterministic, so equal
    // element enumerations index their subgroup classes identically.
    return a.group_ == b.group_ && a.coords_ == b.coords_;
}

std::vector<Rational> BurnsideElement::marks_vector() const {
    const TableOfMarks& tom = TableOfMarks::of(group_);
    std::vector<Rational> v(tom.class_count(), Rational(0));
    for (const auto& [cls, c] : coords_)
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * tom.mark(cls, k);
    return v;
}

BurnsideElement BurnsideElement::from_idempotent_coords(const PermGroup& G,
                                                        const std::vector<Rational>& v) {
    const TableOfMarks& tom = TableOfMarks::of(G);
    const std::size_t c = tom.class_count();
    if (v.size() != c)
        throw std::invalid_argument("from_idempotent_coords: wrong vector length");
    // Solve sum_H x_H * marks(H, K) = v_K by back substitution on the
    // triangular marks matrix.
    std::vector<Rational> x(c, Rational(0));
    for (std::size_t k = c; k-- > 0;) {
        Rational acc = v[k];
        for (std::size_t h = k + 1; h < c; ++h) acc -= x[h] * tom.mark(h, k);
        x[k] = acc / tom.mark(k, k);
    }
    BurnsideElement r(G);
    for (std::size_t k = 0; k < c; ++k) r.add_term(k, x[k]);
    return r;
}

BurnsideElement restrict_to(const BurnsideElement& x, const Subgroup& K) {
    const PermGroup& G = x.group();
    if (!K.parent().same_group(G))
        throw std::invalid_argument("restrict_to: K is not a subgroup of the element's group");
    PermGroup KG = K.as_group();
    BurnsideElement out(KG);
    const auto& classes = G.subgroup_classes();
    for (const auto& [cls, c] : x.coords()) {
        const Subgroup& H = classes[cls].representative;
        // coset id of every element of G: the least member of its coset gH
        std::vector<std::size_t> coset_id(G.order(), G.order());
        for (std::size_t g = 0; g < G.order(); ++g) {
            if (coset_id[g] != G.order()) continue;
            for (std::size_t h : H.element_indices()) coset_id[G.mul(g, h)] = g;
        }
        // K-orbits on the cosets
        std::vector<char> seen(G.order(), 0);
        for (std::size_t g = 0; g < G.order(); ++g) {
            if (coset_id[g] != g || seen[g]) continue;
            std::vector<std::size_t> stab;
            for (std::size_t ke : K.element_indices()) {
                std::size_t image = coset_id[G.mul(ke, g)];
                seen[image] = 1;
                if (image == g) stab.push_back(KG.index_of(G.element(ke)));
            }
            std::sort(stab.begin(), stab.end());
            Subgroup stab_in_K(KG, std::move(stab));
            out.add_term(KG.class_of(stab_in_K), c);
        }
    }
    return out;
}

BurnsideElement induce_to(const BurnsideElement& x, const PermGroup& G) {
    const PermGroup& KG = x.group();
    if (KG.degree() != G.degree())
        throw std::invalid_argument("induce_to: degree mismatch");
    BurnsideElement out(G);
    const auto& classes = KG.subgroup_classes();
    for (const auto& [cls, c] : x.coords()) {
        const Subgroup& L = classes[cls].representative;
        std::vector<std::size_t> in_G;
        in_G.reserve(L.order());
        for (std::size_t e : L.element_indices()) in_G.push_back(G.index_of(KG.element(e)));
        std::sort(in_G.begin(), in_G.end());
        Subgroup LG(G, std::move(in_G));
        out.add_term(G.class_of(LG), c);
    }
    return out;
}

BurnsideElement collection_idempotent(const SubgroupCollection& E) {
    const PermGroup& G = E.group();
    std::vector<Rational> v(G.subgroup_class_count(), Rational(0));
    for (std::size_t cls : E.classes()) v[cls] = Rational(1);
    return BurnsideElement::from_idempotent_coords(G, v);
}

}  // namespace burnside
