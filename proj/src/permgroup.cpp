#include "burnside/permgroup.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace burnside {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point p : images_) {
        if (p >= images_.size() || seen[p])
            throw std::invalid_argument("Permutation: image array is not a bijection");
        seen[p] = 1;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw SpecError("Permutation: expected '(' in cycle string");
        ++i;
        std::vector<Point> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (text[i] == ',') {
                ++i;
                skip_ws();
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw SpecError("Permutation: expected point in cycle string");
            unsigned long v = 0;
            std::from_chars(text.data() + i, text.data() + j, v);
            if (v >= degree) throw SpecError("Permutation: point out of range in cycle string");
            cycle.push_back(static_cast<Point>(v));
            i = j;
            skip_ws();
        }
        if (i == text.size()) throw SpecError("Permutation: unterminated cycle");
        ++i;  // ')'
        if (cycle.size() > 1) cycles.push_back(std::move(cycle));
        skip_ws();
    }
    // Compose right to left; order is irrelevant for disjoint cycles.
    Permutation result = identity(degree);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& c = *it;
        std::vector<char> seen(degree, 0);
        for (Point p : c) {
            if (seen[p]) throw SpecError("Permutation: repeated point in cycle");
            seen[p] = 1;
        }
        std::vector<Point> im(degree);
        std::iota(im.begin(), im.end(), 0);
        for (std::size_t k = 0; k < c.size(); ++k) im[c[k]] = c[(k + 1) % c.size()];
        result = Permutation(std::move(im)).after(result);
    }
    return result;
}

Permutation Permutation::after(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("Permutation: degree mismatch in composition");
    std::vector<Point> im(degree());
    for (std::size_t x = 0; x < degree(); ++x) im[x] = images_[other.images_[x]];
    Permutation r = identity(degree());
    r.images_ = std::move(im);
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<Point> im(degree());
    for (std::size_t x = 0; x < degree(); ++x) im[images_[x]] = static_cast<Point>(x);
    Permutation r = identity(degree());
    r.images_ = std::move(im);
    return r;
}

std::size_t Permutation::order() const {
    std::size_t ord = 1;
    std::vector<char> seen(degree(), 0);
    for (std::size_t x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        std::size_t len = 0;
        for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
            seen[y] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < degree(); ++x)
        if (images_[x] != x) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::vector<char> seen(degree(), 0);
    std::string out;
    for (std::size_t x = 0; x < degree(); ++x) {
        if (seen[x] || images_[x] == x) {
            seen[x] = 1;
            continue;
        }
        out += '(';
        bool first = true;
        for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
            seen[y] = 1;
            if (!first) out += ' ';
            out += std::to_string(y);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

// ------------------------------------------------------------------ PermGroup

namespace {
constexpr std::size_t kMulTableLimit = 512;
}

std::size_t order_cap() {
    if (const char* env = std::getenv("BURNSIDE_ORDER_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultOrderCap;
}

struct PermGroup::Data {
    std::size_t degree = 1;
    std::vector<Permutation> elements;  // sorted lexicographically; index 0 is the identity
    std::vector<Permutation> generators;
    std::string name;
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> orders;
    std::vector<std::uint16_t> mul_table;  // filled when order <= kMulTableLimit
    MemoCache memo;

    std::size_t index_of(const Permutation& p) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        if (it == elements.end() || !(*it == p))
            throw std::invalid_argument("PermGroup: permutation is not a group element");
        return static_cast<std::size_t>(it - elements.begin());
    }

    std::size_t mul(std::size_t a, std::size_t b) const {
        if (!mul_table.empty()) return mul_table[a * elements.size() + b];
        return index_of(elements[a].after(elements[b]));
    }
};

PermGroup::PermGroup() { *this = from_sorted_elements({Permutation::identity(1)}, {}, "C1"); }

PermGroup PermGroup::from_sorted_elements(std::vector<Permutation> elements,
                                          std::vector<Permutation> gens, std::string name) {
    auto d = std::make_shared<Data>();
    d->degree = elements.empty() ? 0 : elements[0].degree();
    d->elements = std::move(elements);
    d->generators = std::move(gens);
    d->name = std::move(name);
    const std::size_t n = d->elements.size();
    d->inverse.resize(n);
    d->orders.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d->inverse[i] = d->index_of(d->elements[i].inverse());
        d->orders[i] = d->elements[i].order();
    }
    if (n <= kMulTableLimit) {
        d->mul_table.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d->mul_table[i * n + j] =
                    static_cast<std::uint16_t>(d->index_of(d->elements[i].after(d->elements[j])));
    }
    return PermGroup(std::move(d));
}

PermGroup PermGroup::generate(const std::vector<Permutation>& gens, std::size_t degree,
                              std::size_t cap) {
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw std::invalid_argument("PermGroup::generate: generator degree mismatch");
    std::set<Permutation> seen;
    std::vector<Permutation> queue;
    seen.insert(Permutation::identity(degree));
    queue.push_back(Permutation::identity(degree));
    while (!queue.empty()) {
        Permutation x = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            Permutation y = x.after(g);
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw OrderCapExceeded("PermGroup::generate: order cap " +
                                           std::to_string(cap) + " exceeded");
                queue.push_back(std::move(y));
            }
        }
    }
    std::vector<Permutation> elements(seen.begin(), seen.end());
    std::string name = "perm:" + std::to_string(degree) + ":";
    if (gens.empty()) {
        name += "()";
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) name += ';';
            name += gens[i].cycle_string();
        }
    }
    return from_sorted_elements(std::move(elements), gens, std::move(name));
}

namespace {

std::size_t parse_count(std::string_view s, std::string_view spec) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == 0)
        throw SpecError("unknown group spec: " + std::string(spec));
    return v;
}

}  // namespace

PermGroup PermGroup::generate_named(const std::vector<Permutation>& gens, std::size_t degree,
                                    std::size_t cap, std::string name) {
    PermGroup G = generate(gens, degree, cap);
    // data_ is uniquely owned here; renaming before publication is safe
    const_cast<Data&>(*G.data_).name = std::move(name);
    return G;
}

PermGroup PermGroup::named(std::string_view spec, std::size_t cap) {
    if (spec.rfind("perm:", 0) == 0) {
        std::string_view rest = spec.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw SpecError("unknown group spec: " + std::string(spec));
        std::size_t degree = parse_count(rest.substr(0, colon), spec);
        std::string_view gen_part = rest.substr(colon + 1);
        std::vector<Permutation> gens;
        std::size_t start = 0;
        while (start <= gen_part.size()) {
            auto semi = gen_part.find(';', start);
            std::string_view one =
                gen_part.substr(start, semi == std::string_view::npos ? semi : semi - start);
            if (!one.empty()) {
                Permutation g = Permutation::parse_cycles(one, degree);
                if (!g.is_identity()) gens.push_back(std::move(g));
            }
            if (semi == std::string_view::npos) break;
            start = semi + 1;
        }
        PermGroup G = generate(gens, degree, cap);
        return G;
    }
    if (spec == "Q8") {
        std::vector<Permutation> gens = {Permutation::parse_cycles("(0 2 1 3)(4 6 5 7)", 8),
                                         Permutation::parse_cycles("(0 4 1 5)(2 7 3 6)", 8)};
        return generate_named(gens, 8, cap, "Q8");
    }
    if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 'A' || spec[0] == 'C' || spec[0] == 'D')) {
        std::size_t n = parse_count(spec.substr(1), spec);
        std::vector<Permutation> gens;
        std::size_t degree = n;
        switch (spec[0]) {
            case 'S':
                if (n >= 2) {
                    gens.push_back(Permutation::parse_cycles("(0 1)", n));
                    if (n >= 3) {
                        std::string cyc = "(";
                        for (std::size_t i = 0; i < n; ++i) cyc += (i ? " " : "") + std::to_string(i);
                        cyc += ")";
                        gens.push_back(Permutation::parse_cycles(cyc, n));
                    }
                }
                break;
            case 'A':
                for (std::size_t k = 2; k + 1 <= n && n >= 3; ++k)
                    gens.push_back(
                        Permutation::parse_cycles("(0 1 " + std::to_string(k) + ")", n));
                break;
            case 'C': {
                if (n >= 2) {
                    std::string cyc = "(";
                    for (std::size_t i = 0; i < n; ++i) cyc += (i ? " " : "") + std::to_string(i);
                    cyc += ")";
                    gens.push_back(Permutation::parse_cycles(cyc, n));
                }
                break;
            }
            case 'D': {
                if (n % 2 != 0 || n < 6)
                    throw SpecError("unknown group spec: " + std::string(spec) +
                                    " (dihedral groups are D<2n> with 2n >= 6)");
                std::size_t m = n / 2;  // points
                degree = m;
                std::string cyc = "(";
                for (std::size_t i = 0; i < m; ++i) cyc += (i ? " " : "") + std::to_string(i);
                cyc += ")";
                gens.push_back(Permutation::parse_cycles(cyc, m));
                std::vector<Point> refl(m);
                for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
                gens.push_back(Permutation(std::move(refl)));
                break;
            }
        }
        return generate_named(gens, degree, cap, std::string(spec));
    }
    throw SpecError("unknown group spec: " + std::string(spec));
}

std::size_t PermGroup::degree() const { return data_->degree; }
std::size_t PermGroup::order() const { return data_->elements.size(); }
const std::vector<Permutation>& PermGroup::elements() const { return data_->elements; }
const Permutation& PermGroup::element(std::size_t i) const { return data_->elements[i]; }
std::size_t PermGroup::index_of(const Permutation& p) const { return data_->index_of(p); }

std::optional<std::size_t> PermGroup::find(const Permutation& p) const {
    const auto& el = data_->elements;
    auto it = std::lower_bound(el.begin(), el.end(), p);
    if (it == el.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - el.begin());
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const { return data_->mul(a, b); }
std::size_t PermGroup::inv(std::size_t a) const { return data_->inverse[a]; }
std::size_t PermGroup::conjugate(std::size_t g, std::size_t x) const {
    return data_->mul(data_->mul(g, x), data_->inverse[g]);
}
std::size_t PermGroup::element_order(std::size_t i) const { return data_->orders[i]; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }
const std::string& PermGroup::display_name() const { return data_->name; }
const MemoCache& PermGroup::memo() const { return data_->memo; }

bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.data_ == b.data_ ||
           (a.degree() == b.degree() && a.data_->elements == b.data_->elements);
}

// ------------------------------------------------------------------- Subgroup

struct Subgroup::Data {
    PermGroup parent;
    std::vector<std::size_t> elems;  // sorted parent indices
    mutable std::once_flag gens_once;
    mutable std::vector<std::size_t> gens;
};

namespace {

// Subgroup generated by the given element indices, as sorted indices.
std::vector<std::size_t> closure_indices(const PermGroup& G, const std::vector<std::size_t>& gens) {
    std::vector<char> in(G.order(), 0);
    in[0] = 1;
    std::vector<std::size_t> stack{0};
    std::vector<std::size_t> result{0};
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t g : gens) {
            std::size_t y = G.mul(x, g);
            if (!in[y]) {
                in[y] = 1;
                stack.push_back(y);
                result.push_back(y);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

Subgroup::Subgroup(PermGroup parent, std::vector<std::size_t> element_indices) {
    if (element_indices.empty() || element_indices[0] != 0)
        throw std::invalid_argument("Subgroup: must contain the identity");
    for (std::size_t i = 0; i + 1 < element_indices.size(); ++i)
        if (element_indices[i] >= element_indices[i + 1])
            throw std::invalid_argument("Subgroup: indices must be sorted and distinct");
    if (element_indices.back() >= parent.order())
        throw std::invalid_argument("Subgroup: element index out of range");
    std::vector<char> in(parent.order(), 0);
    for (std::size_t e : element_indices) in[e] = 1;
    for (std::size_t a : element_indices)
        for (std::size_t b : element_indices)
            if (!in[parent.mul(a, b)])
                throw std::invalid_argument("Subgroup: element set is not closed");
    auto d = std::make_shared<Data>();
    d->parent = std::move(parent);
    d->elems = std::move(element_indices);
    data_ = std::move(d);
}

Subgroup Subgroup::unchecked(PermGroup parent, std::vector<std::size_t> elems) {
    auto d = std::make_shared<Data>();
    d->parent = std::move(parent);
    d->elems = std::move(elems);
    return Subgroup(std::move(d));
}

Subgroup Subgroup::generated_by(const PermGroup& parent, const std::vector<std::size_t>& gen_indices) {
    return unchecked(parent, closure_indices(parent, gen_indices));
}

Subgroup Subgroup::from_permutations(const PermGroup& parent, const std::vector<Permutation>& gens) {
    std::vector<std::size_t> idx;
    idx.reserve(gens.size());
    for (const auto& g : gens) idx.push_back(parent.index_of(g));
    return generated_by(parent, idx);
}

const PermGroup& Subgroup::parent() const { return data_->parent; }
const std::vector<std::size_t>& Subgroup::element_indices() const { return data_->elems; }
std::size_t Subgroup::order() const { return data_->elems.size(); }
std::size_t Subgroup::index_in_parent() const { return data_->parent.order() / order(); }

bool Subgroup::contains_index(std::size_t e) const {
    return std::binary_search(data_->elems.begin(), data_->elems.end(), e);
}

bool Subgroup::contains(const Subgroup& other) const {
    if (!data_->parent.same_group(other.data_->parent))
        throw std::invalid_argument("Subgroup: containment across different groups");
    return std::includes(data_->elems.begin(), data_->elems.end(), other.data_->elems.begin(),
                         other.data_->elems.end());
}

bool Subgroup::is_cyclic() const {
    for (std::size_t e : data_->elems)
        if (data_->parent.element_order(e) == order()) return true;
    return false;
}

bool Subgroup::is_pgroup(unsigned p) const {
    std::size_t n = order();
    while (n % p == 0) n /= p;
    return n == 1;
}

const std::vector<std::size_t>& Subgroup::generator_indices() const {
    std::call_once(data_->gens_once, [this] {
        std::vector<std::size_t> gens;
        std::vector<char> in(data_->parent.order(), 0);
        in[0] = 1;
        std::size_t covered = 1;
        for (std::size_t e : data_->elems) {
            if (in[e]) continue;
            gens.push_back(e);
            auto cl = closure_indices(data_->parent, gens);
            covered = cl.size();
            for (std::size_t x : cl) in[x] = 1;
            if (covered == data_->elems.size()) break;
        }
        data_->gens = std::move(gens);
    });
    return data_->gens;
}

std::string Subgroup::generator_string() const {
    const auto& gens = generator_indices();
    if (gens.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ';';
        out += data_->parent.element(gens[i]).cycle_string();
    }
    return out;
}

Subgroup Subgroup::conjugated_by(std::size_t g) const {
    std::vector<std::size_t> conj;
    conj.reserve(order());
    for (std::size_t e : data_->elems) conj.push_back(data_->parent.conjugate(g, e));
    std::sort(conj.begin(), conj.end());
    return unchecked(data_->parent, std::move(conj));
}

PermGroup Subgroup::as_group() const {
    std::vector<Permutation> elements;
    elements.reserve(order());
    for (std::size_t e : data_->elems) elements.push_back(data_->parent.element(e));
    std::vector<Permutation> gens;
    for (std::size_t g : generator_indices()) gens.push_back(data_->parent.element(g));
    std::string name = "perm:" + std::to_string(data_->parent.degree()) + ":" + generator_string();
    return PermGroup::from_sorted_elements(std::move(elements), std::move(gens), std::move(name));
}

bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.data_->parent.same_group(b.data_->parent) && a.data_->elems == b.data_->elems;
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.data_->elems <=> b.data_->elems;
}

// ------------------------------------------------------- lattice and classes

namespace {

// Memoized caches hold index data only, never Subgroup or PermGroup handles:
// a handle stored inside the group's own cache would keep the group alive
// forever (a shared_ptr cycle).
struct LatticeIndexCache {
    std::vector<std::vector<std::size_t>> subgroup_elems;  // sorted by (size, lex)
};

struct ClassIndexCache {
    struct Entry {
        std::size_t rep_pos;                  // position of the representative
        std::vector<std::size_t> member_pos;  // sorted positions in the lattice
    };
    std::vector<Entry> classes;
    std::map<std::vector<std::size_t>, std::size_t> class_of;
};

struct ElementClassCache {
    std::vector<ElementClass> classes;
};

const LatticeIndexCache& lattice_cache(const PermGroup& G) {
    return G.memo().get<LatticeIndexCache>([&G] {
        const std::size_t n = G.order();
        std::set<std::vector<std::size_t>> seen;
        // (elements, generators) per discovered subgroup
        std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> work;
        for (std::size_t e = 0; e < n; ++e) {
            std::vector<std::size_t> gens;
            if (e != 0) gens.push_back(e);
            auto elems = closure_indices(G, gens);
            if (seen.insert(elems).second) work.emplace_back(std::move(elems), std::move(gens));
        }
        for (std::size_t i = 0; i < work.size(); ++i) {
            const auto base_gens = work[i].second;  // copy: work may reallocate
            const auto base_elems = work[i].first;
            for (std::size_t g = 1; g < n; ++g) {
                if (std::binary_search(base_elems.begin(), base_elems.end(), g)) continue;
                std::vector<std::size_t> gens = base_gens;
                gens.push_back(g);
                auto elems = closure_indices(G, gens);
                if (seen.insert(elems).second)
                    work.emplace_back(std::move(elems), std::move(gens));
            }
        }
        LatticeIndexCache cache;
        cache.subgroup_elems.assign(seen.begin(), seen.end());
        std::sort(cache.subgroup_elems.begin(), cache.subgroup_elems.end(),
                  [](const auto& a, const auto& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        return cache;
    });
}

const ClassIndexCache& class_cache(const PermGroup& G) {
    return G.memo().get<ClassIndexCache>([&G] {
        const auto& elems = lattice_cache(G).subgroup_elems;
        std::map<std::vector<std::size_t>, std::size_t> pos;
        for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
        ClassIndexCache cache;
        std::vector<char> assigned(elems.size(), 0);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (assigned[i]) continue;
            std::set<std::size_t> orbit;
            for (std::size_t g = 0; g < G.order(); ++g) {
                std::vector<std::size_t> conj;
                conj.reserve(elems[i].size());
                for (std::size_t e : elems[i]) conj.push_back(G.conjugate(g, e));
                std::sort(conj.begin(), conj.end());
                orbit.insert(pos.at(conj));
            }
            ClassIndexCache::Entry entry;
            entry.rep_pos = *orbit.begin();
            entry.member_pos.assign(orbit.begin(), orbit.end());
            std::size_t cls_index = cache.classes.size();
            for (std::size_t j : orbit) {
                assigned[j] = 1;
                cache.class_of[elems[j]] = cls_index;
            }
            cache.classes.push_back(std::move(entry));
        }
        return cache;
    });
}

}  // namespace

std::vector<Subgroup> PermGroup::all_subgroups() const {
    const auto& elems = lattice_cache(*this).subgroup_elems;
    std::vector<Subgroup> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(Subgroup::unchecked(*this, e));
    return out;
}

std::vector<SubgroupClass> PermGroup::subgroup_classes() const {
    const auto& elems = lattice_cache(*this).subgroup_elems;
    const auto& cc = class_cache(*this);
    std::vector<SubgroupClass> out;
    out.reserve(cc.classes.size());
    for (const auto& entry : cc.classes) {
        SubgroupClass cls{Subgroup::unchecked(*this, elems[entry.rep_pos]), {}};
        cls.members.reserve(entry.member_pos.size());
        for (std::size_t j : entry.member_pos)
            cls.members.push_back(Subgroup::unchecked(*this, elems[j]));
        out.push_back(std::move(cls));
    }
    return out;
}

std::size_t PermGroup::class_of(const Subgroup& H) const {
    if (!H.parent().same_group(*this))
        throw std::invalid_argument("PermGroup::class_of: subgroup of a different group");
    const auto& cache = class_cache(*this);
    auto it = cache.class_of.find(H.element_indices());
    if (it == cache.class_of.end())
        throw std::logic_error("PermGroup::class_of: subgroup not found in lattice");
    return it->second;
}

std::size_t PermGroup::subgroup_class_count() const { return class_cache(*this).classes.size(); }

const std::vector<ElementClass>& PermGroup::element_classes() const {
    return memo()
        .get<ElementClassCache>([this] {
            ElementClassCache cache;
            std::vector<char> assigned(order(), 0);
            for (std::size_t e = 0; e < order(); ++e) {
                if (assigned[e]) continue;
                std::set<std::size_t> orbit;
                for (std::size_t g = 0; g < order(); ++g) orbit.insert(conjugate(g, e));
                ElementClass cls;
                cls.representative = e;
                cls.members.assign(orbit.begin(), orbit.end());
                for (std::size_t x : cls.members) assigned[x] = 1;
                cache.classes.push_back(std::move(cls));
            }
            return cache;
        })
        .classes;
}

Subgroup PermGroup::full_subgroup() const {
    std::vector<std::size_t> all(order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup::unchecked(*this, std::move(all));
}

Subgroup PermGroup::trivial_subgroup() const { return Subgroup::unchecked(*this, {0}); }

// ------------------------------------------------------------- free functions

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Subgroup centralizer(const PermGroup& G, const Subgroup& H) {
    if (!H.parent().same_group(G))
        throw std::invalid_argument("centralizer: H is not a subgroup of G");
    const auto& gens = H.generator_indices();
    std::vector<std::size_t> result;
    for (std::size_t g = 0; g < G.order(); ++g) {
        bool commutes = true;
        for (std::size_t h : gens)
            if (G.mul(g, h) != G.mul(h, g)) {
                commutes = false;
                break;
            }
        if (commutes) result.push_back(g);
    }
    return Subgroup(G, std::move(result));
}

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
    if (!H.parent().same_group(G))
        throw std::invalid_argument("normalizer: H is not a subgroup of G");
    const auto& gens = H.generator_indices();
    std::vector<std::size_t> result;
    for (std::size_t g = 0; g < G.order(); ++g) {
        bool normalizes = true;
        for (std::size_t h : gens)
            if (!H.contains_index(G.conjugate(g, h))) {
                normalizes = false;
                break;
            }
        if (normalizes) result.push_back(g);
    }
    return Subgroup(G, std::move(result));
}

Subgroup p_core(const Subgroup& H, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("p_core: p must be prime");
    const PermGroup& G = H.parent();
    std::size_t sylow_order = 1;
    for (std::size_t m = H.order(); m % p == 0; m /= p) sylow_order *= p;
    if (sylow_order == 1) return G.trivial_subgroup();
    std::vector<std::size_t> core;
    bool first = true;
    for (const auto& K : G.all_subgroups()) {
        if (K.order() != sylow_order || !H.contains(K)) continue;
        if (first) {
            core = K.element_indices();
            first = false;
        } else {
            std::vector<std::size_t> meet;
            std::set_intersection(core.begin(), core.end(), K.element_indices().begin(),
                                  K.element_indices().end(), std::back_inserter(meet));
            core = std::move(meet);
        }
    }
    return Subgroup(G, std::move(core));
}

bool is_cyclic(const Subgroup& H) { return H.is_cyclic(); }

std::size_t fixed_point_count(const PermGroup& G, std::size_t g, const Subgroup& H) {
    if (!H.parent().same_group(G))
        throw std::invalid_argument("fixed_point_count: H is not a subgroup of G");
    std::size_t count = 0;
    for (std::size_t x = 0; x < G.order(); ++x)
        if (H.contains_index(G.mul(G.mul(G.inv(x), g), x))) ++count;
    return count / H.order();
}

}  // namespace burnside
