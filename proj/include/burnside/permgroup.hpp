#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <typeindex>
#include <vector>

#include "burnside/error.hpp"

namespace burnside {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}, stored as its image array.
class Permutation {
public:
    explicit Permutation(std::vector<Point> images);
    static Permutation identity(std::size_t degree);
    /// Parses a product of cycles like "(0 1)(2 3)"; "()" is the identity.
    static Permutation parse_cycles(std::string_view text, std::size_t degree);

    std::size_t degree() const { return images_.size(); }
    Point apply(Point p) const { return images_[p]; }
    const std::vector<Point>& images() const { return images_; }

    /// (this.after(other))(x) = this(other(x)).
    Permutation after(const Permutation& other) const;
    Permutation inverse() const;
    std::size_t order() const;
    bool is_identity() const;

    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<Point> images_;
};

/// Type-keyed compute-once cache attached to immutable group data, so derived
/// structures (table of marks, lattices) are shared between all handles.
/// The value is computed outside the lock; nested fills are fine and a losing
/// racer's result is discarded.
class MemoCache {
public:
    template <class T, class F>
    const T& get(F&& make) const {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = slots_.find(std::type_index(typeid(T)));
            if (it != slots_.end()) return *static_cast<const T*>(it->second.get());
        }
        auto value = std::make_shared<const T>(make());
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = slots_.emplace(std::type_index(typeid(T)), std::move(value));
        return *static_cast<const T*>(it->second.get());
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<std::type_index, std::shared_ptr<const void>> slots_;
};

class Subgroup;
struct SubgroupClass;

struct ElementClass {
    std::size_t representative;        // least member in canonical element order
    std::vector<std::size_t> members;  // sorted element indices
    std::size_t size() const { return members.size(); }
};

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// Order cap: BURNSIDE_ORDER_CAP environment override, else the default.
std::size_t order_cap();

/// A finite permutation group with fully enumerated elements, canonically
/// sorted (lexicographically on image arrays, so the identity is element 0).
/// Cheap to copy; all data is shared and immutable.
class PermGroup {
public:
    PermGroup();  // trivial group on one point

    static PermGroup generate(const std::vector<Permutation>& gens, std::size_t degree,
                              std::size_t cap = order_cap());
    /// Named specs "S<n>", "A<n>", "C<n>", "D<2n>", "Q8", or explicit
    /// "perm:<degree>:<cycles>;<cycles>;...".
    static PermGroup named(std::string_view spec, std::size_t cap = order_cap());

    std::size_t degree() const;
    std::size_t order() const;
    const std::vector<Permutation>& elements() const;
    const Permutation& element(std::size_t i) const;
    std::size_t index_of(const Permutation& p) const;
    std::optional<std::size_t> find(const Permutation& p) const;

    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const;
    /// g x g^-1.
    std::size_t conjugate(std::size_t g, std::size_t x) const;
    std::size_t element_order(std::size_t i) const;

    const std::vector<Permutation>& generators() const;
    const std::string& display_name() const;

    /// Every subgroup exactly once, sorted by (order, element list); built by
    /// closing the set of cyclic subgroups under joins with single elements.
    /// The underlying index data is memoized; handles are built per call so
    /// that cached data never owns group handles back.
    std::vector<Subgroup> all_subgroups() const;
    std::vector<SubgroupClass> subgroup_classes() const;
    std::size_t class_of(const Subgroup& H) const;
    std::size_t subgroup_class_count() const;
    const std::vector<ElementClass>& element_classes() const;

    Subgroup full_subgroup() const;
    Subgroup trivial_subgroup() const;

    const MemoCache& memo() const;

    /// Shared-data identity (same underlying enumeration).
    bool same_group(const PermGroup& o) const { return data_ == o.data_; }
    /// Value equality: same degree and same element list.
    friend bool operator==(const PermGroup& a, const PermGroup& b);

private:
    struct Data;
    explicit PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static PermGroup from_sorted_elements(std::vector<Permutation> elements,
                                          std::vector<Permutation> gens, std::string name);
    static PermGroup generate_named(const std::vector<Permutation>& gens, std::size_t degree,
                                    std::size_t cap, std::string name);

    std::shared_ptr<const Data> data_;
    friend class Subgroup;
};

/// A subgroup of a PermGroup, as a sorted list of parent element indices.
/// Cheap to copy.
class Subgroup {
public:
    /// Validates closure; indices must be sorted, unique and contain 0.
    Subgroup(PermGroup parent, std::vector<std::size_t> element_indices);
    static Subgroup generated_by(const PermGroup& parent, const std::vector<std::size_t>& gen_indices);
    static Subgroup from_permutations(const PermGroup& parent, const std::vector<Permutation>& gens);

    const PermGroup& parent() const;
    const std::vector<std::size_t>& element_indices() const;
    std::size_t order() const;
    std::size_t index_in_parent() const;  // |G:H|
    bool contains_index(std::size_t e) const;
    bool contains(const Subgroup& other) const;  // other <= this
    bool is_cyclic() const;
    bool is_pgroup(unsigned p) const;

    /// Canonical generating set: greedy over elements in canonical order.
    const std::vector<std::size_t>& generator_indices() const;
    /// Cycle strings of the canonical generators joined by ";"; "()" for the
    /// trivial subgroup. Used as the wire key of the subgroup.
    std::string generator_string() const;

    Subgroup conjugated_by(std::size_t g) const;
    /// This subgroup as a group in its own right (same degree).
    PermGroup as_group() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b);
    /// (order, element list) — the canonical ordering of subgroups; only
    /// meaningful within one parent group.
    friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

private:
    struct Data;
    Subgroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static Subgroup unchecked(PermGroup parent, std::vector<std::size_t> elems);

    std::shared_ptr<const Data> data_;
    friend class PermGroup;
};

struct SubgroupClass {
    Subgroup representative;       // the member with the least element list
    std::vector<Subgroup> members; // sorted; exactly one conjugation orbit
    std::size_t size() const { return members.size(); }
};

bool is_prime(unsigned p);

Subgroup centralizer(const PermGroup& G, const Subgroup& H);
Subgroup normalizer(const PermGroup& G, const Subgroup& H);

/// Largest normal p-subgroup of H: the intersection of the Sylow p-subgroups
/// of H, found among the subgroups of H in the parent's lattice.
Subgroup p_core(const Subgroup& H, unsigned p);

bool is_cyclic(const Subgroup& H);

/// |(G/H)^g| = |{x : x^-1 g x in H}| / |H|.
std::size_t fixed_point_count(const PermGroup& G, std::size_t g, const Subgroup& H);

}  // namespace burnside
