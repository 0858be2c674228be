#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace endowlab {

// Opaque condition identifier: an index into a Poset. Index order is the
// canonical condition order, so "canonically least" means smallest index.
enum class Cond : std::uint32_t {};

constexpr std::size_t index_of(Cond c) { return static_cast<std::size_t>(c); }
constexpr Cond cond_at(std::size_t i) { return static_cast<Cond>(i); }

using CondSet = std::vector<Cond>;

// Finite partial order given extensionally. Smaller means stronger.
// Immutable after construction; all queries are const and thread-safe.
class Poset {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    // Applies the reflexive-transitive closure of `pairs` (a, b) meaning a <= b,
    // then checks antisymmetry.
    static Poset from_relation(std::vector<std::string> labels,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs);

    // Takes `leq` as the complete order and checks all three order axioms.
    static Poset from_order(std::vector<std::string> labels,
                            const std::function<bool(std::size_t, std::size_t)>& leq);

    std::size_t size() const { return labels_.size(); }
    CondSet all() const;

    bool leq(Cond p, Cond q) const;
    bool less(Cond p, Cond q) const { return p != q && leq(p, q); }
    // Some r with r <= p and r <= q.
    bool compatible(Cond p, Cond q) const;

    std::optional<Cond> top() const { return top_; }
    const CondSet& atoms() const { return atoms_; }
    bool is_atom(Cond p) const { return atom_flag_[index_of(p)]; }
    // All r <= p, canonical order (p itself included).
    const CondSet& down_set(Cond p) const { return down_list_[index_of(p)]; }
    const CondSet& atoms_below(Cond p) const { return atoms_below_[index_of(p)]; }

    const std::string& label(Cond p) const;
    Cond find(std::string_view label) const;  // throws InputError
    void check(Cond p) const;                 // throws InputError on foreign ids

    bool is_antichain(std::span<const Cond> members) const;
    bool is_maximal_antichain(std::span<const Cond> members) const;
    // Some r lies below every member (the empty set is bounded by anything).
    bool has_lower_bound(std::span<const Cond> members) const;

    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

private:
    Poset(std::vector<std::string> labels, std::vector<Bits> down);

    std::vector<std::string> labels_;
    std::vector<Bits> down_;  // down_[p][r] iff r <= p
    std::vector<Bits> compat_;
    std::vector<CondSet> down_list_;
    std::vector<CondSet> atoms_below_;
    std::vector<bool> atom_flag_;
    CondSet atoms_;
    std::optional<Cond> top_;
};

// Increasing levels P_0 ⊆ P_1 ⊆ ... ⊆ P_M = whole poset.
class Stratification {
public:
    Stratification() = default;
    // Validates monotonicity and that the last level is everything.
    Stratification(const Poset& poset, std::vector<CondSet> levels);
    // Level of each condition; P_n = {p : rank(p) <= n}.
    static Stratification from_rank(const Poset& poset, const std::vector<std::size_t>& rank);
    // Single level: P_0 is the whole poset.
    static Stratification trivial(const Poset& poset);
    // P_n = conditions reachable from a maximal element by chains of length <= n.
    static Stratification by_depth(const Poset& poset);

    std::size_t stabilization_index() const { return levels_.size() - 1; }
    // Levels past the stabilization index are the whole poset.
    const CondSet& level(std::size_t n) const;
    bool contains(std::size_t n, Cond p) const;
    std::size_t rank(Cond p) const { return rank_[index_of(p)]; }
    const std::vector<CondSet>& levels() const { return levels_; }

private:
    std::vector<CondSet> levels_;
    std::vector<std::size_t> rank_;
};

// Maximal antichains (maximal pairwise-incompatible sets). Exhaustive
// enumeration is limited to posets of at most 64 elements; callers apply the
// configured bound before calling.
std::vector<CondSet> all_maximal_antichains(const Poset& poset);

// Sorts `members` canonically and greedily extends them to a maximal antichain
// by scanning `order`.
CondSet complete_antichain(const Poset& poset, CondSet members, std::span<const Cond> order);

}  // namespace endowlab
