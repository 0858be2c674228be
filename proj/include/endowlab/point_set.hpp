#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace endowlab {

// Subset of a finite ground set of at most 64 points, indexed 0..63.
class PointSet {
public:
    static constexpr std::size_t max_points = 64;

    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr PointSet full(std::size_t n) {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr PointSet single(std::size_t i) { return PointSet(std::uint64_t{1} << i); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(PointSet other) const { return (bits_ & other.bits_) == 0; }

    constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
    constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
    constexpr PointSet minus(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
    constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
    constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    constexpr bool operator==(const PointSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

// Canonical set order: lexicographic on the sorted list of point indices,
// so {x} < {x,y} < {y} when x < y.
inline bool canonical_less(PointSet a, PointSet b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        const int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

struct CanonicalSetLess {
    bool operator()(PointSet a, PointSet b) const { return canonical_less(a, b); }
};

// Families are ordered by member count, then lexicographically by members.
bool canonical_family_less(const std::vector<PointSet>& a, const std::vector<PointSet>& b);

void sort_canonical(std::vector<PointSet>& family);

PointSet union_of(const std::vector<PointSet>& family);

}  // namespace endowlab
