#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "endowlab/limits.hpp"
#include "endowlab/poset.hpp"

namespace endowlab {

// Exact dyadic measure.
using Measure = boost::rational<std::int64_t>;

// Nonempty subsets ("cells") of the cube {0,1}^k ordered by inclusion, with
// counting measure |cell| / 2^k. Canonical order: larger cells first, then
// lexicographic on the sorted point list. Point i is written as its k-digit
// binary expansion, most significant digit first.
class MeasurePoset {
public:
    explicit MeasurePoset(unsigned k, const Limits& limits = Limits::current());

    const Poset& poset() const { return poset_; }
    unsigned dimension() const { return k_; }
    std::size_t cube_size() const { return std::size_t{1} << k_; }

    std::uint32_t cell(Cond p) const { return cells_.at(index_of(p)); }
    Cond id(std::uint32_t cell) const;
    Measure measure(Cond p) const;
    std::size_t point_count(Cond p) const;

    std::string literal(std::uint32_t cell) const;
    // "00,01" for k=2.
    std::uint32_t parse(std::string_view text) const;
    Cond parse_cond(std::string_view text) const { return id(parse(text)); }

private:
    unsigned k_;
    std::vector<std::uint32_t> cells_;
    std::vector<std::uint32_t> slot_;
    Poset poset_;
};

MeasurePoset make_measure_algebra(unsigned k, const Limits& limits = Limits::current());

// B_n = {p : μ(p) >= 2^-n}, stabilizing at n = k.
Stratification stratify_measure(const MeasurePoset& algebra);

Measure total_measure(const MeasurePoset& algebra, std::span<const Cond> members);

// L belongs to the n-th endowment iff it is an antichain with total measure
// strictly greater than 1 - 2^-n. Throws PreconditionError on a non-antichain.
bool measure_endowment_member(const MeasurePoset& algebra, std::size_t n, std::span<const Cond> members);

// Greedy: members of A by decreasing measure (ties canonical), shortest
// prefix whose total exceeds 1 - 2^-n. Throws PreconditionError unless A is
// a maximal antichain.
CondSet extract_measure_endowment(const MeasurePoset& algebra, std::size_t n, std::span<const Cond> antichain);

}  // namespace endowlab
