#include "endowlab/measure.hpp"

#include <algorithm>
#include <bit>

#include "endowlab/error.hpp"
#include "endowlab/point_set.hpp"

namespace endowlab {

namespace {

unsigned checked_dimension(unsigned k, const Limits& limits) {
    if (k == 0) throw InputError("measure algebra dimension must be at least 1");
    if (k > limits.measure_k || k > 4)
        throw ResourceError("measure algebra dimension " + std::to_string(k) + " exceeds bound " +
                            std::to_string(limits.measure_k));
    return k;
}

std::vector<std::uint32_t> enumerate_cells(unsigned k) {
    const std::uint32_t full = (1U << (1U << k)) - 1;
    std::vector<std::uint32_t> cells;
    for (std::uint32_t c = 1; c <= full; ++c) cells.push_back(c);
    std::sort(cells.begin(), cells.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
        return canonical_less(PointSet(a), PointSet(b));
    });
    return cells;
}

std::string point_literal(unsigned point, unsigned k) {
    std::string s(k, '0');
    for (unsigned j = 0; j < k; ++j)
        if ((point >> (k - 1 - j)) & 1U) s[j] = '1';
    return s;
}

std::vector<std::string> labels_for(const std::vector<std::uint32_t>& cells, unsigned k) {
    std::vector<std::string> out;
    for (std::uint32_t c : cells) {
        std::string s;
        for (std::uint32_t b = c; b != 0; b &= b - 1) {
            if (!s.empty()) s += ',';
            s += point_literal(static_cast<unsigned>(std::countr_zero(b)), k);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

MeasurePoset::MeasurePoset(unsigned k, const Limits& limits)
    : k_(checked_dimension(k, limits)),
      cells_(enumerate_cells(k_)),
      poset_(Poset::from_order(labels_for(cells_, k_), [this](std::size_t p, std::size_t q) {
          return (cells_[p] & ~cells_[q]) == 0;
      })) {
    slot_.assign(std::size_t{1} << (1U << k_), 0);
    for (std::size_t i = 0; i < cells_.size(); ++i) slot_[cells_[i]] = static_cast<std::uint32_t>(i);
}

Cond MeasurePoset::id(std::uint32_t cell) const {
    if (cell == 0 || cell >= slot_.size()) throw InputError("cell is empty or outside the cube");
    return cond_at(slot_[cell]);
}

std::size_t MeasurePoset::point_count(Cond p) const { return static_cast<std::size_t>(std::popcount(cell(p))); }

Measure MeasurePoset::measure(Cond p) const {
    return Measure(static_cast<std::int64_t>(point_count(p)), static_cast<std::int64_t>(cube_size()));
}

std::string MeasurePoset::literal(std::uint32_t c) const { return poset_.label(id(c)); }

std::uint32_t MeasurePoset::parse(std::string_view text) const {
    std::uint32_t c = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view item = text.substr(pos, end - pos);
        if (item.size() != k_ || item.find_first_not_of("01") != std::string_view::npos)
            throw InputError("malformed cell literal '" + std::string(text) + "'");
        unsigned point = 0;
        for (char ch : item) point = (point << 1U) | static_cast<unsigned>(ch - '0');
        c |= 1U << point;
        pos = end + 1;
    }
    return c;
}

MeasurePoset make_measure_algebra(unsigned k, const Limits& limits) { return MeasurePoset(k, limits); }

Stratification stratify_measure(const MeasurePoset& algebra) {
    // μ(p) >= 2^-n  iff  |cell| >= 2^(k-n)
    std::vector<std::size_t> rank(algebra.poset().size());
    for (std::size_t i = 0; i < rank.size(); ++i) {
        const std::size_t count = algebra.point_count(cond_at(i));
        std::size_t n = 0;
        while ((algebra.cube_size() >> n) > count) ++n;
        rank[i] = n;
    }
    std::vector<CondSet> levels(algebra.dimension() + 1);
    for (std::size_t n = 0; n < levels.size(); ++n)
        for (std::size_t i = 0; i < rank.size(); ++i)
            if (rank[i] <= n) levels[n].push_back(cond_at(i));
    return Stratification(algebra.poset(), std::move(levels));
}

Measure total_measure(const MeasurePoset& algebra, std::span<const Cond> members) {
    Measure sum(0);
    for (Cond p : members) sum += algebra.measure(p);
    return sum;
}

namespace {

Measure threshold(std::size_t n) {
    if (n >= 62) throw ResourceError("endowment level too large for exact dyadic arithmetic");
    return Measure(1) - Measure(1, std::int64_t{1} << n);
}

}  // namespace

bool measure_endowment_member(const MeasurePoset& algebra, std::size_t n, std::span<const Cond> members) {
    if (!algebra.poset().is_antichain(members)) throw PreconditionError("endowment candidate is not an antichain");
    return total_measure(algebra, members) > threshold(n);
}

CondSet extract_measure_endowment(const MeasurePoset& algebra, std::size_t n, std::span<const Cond> antichain) {
    if (!algebra.poset().is_maximal_antichain(antichain))
        throw PreconditionError("extract_measure_endowment requires a maximal antichain");
    CondSet order(antichain.begin(), antichain.end());
    // Index order already puts larger cells first with canonical ties.
    std::sort(order.begin(), order.end());
    const Measure bound = threshold(n);
    CondSet out;
    Measure sum(0);
    for (Cond p : order) {
        out.push_back(p);
        sum += algebra.measure(p);
        if (sum > bound) return out;
    }
    // A maximal antichain partitions the cube, so its total is 1 > bound.
    throw PreconditionError("maximal antichain does not reach the endowment bound");
}

}  // namespace endowlab
