#include "endowlab/cohen.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "endowlab/error.hpp"
#include "endowlab/point_set.hpp"

namespace endowlab {

namespace {

std::vector<unsigned> checked_index_set(std::vector<unsigned> d, const Limits& limits) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (d.empty()) throw InputError("Cohen index set must be nonempty");
    if (d.size() > limits.cohen_index || d.size() > 16)
        throw ResourceError("Cohen index set of size " + std::to_string(d.size()) + " exceeds bound " +
                            std::to_string(limits.cohen_index));
    return d;
}

// Canonical enumeration: supports by size then sorted positions; values
// lexicographic along the support.
std::vector<CohenCondition> enumerate(std::size_t width) {
    std::vector<std::uint32_t> supports;
    for (std::uint32_t m = 0; m < (1U << width); ++m) supports.push_back(m);
    std::stable_sort(supports.begin(), supports.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return canonical_less(PointSet(a), PointSet(b));
    });
    std::vector<CohenCondition> out;
    for (std::uint32_t dom : supports) {
        std::vector<unsigned> positions;
        for (std::uint32_t b = dom; b != 0; b &= b - 1) positions.push_back(static_cast<unsigned>(std::countr_zero(b)));
        const std::size_t s = positions.size();
        for (std::uint32_t v = 0; v < (1U << s); ++v) {
            CohenCondition c{dom, 0};
            for (std::size_t j = 0; j < s; ++j)
                if ((v >> (s - 1 - j)) & 1U) c.values |= 1U << positions[j];
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> labels_for(const std::vector<CohenCondition>& conds, const std::vector<unsigned>& d) {
    std::vector<std::string> out;
    out.reserve(conds.size());
    for (const auto& c : conds) {
        std::string s;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (!((c.domain >> i) & 1U)) continue;
            if (!s.empty()) s += ',';
            s += std::to_string(d[i]) + ':' + (((c.values >> i) & 1U) ? '1' : '0');
        }
        out.push_back(std::move(s));
    }
    return out;
}

bool extends(const CohenCondition& p, const CohenCondition& q) {
    return (q.domain & ~p.domain) == 0 && ((p.values ^ q.values) & q.domain) == 0;
}

}  // namespace

CohenPoset::CohenPoset(std::vector<unsigned> index_set, const Limits& limits)
    : index_set_(checked_index_set(std::move(index_set), limits)),
      conditions_(enumerate(index_set_.size())),
      poset_(Poset::from_order(labels_for(conditions_, index_set_), [this](std::size_t p, std::size_t q) {
          return extends(conditions_[p], conditions_[q]);
      })) {
    const std::size_t width = index_set_.size();
    slot_.assign(std::size_t{1} << (2 * width), 0);
    for (std::size_t i = 0; i < conditions_.size(); ++i) slot_[encode(conditions_[i])] = static_cast<std::uint32_t>(i);
}

std::size_t CohenPoset::encode(const CohenCondition& c) const {
    return (static_cast<std::size_t>(c.domain) << index_set_.size()) | c.values;
}

Cond CohenPoset::id(const CohenCondition& c) const {
    const std::uint32_t all = (1U << index_set_.size()) - 1;
    if ((c.domain & ~all) != 0 || (c.values & ~c.domain) != 0) throw InputError("malformed Cohen condition");
    return cond_at(slot_[encode(c)]);
}

std::vector<unsigned> CohenPoset::supp(const CohenCondition& c) const {
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < index_set_.size(); ++i)
        if ((c.domain >> i) & 1U) out.push_back(index_set_[i]);
    return out;
}

std::vector<unsigned> CohenPoset::supp(Cond p) const { return supp(condition(p)); }

std::size_t CohenPoset::support_size(Cond p) const {
    return static_cast<std::size_t>(std::popcount(condition(p).domain));
}

bool CohenPoset::agree(Cond p, Cond q) const {
    const auto& a = condition(p);
    const auto& b = condition(q);
    return ((a.values ^ b.values) & a.domain & b.domain) == 0;
}

Cond CohenPoset::restrict(Cond p, std::uint32_t domain_mask) const {
    const auto& c = condition(p);
    return id(CohenCondition{c.domain & domain_mask, c.values & domain_mask});
}

std::string CohenPoset::literal(const CohenCondition& c) const { return poset_.label(id(c)); }

CohenCondition CohenPoset::parse(std::string_view text) const {
    CohenCondition c;
    if (text.empty() || text == "{}" || text == "∅") return c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view item = text.substr(pos, end - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos || colon + 2 != item.size() || (item.back() != '0' && item.back() != '1'))
            throw InputError("malformed Cohen condition literal '" + std::string(text) + "'");
        unsigned index = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + colon, index);
        if (ec != std::errc{} || ptr != item.data() + colon)
            throw InputError("malformed index in Cohen literal '" + std::string(text) + "'");
        const auto it = std::find(index_set_.begin(), index_set_.end(), index);
        if (it == index_set_.end()) throw InputError("index " + std::to_string(index) + " is not in the index set");
        const std::uint32_t bit = 1U << static_cast<unsigned>(it - index_set_.begin());
        if (c.domain & bit) throw InputError("index " + std::to_string(index) + " assigned twice");
        c.domain |= bit;
        if (item.back() == '1') c.values |= bit;
        pos = end + 1;
    }
    return c;
}

CohenPoset make_cohen(std::vector<unsigned> index_set, const Limits& limits) {
    return CohenPoset(std::move(index_set), limits);
}

CohenPoset make_cohen(std::size_t d, const Limits& limits) {
    std::vector<unsigned> indices(d);
    for (std::size_t i = 0; i < d; ++i) indices[i] = static_cast<unsigned>(i);
    return CohenPoset(std::move(indices), limits);
}

Stratification stratify_cohen(const CohenPoset& cohen) {
    std::vector<std::size_t> rank(cohen.poset().size());
    for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = cohen.support_size(cond_at(i));
    std::vector<CondSet> levels(cohen.index_set().size() + 1);
    for (std::size_t n = 0; n < levels.size(); ++n)
        for (std::size_t i = 0; i < rank.size(); ++i)
            if (rank[i] <= n) levels[n].push_back(cond_at(i));
    return Stratification(cohen.poset(), std::move(levels));
}

}  // namespace endowlab
