#include "endowlab/selection.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "endowlab/error.hpp"

namespace endowlab {

std::string to_string(Property p) {
    switch (p) {
        case Property::rothberger: return "rothberger";
        case Property::menger: return "menger";
        case Property::selective_screenability: return "selective-screenability";
    }
    return "?";
}

Property parse_property(std::string_view text) {
    if (text == "rothberger") return Property::rothberger;
    if (text == "menger") return Property::menger;
    if (text == "selective-screenability" || text == "selective_screenability") return Property::selective_screenability;
    throw UsageError("unknown property '" + std::string(text) + "'");
}

void validate_problem(const FiniteSpace& space, const SelectionProblem& problem) {
    for (std::size_t n = 0; n < problem.covers.size(); ++n)
        if (!space.is_open_cover(problem.covers[n]))
            throw InputError("cover at level " + std::to_string(n) + " is not an open cover");
}

namespace {

std::vector<std::vector<PointSet>> sorted_covers(const SelectionProblem& problem) {
    auto covers = problem.covers;
    for (auto& c : covers) sort_canonical(c);
    return covers;
}

// Depth-first search over levels. options[n] lists the choices at level n as
// (union, family) in preference order; failing (level, covered) states are
// memoized, so the first success is the least solution in that order.
struct LevelSearch {
    const std::vector<std::vector<std::pair<PointSet, std::vector<PointSet>>>>& options;
    std::size_t floor;
    PointSet target;
    std::vector<std::set<std::uint64_t>> failed;
    std::vector<std::size_t> picks;

    bool run(std::size_t level, PointSet covered) {
        if (level == options.size()) return target.subset_of(covered);
        if (failed[level].count(covered.bits())) return false;
        for (std::size_t i = 0; i < options[level].size(); ++i) {
            const PointSet next = level >= floor ? covered | options[level][i].first : covered;
            picks[level] = i;
            if (run(level + 1, next)) return true;
        }
        failed[level].insert(covered.bits());
        return false;
    }

    std::optional<Selection> solve() {
        failed.assign(options.size(), {});
        picks.assign(options.size(), 0);
        if (!run(0, PointSet{})) return std::nullopt;
        Selection out;
        for (std::size_t n = 0; n < options.size(); ++n) out.families.push_back(options[n][picks[n]].second);
        return out;
    }
};

}  // namespace

std::optional<std::vector<PointSet>> rothberger_select(const FiniteSpace& space, const SelectionProblem& problem) {
    validate_problem(space, problem);
    std::vector<std::vector<std::pair<PointSet, std::vector<PointSet>>>> options;
    for (const auto& cover : sorted_covers(problem)) {
        auto& level = options.emplace_back();
        for (PointSet u : cover) level.emplace_back(u, std::vector<PointSet>{u});
    }
    LevelSearch search{options, problem.horizon_floor, space.whole(), {}, {}};
    auto found = search.solve();
    if (!found) return std::nullopt;
    std::vector<PointSet> picks;
    for (const auto& f : found->families) picks.push_back(f.front());
    return picks;
}

std::optional<Selection> menger_select(const FiniteSpace& space, const SelectionProblem& problem,
                                       std::size_t exact_limit) {
    validate_problem(space, problem);
    const auto covers = sorted_covers(problem);
    const PointSet target = space.whole();
    struct Element {
        std::size_t level;
        PointSet set;
    };
    std::vector<Element> elements;
    std::size_t total = 0;
    for (std::size_t n = 0; n < covers.size(); ++n) {
        total += covers[n].size();
        if (n < problem.horizon_floor) continue;
        for (PointSet u : covers[n]) elements.push_back({n, u});
    }
    PointSet reachable;
    for (const auto& e : elements) reachable |= e.set;
    if (!target.subset_of(reachable)) return std::nullopt;

    std::vector<std::size_t> chosen;
    if (total <= exact_limit) {
        // Smallest k first, combinations in lexicographic order.
        const std::size_t m = elements.size();
        bool done = false;
        for (std::size_t k = 0; k <= m && !done; ++k) {
            std::vector<std::size_t> comb(k);
            for (std::size_t i = 0; i < k; ++i) comb[i] = i;
            while (true) {
                PointSet covered;
                for (std::size_t i : comb) covered |= elements[i].set;
                if (target.subset_of(covered)) {
                    chosen = comb;
                    done = true;
                    break;
                }
                std::size_t pos = k;
                while (pos > 0 && comb[pos - 1] == m - k + pos - 1) --pos;
                if (pos == 0) break;
                ++comb[pos - 1];
                for (std::size_t j = pos; j < k; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    } else {
        PointSet covered;
        while (!target.subset_of(covered)) {
            std::size_t best = elements.size(), gain = 0;
            for (std::size_t i = 0; i < elements.size(); ++i) {
                const std::size_t g = elements[i].set.minus(covered).size();
                if (g > gain) {
                    gain = g;
                    best = i;
                }
            }
            if (best == elements.size()) return std::nullopt;
            chosen.push_back(best);
            covered |= elements[best].set;
        }
        std::sort(chosen.begin(), chosen.end());
    }
    Selection out;
    out.families.resize(covers.size());
    for (std::size_t i : chosen) out.families[elements[i].level].push_back(elements[i].set);
    for (auto& f : out.families) sort_canonical(f);
    return out;
}

namespace {

// All pairwise-disjoint families drawn from `candidates` (canonical order),
// in canonical family order, keeping the first family for each union.
std::vector<std::pair<PointSet, std::vector<PointSet>>> disjoint_families(const std::vector<PointSet>& candidates,
                                                                          std::size_t cap) {
    std::vector<std::vector<PointSet>> families;
    std::vector<PointSet> current;
    std::function<void(std::size_t, PointSet)> grow = [&](std::size_t from, PointSet used) {
        families.push_back(current);
        if (families.size() > cap)
            throw ResourceError("screenability search exceeds " + std::to_string(cap) + " disjoint families per level");
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (!candidates[i].disjoint(used)) continue;
            current.push_back(candidates[i]);
            grow(i + 1, used | candidates[i]);
            current.pop_back();
        }
    };
    grow(0, PointSet{});
    std::stable_sort(families.begin(), families.end(), canonical_family_less);
    std::vector<std::pair<PointSet, std::vector<PointSet>>> out;
    std::set<std::uint64_t> unions;
    for (auto& f : families) {
        const PointSet u = union_of(f);
        if (unions.insert(u.bits()).second) out.emplace_back(u, std::move(f));
    }
    return out;
}

}  // namespace

std::optional<Selection> selective_screenability_select(const FiniteSpace& space, const SelectionProblem& problem,
                                                        const Limits& limits) {
    validate_problem(space, problem);
    std::vector<std::vector<std::pair<PointSet, std::vector<PointSet>>>> options;
    for (const auto& cover : sorted_covers(problem)) {
        std::vector<PointSet> candidates;
        for (PointSet open : space.topology())
            if (!open.empty() && std::any_of(cover.begin(), cover.end(), [&](PointSet u) { return open.subset_of(u); }))
                candidates.push_back(open);
        options.push_back(disjoint_families(candidates, limits.families));
    }
    LevelSearch search{options, problem.horizon_floor, space.whole(), {}, {}};
    return search.solve();
}

std::optional<Selection> select(const FiniteSpace& space, const SelectionProblem& problem) {
    switch (problem.mode) {
        case Property::rothberger: {
            auto picks = rothberger_select(space, problem);
            if (!picks) return std::nullopt;
            Selection out;
            for (PointSet u : *picks) out.families.push_back({u});
            return out;
        }
        case Property::menger: return menger_select(space, problem);
        case Property::selective_screenability: return selective_screenability_select(space, problem);
    }
    return std::nullopt;
}

bool check_selection(const FiniteSpace& space, const SelectionProblem& problem, const Selection& selection,
                     std::string* reason) {
    auto fail = [&](std::string why) {
        if (reason) *reason = std::move(why);
        return false;
    };
    if (selection.families.size() != problem.covers.size()) return fail("selection length differs from cover count");
    PointSet hit;
    for (std::size_t n = 0; n < problem.covers.size(); ++n) {
        const auto& cover = problem.covers[n];
        const auto& family = selection.families[n];
        auto in_cover = [&](PointSet s) { return std::find(cover.begin(), cover.end(), s) != cover.end(); };
        const std::string at = " at level " + std::to_string(n);
        switch (problem.mode) {
            case Property::rothberger:
                if (family.size() != 1 || !in_cover(family.front())) return fail("not a single cover member" + at);
                break;
            case Property::menger:
                for (std::size_t i = 0; i < family.size(); ++i) {
                    if (!in_cover(family[i])) return fail(space.format(family[i]) + " is not a cover member" + at);
                    for (std::size_t j = i + 1; j < family.size(); ++j)
                        if (family[i] == family[j]) return fail("repeated member" + at);
                }
                break;
            case Property::selective_screenability:
                for (std::size_t i = 0; i < family.size(); ++i) {
                    if (!space.is_open(family[i])) return fail(space.format(family[i]) + " is not open" + at);
                    if (!std::any_of(cover.begin(), cover.end(), [&](PointSet u) { return family[i].subset_of(u); }))
                        return fail(space.format(family[i]) + " refines no cover member" + at);
                    for (std::size_t j = i + 1; j < family.size(); ++j)
                        if (!family[i].disjoint(family[j])) return fail("family is not pairwise disjoint" + at);
                }
                break;
        }
        if (n >= problem.horizon_floor) hit |= union_of(family);
    }
    if (!space.whole().subset_of(hit)) return fail("some point is never hit at or above the horizon floor");
    return true;
}

}  // namespace endowlab
