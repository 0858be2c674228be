#include "endowlab/endowment.hpp"

#include <algorithm>
#include <bit>

#include "endowlab/parallel.hpp"

namespace endowlab {

namespace {

std::vector<unsigned> support_of(const CohenPoset& cohen, std::uint32_t mask) {
    return cohen.supp(CohenCondition{mask, 0});
}

Cond least_compatible(const Poset& poset, std::span<const Cond> sorted_antichain, Cond p) {
    for (Cond a : sorted_antichain)
        if (poset.compatible(a, p)) return a;
    throw PreconditionError("antichain is not maximal: '" + poset.label(p) + "' meets no member");
}

}  // namespace

DowTrace dow_construct(const CohenPoset& cohen, std::span<const Cond> antichain, std::size_t n) {
    const Poset& poset = cohen.poset();
    if (!poset.is_maximal_antichain(antichain))
        throw PreconditionError("dow_construct requires a maximal antichain of the Cohen poset");
    CondSet sorted(antichain.begin(), antichain.end());
    std::sort(sorted.begin(), sorted.end());

    DowTrace trace{sorted.front(), {}, {}};
    CondSet gathered{trace.seed};
    std::uint32_t domain = cohen.support_mask(trace.seed);
    trace.stages.push_back({{trace.seed}, support_of(cohen, domain)});

    for (std::size_t i = 1; i <= n; ++i) {
        CondSet stage;
        for (Cond p : poset.all()) {
            if ((cohen.support_mask(p) & ~domain) != 0) continue;
            stage.push_back(least_compatible(poset, sorted, p));
        }
        std::sort(stage.begin(), stage.end());
        stage.erase(std::unique(stage.begin(), stage.end()), stage.end());
        for (Cond a : stage) domain |= cohen.support_mask(a);
        gathered.insert(gathered.end(), stage.begin(), stage.end());
        trace.stages.push_back({std::move(stage), support_of(cohen, domain)});
    }
    std::sort(gathered.begin(), gathered.end());
    gathered.erase(std::unique(gathered.begin(), gathered.end()), gathered.end());
    trace.result = std::move(gathered);
    return trace;
}

CondSet compatibility_gaps(const Poset& poset, const CondSet& level, std::span<const Cond> members) {
    CondSet gaps;
    for (Cond p : level) {
        const bool met = std::any_of(members.begin(), members.end(), [&](Cond q) { return poset.compatible(p, q); });
        if (!met) gaps.push_back(p);
    }
    return gaps;
}

EndowmentFamily dow_family(std::shared_ptr<const CohenPoset> cohen) {
    auto strat = std::make_shared<const Stratification>(stratify_cohen(*cohen));
    EndowmentFamily family;
    family.name = "dow";
    family.accepts = [cohen, strat](std::size_t n, std::span<const Cond> members) {
        const Poset& poset = cohen->poset();
        return !members.empty() && poset.is_antichain(members) &&
               compatibility_gaps(poset, strat->level(n), members).empty();
    };
    family.construct = [cohen](std::size_t n, std::span<const Cond> antichain) {
        return dow_construct(*cohen, antichain, n).result;
    };
    return family;
}

EndowmentFamily measure_family(std::shared_ptr<const MeasurePoset> algebra) {
    EndowmentFamily family;
    family.name = "measure";
    family.accepts = [algebra](std::size_t n, std::span<const Cond> members) {
        return algebra->poset().is_antichain(members) && measure_endowment_member(*algebra, n, members);
    };
    family.construct = [algebra](std::size_t n, std::span<const Cond> antichain) {
        return extract_measure_endowment(*algebra, n, antichain);
    };
    return family;
}

EndowmentFamily compatibility_family(std::shared_ptr<const Poset> poset, Stratification strat) {
    auto levels = std::make_shared<const Stratification>(std::move(strat));
    EndowmentFamily family;
    family.name = "compatibility";
    family.accepts = [poset, levels](std::size_t n, std::span<const Cond> members) {
        return !members.empty() && poset->is_antichain(members) &&
               compatibility_gaps(*poset, levels->level(n), members).empty();
    };
    family.construct = [poset, levels](std::size_t n, std::span<const Cond> antichain) {
        if (!poset->is_maximal_antichain(antichain))
            throw PreconditionError("endowment constructor requires a maximal antichain");
        CondSet sorted(antichain.begin(), antichain.end());
        std::sort(sorted.begin(), sorted.end());
        CondSet out;
        for (Cond p : levels->level(n)) {
            const bool met = std::any_of(out.begin(), out.end(), [&](Cond q) { return poset->compatible(p, q); });
            if (!met) out.push_back(least_compatible(*poset, sorted, p));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return family;
}

EndowmentFamily adversarial_family(std::shared_ptr<const Poset> poset) {
    EndowmentFamily family;
    family.name = "adversarial";
    family.accepts = [poset](std::size_t, std::span<const Cond> members) { return poset->is_antichain(members); };
    family.construct = [](std::size_t, std::span<const Cond> antichain) {
        return CondSet{*std::min_element(antichain.begin(), antichain.end())};
    };
    return family;
}

namespace {

std::vector<Violation> check_one(const Poset& poset, const Stratification& strat, const EndowmentFamily& family,
                                 std::size_t n, const CondSet& antichain, std::size_t id) {
    if (!poset.is_maximal_antichain(antichain))
        throw PreconditionError("antichain #" + std::to_string(id) + " is not a maximal antichain");
    const CondSet out = family.construct(n, antichain);
    std::vector<Violation> found;

    // (1) a finite antichain
    bool is_antichain = true;
    for (std::size_t i = 0; i < out.size() && is_antichain; ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i] == out[j] || poset.compatible(out[i], out[j])) {
                found.push_back({"1", out[j], id, "members '" + poset.label(out[i]) + "' and '" + poset.label(out[j]) +
                                                      "' are compatible"});
                is_antichain = false;
                break;
            }

    // (2) contained in A and accepted by L_n
    for (Cond q : out)
        if (!std::binary_search(antichain.begin(), antichain.end(), q))
            found.push_back({"2", q, id, "constructed member is not in the antichain"});
    if (is_antichain && !family.accepts(n, out))
        found.push_back({"2", std::nullopt, id, "constructed set is rejected by the level predicate"});

    // (3') every p in P_n meets the output
    for (Cond p : compatibility_gaps(poset, strat.level(n), out))
        found.push_back({"3'", p, id, "no member of L is compatible with p"});
    return found;
}

}  // namespace

EndowmentReport verify_weak_endowment(const Poset& poset, const Stratification& strat, const EndowmentFamily& family,
                                      std::size_t n, const std::vector<CondSet>& antichains, unsigned jobs) {
    std::vector<CondSet> sorted = antichains;
    for (auto& a : sorted) std::sort(a.begin(), a.end());
    std::vector<std::vector<Violation>> per(sorted.size());
    parallel_for(sorted.size(), jobs, [&](std::size_t i) { per[i] = check_one(poset, strat, family, n, sorted[i], i); });

    EndowmentReport report;
    report.family = family.name;
    report.n = n;
    report.antichains_checked = sorted.size();
    report.units_checked = sorted.size() * strat.level(n).size();
    for (auto& v : per) report.violations.insert(report.violations.end(), v.begin(), v.end());
    return report;
}

namespace {

bool bounded_choice(const Poset& poset, const std::vector<const CondSet*>& sets, std::size_t depth, CondSet& chosen) {
    if (depth == sets.size()) return true;
    for (Cond q : *sets[depth]) {
        chosen.push_back(q);
        if (poset.has_lower_bound(chosen) && bounded_choice(poset, sets, depth + 1, chosen)) {
            chosen.pop_back();
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

EndowmentReport verify_full_endowment_clause3(const Poset& poset, const Stratification& strat,
                                              const EndowmentFamily& family, std::size_t n,
                                              const std::vector<CondSet>& antichains, std::size_t budget) {
    EndowmentReport report;
    report.family = family.name;
    report.n = n;
    report.antichains_checked = antichains.size();
    if (n == 0 || antichains.empty()) return report;

    std::vector<CondSet> outputs;
    for (const auto& a : antichains) {
        CondSet sorted = a;
        std::sort(sorted.begin(), sorted.end());
        if (!poset.is_maximal_antichain(sorted)) throw PreconditionError("clause (3) input is not a maximal antichain");
        outputs.push_back(family.construct(n, sorted));
    }

    // Multisets of size n over output ids, as non-decreasing index tuples.
    std::vector<std::size_t> tuple(n, 0);
    const std::size_t m = outputs.size();
    while (true) {
        std::vector<const CondSet*> sets;
        for (std::size_t i : tuple) sets.push_back(&outputs[i]);
        for (Cond p : strat.level(n)) {
            if (report.units_checked >= budget)
                throw Clause3BudgetExceeded("clause (3) budget of " + std::to_string(budget) + " units exceeded", report);
            ++report.units_checked;
            CondSet chosen{p};
            if (!bounded_choice(poset, sets, 0, chosen)) {
                std::string ids;
                for (std::size_t i : tuple) ids += (ids.empty() ? "" : ",") + std::to_string(i);
                report.violations.push_back({"3", p, tuple.front(), "no bounded choice from tuple (" + ids + ")"});
            }
        }
        // next non-decreasing tuple
        std::size_t pos = n;
        while (pos > 0 && tuple[pos - 1] == m - 1) --pos;
        if (pos == 0) break;
        ++tuple[pos - 1];
        for (std::size_t j = pos; j < n; ++j) tuple[j] = tuple[pos - 1];
    }
    return report;
}

}  // namespace endowlab
