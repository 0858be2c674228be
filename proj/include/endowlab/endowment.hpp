#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endowlab/cohen.hpp"
#include "endowlab/error.hpp"
#include "endowlab/measure.hpp"
#include "endowlab/poset.hpp"

namespace endowlab {

// A sequence of (weak) endowments, given intensionally: a membership test for
// L_n and a constructor picking some L in L_n inside a maximal antichain.
struct EndowmentFamily {
    std::string name;
    std::function<bool(std::size_t n, std::span<const Cond> members)> accepts;
    std::function<CondSet(std::size_t n, std::span<const Cond> antichain)> construct;
};

struct DowStage {
    CondSet added;            // E_i
    std::vector<unsigned> support;  // D_i, sorted indices
};

// Transcript of the stage-wise extraction of a finite L from a maximal
// antichain of Fn(D,2).
struct DowTrace {
    Cond seed;
    std::vector<DowStage> stages;  // stages[i] = (E_i, D_i), i = 0..n
    CondSet result;                // union of the E_i, canonical order
};

// E_0 = {a} for the least a in A; for i = 1..n every p with supp(p) ⊆ D_{i-1}
// contributes the least member of A compatible with p. Throws
// PreconditionError unless A is a maximal antichain.
DowTrace dow_construct(const CohenPoset& cohen, std::span<const Cond> antichain, std::size_t n);

// Conditions in P_n compatible with no member of `members` (empty means the
// guarantee holds).
CondSet compatibility_gaps(const Poset& poset, const CondSet& level, std::span<const Cond> members);

// L_n membership for Fn(D,2): finite antichains meeting every p with |p| <= n
// in a compatible member. The Dow outputs all belong to it.
EndowmentFamily dow_family(std::shared_ptr<const CohenPoset> cohen);
EndowmentFamily measure_family(std::shared_ptr<const MeasurePoset> algebra);
// Any finite poset with any stratification: L is built greedily from A so
// that every p in P_n meets it.
EndowmentFamily compatibility_family(std::shared_ptr<const Poset> poset, Stratification strat);
// Negative control: returns only the least member of A and accepts any antichain.
EndowmentFamily adversarial_family(std::shared_ptr<const Poset> poset);

struct Violation {
    std::string clause;  // "1", "2", "3'", "3"
    std::optional<Cond> witness;
    std::size_t antichain_id = 0;
    std::string detail;
};

struct EndowmentReport {
    std::string family;
    std::size_t n = 0;
    std::size_t antichains_checked = 0;
    std::size_t units_checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Clauses (1), (2), (3') for each supplied maximal antichain.
EndowmentReport verify_weak_endowment(const Poset& poset, const Stratification& strat, const EndowmentFamily& family,
                                      std::size_t n, const std::vector<CondSet>& antichains, unsigned jobs = 1);

// Thrown with the work done so far when the tuple budget runs out.
class Clause3BudgetExceeded : public ResourceError {
public:
    Clause3BudgetExceeded(const std::string& what, EndowmentReport partial)
        : ResourceError(what), partial_(std::move(partial)) {}
    const EndowmentReport& partial() const { return partial_; }

private:
    EndowmentReport partial_;
};

// Clause (3): every p in P_n and every n-tuple of constructor outputs admit
// q_i in L_i with {p, q_0, ..., q_{n-1}} bounded below. Tuples are taken as
// multisets of the supplied antichains. n = 0 holds vacuously.
EndowmentReport verify_full_endowment_clause3(const Poset& poset, const Stratification& strat,
                                              const EndowmentFamily& family, std::size_t n,
                                              const std::vector<CondSet>& antichains,
                                              std::size_t budget = Limits::current().clause3_budget);

}  // namespace endowlab
