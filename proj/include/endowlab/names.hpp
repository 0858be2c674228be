#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endowlab/endowment.hpp"
#include "endowlab/forcing.hpp"
#include "endowlab/space.hpp"

namespace endowlab {

// A name for an open cover: (condition, basic open set) pairs.
using CoverName = SetName;

// Checks that every value is a base set and that, for every point x, the
// conditions lying below some pair (q, U) with x in U form a dense set.
// For a finite X the extension adds no subsets of X, so "forced to be an open
// cover" reduces to this per-point density.
bool validate_cover_name(const Poset& poset, const FiniteSpace& space, const CoverName& name,
                         std::string* reason = nullptr);

// The decided name W_x for one point: a maximal antichain A_x inside the dense
// witness set, and for each p in A_x the value W_{x,p} with x in W_{x,p}.
struct PointName {
    std::size_t point = 0;
    CondSet antichain;
    std::vector<PointSet> values;     // parallel to antichain
    std::vector<std::size_t> source;  // index of the dominating pair in the cover name
};

// Greedy canonical antichain in each D_x; W_{x,p} is the canonically least
// set among pairs (q, U) with p <= q and x in U. Throws PreconditionError for
// an invalid name.
std::vector<PointName> derive_point_names(const Poset& poset, const FiniteSpace& space, const CoverName& name);

struct PointApproximation {
    std::size_t point = 0;
    CondSet endowment;  // L_{x,n} ⊆ A_x
    PointSet value;     // V_{x,n}
};

// The n-th approximation: V_{x,n} is the intersection of W_{x,p} over L_{x,n}.
struct Approximation {
    std::size_t level = 0;
    std::vector<PointApproximation> elements;
    std::vector<PointSet> cover;  // canonical, deduplicated
};

Approximation approximate(const Poset& poset, const FiniteSpace& space, const std::vector<PointName>& point_names,
                          std::size_t n, const EndowmentFamily& family);

struct ApproxTriple {
    PointSet v;
    Cond p;
    Cond r;
};

struct ApproxCertificate {
    std::size_t level = 0;
    bool positive = false;
    std::vector<ApproxTriple> triples;
    std::optional<std::pair<PointSet, Cond>> counterexample;
};

// For every V in the cover and p in P_n, finds the least r <= p forcing
// "some member of the cover name contains V".
ApproxCertificate check_lemma_approx(const Poset& poset, const Stratification& strat, const Approximation& approx,
                                     const CoverName& name);

// Definable refinement: (p, H) is a pair iff p forces that some member of
// the cover name contains H.
struct RefinedName {
    SetName name;
    std::vector<PointSet> family;  // the ground family H, canonical
};

struct RefineTriple {
    Cond p;
    PointSet h;
    Cond r;
};

struct RefineCertificate {
    std::size_t level = 0;
    bool refines_forced = false;  // clause (1)
    bool positive = false;
    std::vector<RefineTriple> triples;  // clause (2) witnesses
    std::optional<std::pair<Cond, PointSet>> counterexample;
};

// Throws InputError if a member of `family` is not open, PreconditionError if
// `family` does not refine approx.cover.
std::pair<RefinedName, RefineCertificate> refine_name(const Poset& poset, const FiniteSpace& space,
                                                     const Stratification& strat, const Approximation& approx,
                                                     const std::vector<PointSet>& family, const CoverName& name);

struct PipelineCertificate {
    std::vector<RefineCertificate> levels;
    std::vector<bool> subfamily;  // forced W_n ⊆ H_n
    std::vector<bool> refines;    // forced W_n refines U_n
    bool covers = false;          // forced union of the W_n covers X
    bool positive = false;
};

// Refines every level and certifies the combined forced conclusion. The
// finite-horizon hypothesis (every x lies in some H in H_n with
// stabilization_index <= n < N) is checked first; PreconditionError names
// the first uncovered point.
std::pair<std::vector<RefinedName>, PipelineCertificate> endow_refine_pipeline(
    const Poset& poset, const FiniteSpace& space, const Stratification& strat, const std::vector<CoverName>& names,
    const std::vector<std::vector<PointSet>>& families, const std::vector<Approximation>& approximations);

}  // namespace endowlab
