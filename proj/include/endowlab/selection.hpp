#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endowlab/limits.hpp"
#include "endowlab/point_set.hpp"
#include "endowlab/space.hpp"

namespace endowlab {

enum class Property { rothberger, menger, selective_screenability };

std::string to_string(Property p);
Property parse_property(std::string_view text);  // throws UsageError

// Finite-horizon selection problem: every point must be hit at some level
// n >= horizon_floor. Levels below the floor still receive a selection.
struct SelectionProblem {
    std::vector<std::vector<PointSet>> covers;
    std::size_t horizon_floor = 0;
    Property mode = Property::rothberger;
};

// Per-level selected families. Rothberger selections are singletons.
struct Selection {
    std::vector<std::vector<PointSet>> families;
};

// Throws InputError unless every cover is an open cover of the space.
void validate_problem(const FiniteSpace& space, const SelectionProblem& problem);

// Exact backtracking over U_n in canonical order; returns the least solution
// in level-by-level canonical order, nullopt after exhaustive failure.
std::optional<std::vector<PointSet>> rothberger_select(const FiniteSpace& space, const SelectionProblem& problem);

// Finite subfamilies F_n ⊆ U_n minimizing the total size Σ|F_n| exactly when
// the problem has at most `exact_limit` cover elements, greedily beyond.
std::optional<Selection> menger_select(const FiniteSpace& space, const SelectionProblem& problem,
                                       std::size_t exact_limit = 12);

// Pairwise-disjoint families of open sets, each inside some cover member.
// Families at a level are tried by member count, then lexicographically.
std::optional<Selection> selective_screenability_select(const FiniteSpace& space, const SelectionProblem& problem,
                                                        const Limits& limits = Limits::current());

// Dispatches on problem.mode; Rothberger picks are wrapped as singletons.
std::optional<Selection> select(const FiniteSpace& space, const SelectionProblem& problem);

// Independent checker for a returned selection: membership / finiteness /
// disjointness-and-refinement per level, plus the late-hit condition.
bool check_selection(const FiniteSpace& space, const SelectionProblem& problem, const Selection& selection,
                     std::string* reason = nullptr);

}  // namespace endowlab
