#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "endowlab/instance.hpp"
#include "endowlab/rng.hpp"

namespace endowlab {

// Requested generator bounds; checked against the resource limits.
struct GenBounds {
    std::size_t points = 6;
    std::size_t base = 12;
    std::size_t poset = 40;
    std::size_t levels = 8;

    // "default", "small", "large", or "points=4,levels=6,...".
    static GenBounds parse(std::string_view text);
    // Throws ResourceError when a bound exceeds `limits`.
    void check(const Limits& limits) const;
};

// Greedy completion of a random antichain: shuffled scan, keep anything
// incompatible with everything kept so far.
CondSet random_maximal_antichain(const Poset& poset, Rng& rng);
std::vector<CondSet> random_maximal_antichains(const Poset& poset, std::size_t count, std::uint64_t seed);

// Random order on `size` elements "e0", "e1", ... (edges i < j kept with
// probability num/den, then closed).
PosetSpec random_explicit_poset(Rng& rng, std::size_t size, std::uint64_t num = 1, std::uint64_t den = 3);

FiniteSpace random_space(Rng& rng, std::size_t points, std::size_t base_sets);

// Valid by construction: every point gets a random maximal antichain whose
// members carry random base sets containing the point; `noise` extra pairs.
CoverName random_cover_name(const Poset& poset, const FiniteSpace& space, Rng& rng, std::size_t noise);

// Deterministic in (seed, bounds, property). The name count N satisfies
// N >= stabilization_index + |X|.
Scenario generate_scenario(std::uint64_t seed, const GenBounds& bounds, Property property,
                           const Limits& limits = Limits::current());

}  // namespace endowlab
