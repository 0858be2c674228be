#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "endowlab/generate.hpp"
#include "endowlab/io.hpp"

namespace endowlab {

struct SweepResult {
    std::string name;
    std::size_t units = 0;     // checked instances
    std::size_t skipped = 0;   // e.g. scenarios whose ground selection fails
    std::size_t failures = 0;
    std::vector<std::string> samples;  // first few failure descriptions
    double seconds = 0;

    bool passed() const { return failures == 0; }
    void fail(std::string what);
};

// forces vs forces_dense on `count` seeded (poset, name, p, V) quadruples.
SweepResult oracle_sweep(std::uint64_t seed, std::size_t count, const Limits& limits = Limits::current());

// dow_construct against clauses (1), (2), (3'): exhaustive for |D| <= exhaustive_d,
// otherwise `seeded` random maximal antichains.
SweepResult dow_sweep(std::uint64_t seed, std::size_t max_d, std::size_t max_n, std::size_t exhaustive_d,
                      std::size_t seeded, unsigned jobs = 1, const Limits& limits = Limits::current());

// extract_measure_endowment: exact total measure > 1 - 2^-n and clause (3').
SweepResult measure_sweep(std::uint64_t seed, std::size_t max_k, std::size_t max_n, std::size_t exhaustive_k,
                          std::size_t seeded, unsigned jobs = 1, const Limits& limits = Limits::current());

// The I1 scenario (Rothberger, selective screenability) and the measure analog.
SweepResult fixed_scenarios();

// run_preservation on `count` generated scenarios, cycling through the three
// properties. Ground-selection failures are counted as skipped.
SweepResult scenario_sweep(std::uint64_t seed, std::size_t count, const GenBounds& bounds,
                           const Limits& limits = Limits::current());

json sweep_to_json(const SweepResult& r);

}  // namespace endowlab
