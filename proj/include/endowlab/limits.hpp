#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace endowlab {

// Resource limits. Defaults are desk-scale; ENDOWLAB_BOUNDS overrides them
// with a comma-separated key=value list, e.g. "cohen_D=4,points=5".
struct Limits {
    std::size_t cohen_index = 5;       // |D| for Fn(D,2)
    std::size_t measure_k = 3;         // cube dimension; k=4 compiles 65535 conditions
    std::size_t exhaustive = 40;       // elements for exhaustive antichain enumeration
    std::size_t points = 6;            // |X| in generated spaces
    std::size_t base = 12;             // base size in generated spaces
    std::size_t poset = 40;            // elements of generated posets
    std::size_t levels = 8;            // N, number of names in a scenario
    std::size_t clause3_budget = 2'000'000;  // (p, tuple) units for the full clause-(3) check
    std::size_t families = 200'000;    // disjoint families per level in the screenability solver

    // Parses "key=value,..." on top of `base_limits`; throws UsageError.
    static Limits parse(std::string_view text, Limits base_limits);
    // Defaults with ENDOWLAB_BOUNDS applied; read once per process.
    static const Limits& current();

    std::string describe() const;
};

}  // namespace endowlab
