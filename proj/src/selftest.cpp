#include "endowlab/selftest.hpp"

#include <chrono>

#include "endowlab/error.hpp"
#include "endowlab/fixtures.hpp"
#include "endowlab/preservation.hpp"

namespace endowlab {

namespace {

constexpr std::size_t max_samples = 5;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ForcingNotion random_notion(Rng& rng, const Limits& limits) {
    switch (rng.below(3)) {
        case 0: return make_forcing_notion(PosetSpec::cohen(rng.between(1, 2)), limits);
        case 1: return make_forcing_notion(PosetSpec::measure(static_cast<unsigned>(rng.between(1, 2))), limits);
        default: return make_forcing_notion(random_explicit_poset(rng, rng.between(2, 9)), limits);
    }
}

}  // namespace

void SweepResult::fail(std::string what) {
    ++failures;
    if (samples.size() < max_samples) samples.push_back(std::move(what));
}

SweepResult oracle_sweep(std::uint64_t seed, std::size_t count, const Limits& limits) {
    SweepResult out;
    out.name = "oracle-equivalence";
    Stopwatch clock;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const ForcingNotion notion = random_notion(rng, limits);
        const Poset& poset = *notion.poset;
        const FiniteSpace space = random_space(rng, rng.between(1, 4), rng.between(1, 5));
        // Arbitrary pairs over arbitrary subsets: not restricted to valid cover names.
        SetName name;
        const std::size_t pairs = rng.between(0, 6);
        for (std::size_t j = 0; j < pairs; ++j)
            name.pairs.push_back(NamePair{cond_at(rng.below(poset.size())), PointSet(rng.below(std::uint64_t{1} << space.size()))});
        name.normalize();
        const Cond p = cond_at(rng.below(poset.size()));
        const PointSet v = PointSet(rng.below(std::uint64_t{1} << space.size()));
        const bool semantic = forces(poset, p, stmt::ExistsSupersetInCover{name, v});
        const bool order = forces_dense(poset, p, name, v);
        ++out.units;
        if (semantic != order)
            out.fail(notion.describe() + " p=" + poset.label(p) + " V=" + space.format(v) +
                     ": forces=" + (semantic ? "true" : "false") + " dense=" + (order ? "true" : "false"));
    }
    out.seconds = clock.seconds();
    return out;
}

SweepResult dow_sweep(std::uint64_t seed, std::size_t max_d, std::size_t max_n, std::size_t exhaustive_d,
                      std::size_t seeded, unsigned jobs, const Limits& limits) {
    SweepResult out;
    out.name = "dow-guarantee";
    Stopwatch clock;
    for (std::size_t d = 1; d <= max_d; ++d) {
        auto cohen = std::make_shared<const CohenPoset>(make_cohen(d, limits));
        const Poset& poset = cohen->poset();
        const Stratification strat = stratify_cohen(*cohen);
        const auto antichains =
            d <= exhaustive_d ? all_maximal_antichains(poset) : random_maximal_antichains(poset, seeded, seed + d);
        const EndowmentFamily family = dow_family(cohen);
        for (std::size_t n = 0; n <= max_n; ++n) {
            const EndowmentReport report = verify_weak_endowment(poset, strat, family, n, antichains, jobs);
            out.units += report.antichains_checked;
            for (const auto& v : report.violations)
                out.fail("|D|=" + std::to_string(d) + " n=" + std::to_string(n) + " clause " + v.clause + ": " +
                         v.detail);
        }
    }
    out.seconds = clock.seconds();
    return out;
}

SweepResult measure_sweep(std::uint64_t seed, std::size_t max_k, std::size_t max_n, std::size_t exhaustive_k,
                          std::size_t seeded, unsigned jobs, const Limits& limits) {
    SweepResult out;
    out.name = "measure-pigeonhole";
    Stopwatch clock;
    for (std::size_t k = 1; k <= max_k; ++k) {
        auto algebra = std::make_shared<const MeasurePoset>(make_measure_algebra(static_cast<unsigned>(k), limits));
        const Poset& poset = algebra->poset();
        const Stratification strat = stratify_measure(*algebra);
        const auto antichains =
            k <= exhaustive_k ? all_maximal_antichains(poset) : random_maximal_antichains(poset, seeded, seed + k);
        const EndowmentFamily family = measure_family(algebra);
        for (std::size_t n = 0; n <= max_n; ++n) {
            for (std::size_t a = 0; a < antichains.size(); ++a) {
                // Integer form of sum |c| / 2^k > 1 - 2^-n.
                std::uint64_t points = 0;
                for (Cond c : extract_measure_endowment(*algebra, n, antichains[a])) points += algebra->point_count(c);
                const std::uint64_t cube = std::uint64_t{1} << k, scale = std::uint64_t{1} << n;
                if (!(points * scale > (scale - 1) * cube))
                    out.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " antichain " + std::to_string(a) +
                             ": extracted " + std::to_string(points) + "/" + std::to_string(cube) + " of the cube");
            }
            const EndowmentReport report = verify_weak_endowment(poset, strat, family, n, antichains, jobs);
            out.units += report.antichains_checked;
            for (const auto& v : report.violations)
                out.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " clause " + v.clause + ": " +
                         v.detail);
        }
    }
    out.seconds = clock.seconds();
    return out;
}

SweepResult fixed_scenarios() {
    SweepResult out;
    out.name = "fixed-scenarios";
    Stopwatch clock;
    const std::pair<const char*, Scenario> cases[] = {
        {"I1 rothberger", fixtures::i1_scenario(Property::rothberger)},
        {"I1 selective_screenability", fixtures::i1_scenario(Property::selective_screenability)},
        {"measure k=1 rothberger", fixtures::measure_analog_scenario(Property::rothberger)},
    };
    for (const auto& [label, scenario] : cases) {
        ++out.units;
        try {
            const PreservationRun run = run_preservation(scenario);
            if (!run.certified) out.fail(std::string(label) + ": certificate is negative");
        } catch (const Error& e) {
            out.fail(std::string(label) + ": " + e.what());
        }
    }
    out.seconds = clock.seconds();
    return out;
}

SweepResult scenario_sweep(std::uint64_t seed, std::size_t count, const GenBounds& bounds, const Limits& limits) {
    SweepResult out;
    out.name = "scenario-sweep";
    Stopwatch clock;
    constexpr Property properties[] = {Property::rothberger, Property::menger, Property::selective_screenability};
    for (std::size_t i = 0; i < count; ++i) {
        const Property property = properties[i % 3];
        const Scenario scenario = generate_scenario(seed + i, bounds, property, limits);
        ++out.units;
        try {
            const PreservationRun run = run_preservation(scenario);
            if (!run.certified)
                out.fail("seed " + std::to_string(seed + i) + " " + to_string(property) + ": certificate is negative");
        } catch (const ScenarioError&) {
            ++out.skipped;
        } catch (const Error& e) {
            out.fail("seed " + std::to_string(seed + i) + " " + to_string(property) + ": " + e.what());
        }
    }
    out.seconds = clock.seconds();
    return out;
}

json sweep_to_json(const SweepResult& r) {
    return {{"name", r.name},
            {"units", r.units},
            {"skipped", r.skipped},
            {"failures", r.failures},
            {"samples", r.samples},
            {"status", r.passed() ? "pass" : "fail"}};
}

}  // namespace endowlab
