// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "endowlab/error.hpp"
#include "endowlab/fixtures.hpp"
#include "endowlab/generate.hpp"
#include "endowlab/preservation.hpp"
#include "endowlab/selftest.hpp"
#include "oracles.hpp"

using namespace endowlab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Clause (3') rechecked with the brute-force compatibility oracle.
bool meets_level(const Poset& P, const CondSet& level, const CondSet& l) {
    for (Cond p : level)
        if (std::none_of(l.begin(), l.end(), [&](Cond q) { return oracle::compatible(P, p, q); })) return false;
    return true;
}

Outcome ac1() {
    Outcome o;
    std::size_t runs = 0;
    for (std::size_t d = 1; d <= 3; ++d) {
        auto cohen = std::make_shared<const CohenPoset>(make_cohen(d));
        const Poset& P = cohen->poset();
        const Stratification strat = stratify_cohen(*cohen);
        const auto antichains = d <= 2 ? all_maximal_antichains(P) : random_maximal_antichains(P, 500, 2024);
        const EndowmentFamily family = dow_family(cohen);
        for (std::size_t n = 0; n <= 3; ++n) {
            const EndowmentReport r = verify_weak_endowment(P, strat, family, n, antichains);
            o.require(r.ok(), "|D|=" + std::to_string(d) + " n=" + std::to_string(n) + " has " +
                                  std::to_string(r.violations.size()) + " violations");
            for (const CondSet& a : antichains) {
                const CondSet l = dow_construct(*cohen, a, n).result;
                o.require(!l.empty() && oracle::is_antichain(P, l), "output is not a finite antichain");
                o.require(std::includes(a.begin(), a.end(), l.begin(), l.end()), "output is not inside A");
                o.require(meets_level(P, strat.level(n), l), "oracle recheck of clause (3') failed");
                ++runs;
            }
        }
    }
    o.detail << runs << " (antichain, n) runs";
    return o;
}

Outcome ac2() {
    Outcome o;
    std::size_t runs = 0;
    for (unsigned k = 1; k <= 3; ++k) {
        auto algebra = std::make_shared<const MeasurePoset>(make_measure_algebra(k));
        const Poset& P = algebra->poset();
        const Stratification strat = stratify_measure(*algebra);
        const auto antichains = k <= 2 ? all_maximal_antichains(P) : random_maximal_antichains(P, 500, 4048);
        for (std::size_t n = 0; n <= 2; ++n) {
            const Measure bound = Measure(1) - Measure(1, std::int64_t{1} << n);
            for (const CondSet& a : antichains) {
                const CondSet l = extract_measure_endowment(*algebra, n, a);
                Measure total = 0;
                for (Cond q : l) total += Measure(static_cast<std::int64_t>(algebra->point_count(q)),
                                                  static_cast<std::int64_t>(algebra->cube_size()));
                o.require(total > bound, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " total measure too small");
                o.require(meets_level(P, strat.level(n), l), "clause (3') failed");
                ++runs;
            }
            const EndowmentReport r = verify_weak_endowment(P, strat, measure_family(algebra), n, antichains);
            o.require(r.ok(), "verifier reported violations");
        }
    }
    o.detail << runs << " (antichain, n) runs";
    return o;
}

Outcome ac3() {
    Outcome o;
    const SweepResult r = oracle_sweep(3, 1000);
    o.require(r.units == 1000, "wrong number of quadruples");
    o.require(r.passed(), r.samples.empty() ? "" : r.samples.front());
    o.detail << r.units - r.failures << "/" << r.units << " agree";
    return o;
}

Outcome ac4() {
    Outcome o;
    std::size_t certs = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Scenario s = generate_scenario(40000 + seed, GenBounds{}, Property::rothberger);
        const Poset& P = *s.notion.poset;
        const EndowmentFamily family = s.notion.family(s.family);
        bool all = true;
        for (std::size_t n = 0; n < s.names.size(); ++n) {
            const Approximation a = approximate(P, s.space, derive_point_names(P, s.space, s.names[n]), n, family);
            all = all && check_lemma_approx(P, s.notion.strat, a, s.names[n]).positive;
        }
        o.require(all, "scenario seed " + std::to_string(40000 + seed));
        certs += all;
    }
    o.detail << certs << "/200 scenarios positive at every level";
    return o;
}

Outcome ac5() {
    Outcome o;
    std::size_t positive = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Scenario s = generate_scenario(50000 + seed, GenBounds{}, Property::menger);
        const Poset& P = *s.notion.poset;
        Rng rng(seed);
        const std::size_t n = rng.below(s.names.size());
        const Approximation a =
            approximate(P, s.space, derive_point_names(P, s.space, s.names[n]), n, s.notion.family(s.family));
        std::vector<PointSet> h;
        for (PointSet u : s.space.topology())
            if (!u.empty() && rng.chance(1, 2) &&
                std::any_of(a.cover.begin(), a.cover.end(), [&](PointSet v) { return u.subset_of(v); }))
                h.push_back(u);
        sort_canonical(h);
        const auto [w, cert] = refine_name(P, s.space, s.notion.strat, a, h, s.names[n]);
        const bool ok = cert.refines_forced && cert.positive;
        o.require(ok, "instance seed " + std::to_string(seed));
        positive += ok;
    }
    o.detail << positive << "/200 certificates positive";
    return o;
}

Outcome ac6() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (Property p : {Property::rothberger, Property::menger, Property::selective_screenability}) {
        std::size_t certified = 0, unsatisfiable = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const Scenario s = generate_scenario(60000 + seed, GenBounds{}, p);
            o.require(s.names.size() >= s.notion.strat.stabilization_index() + s.space.size(), "headroom missing");
            try {
                const PreservationRun run = run_preservation(s);
                o.require(run.certified, to_string(p) + " seed " + std::to_string(60000 + seed) + " not certified");
                certified += run.certified;
            } catch (const ScenarioError&) {
                ++unsatisfiable;
            }
        }
        o.detail << to_string(p) << " " << certified << " certified, " << unsatisfiable << " unsatisfiable; ";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < 600, "over the 10 minute budget");
    o.detail << "runtime " << seconds << " s";
    return o;
}

Outcome ac7() {
    Outcome o;
    const std::string fixtures = ENDOWLAB_FIXTURES;
    const std::pair<Scenario, std::string> cases[] = {
        {fixtures::i1_scenario(Property::rothberger), fixtures + "/i1_certificate.json"},
        {fixtures::measure_analog_scenario(Property::rothberger), fixtures + "/measure_k1_certificate.json"},
    };
    for (const auto& [scenario, golden] : cases) {
        const std::string first = certificate_to_json(scenario, run_preservation(scenario)).dump(2) + "\n";
        const std::string second = certificate_to_json(scenario, run_preservation(scenario)).dump(2) + "\n";
        o.require(first == second, "two runs differ for " + golden);
        o.require(first == slurp(golden), "certificate differs from " + golden);
        o.require(verify_certificate(json::parse(first)).ok(), "stored certificate does not verify");
    }
    o.require(run_preservation(cases[0].first).atoms.size() == 4, "I1 should have 4 atoms");
    o.require(run_preservation(cases[1].first).atoms.size() == 2, "the measure analog should have 2 atoms");

    const ForcingNotion cohen = make_forcing_notion(PosetSpec::cohen(2));
    const CondSet a{cohen.cohen->parse_cond("0:0"), cohen.cohen->parse_cond("0:1")};
    const json trace = dow_trace_to_json(*cohen.cohen, dow_construct(*cohen.cohen, a, 1), 1);
    o.require(trace == json::parse(slurp(fixtures + "/i1_dow_n1.json")), "Dow trace differs from the golden trace");
    o.detail << "2 certificates and 1 trace byte-identical";
    return o;
}

Outcome ac8() {
    Outcome o;
    // Adversarial endowment family on Fn({0,1},2): clause (3') must fail with witness (0:1).
    auto cohen = std::make_shared<const CohenPoset>(make_cohen(2));
    const std::shared_ptr<const Poset> poset(cohen, &cohen->poset());
    const auto antichains = all_maximal_antichains(*poset);
    const EndowmentReport weak =
        verify_weak_endowment(*poset, stratify_cohen(*cohen), adversarial_family(poset), 1, antichains);
    const CondSet a{cohen->parse_cond("0:0"), cohen->parse_cond("0:1")};
    const std::size_t id = static_cast<std::size_t>(std::find(antichains.begin(), antichains.end(), a) - antichains.begin());
    const bool witnessed = std::any_of(weak.violations.begin(), weak.violations.end(), [&](const Violation& v) {
        return v.clause == "3'" && v.antichain_id == id && v.witness == cohen->parse_cond("0:1");
    });
    o.require(witnessed, "adversarial clause (3') violation not reported");
    const std::vector<CondSet> pair{a, {cohen->parse_cond("1:0"), cohen->parse_cond("1:1")}};
    o.require(!verify_full_endowment_clause3(*poset, stratify_cohen(*cohen), adversarial_family(poset), 2, pair).ok(),
              "adversarial clause (3) violation not reported");

    // Tampered approximation: {y, z} lies in no member of the name.
    const Scenario t = fixtures::tamper_scenario();
    const Poset& P = *t.notion.poset;
    Approximation approx =
        approximate(P, t.space, derive_point_names(P, t.space, t.names[0]), 1, t.notion.family(t.family));
    approx.cover.push_back(t.space.set_of({"y", "z"}));
    sort_canonical(approx.cover);
    const ApproxCertificate neg = check_lemma_approx(P, t.notion.strat, approx, t.names[0]);
    o.require(!neg.positive && neg.counterexample && neg.counterexample->first == t.space.set_of({"y", "z"}),
              "tampered approximation was not rejected");

    // Tampered certificate.
    json cert = json::parse(slurp(std::string(ENDOWLAB_FIXTURES) + "/i1_certificate.json"));
    cert["stages"]["selection"][2] = json::array({json::array({"x"})});
    o.require(!verify_certificate(cert).ok(), "tampered certificate verified");
    o.detail << weak.violations.size() << " adversarial violations, tampered approximation and certificate rejected";
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"weak-endowment soundness (Dow, Fn(D,2))", ac1},
        {"measure-algebra endowment", ac2},
        {"oracle equivalence", ac3},
        {"approximation lemma replay", ac4},
        {"refinement lemma replay", ac5},
        {"preservation theorem replays", ac6},
        {"hand-checkable fixtures", ac7},
        {"negative controls", ac8},
    };
    bool all = true;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "AC" << index++ << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << name << ": " << o.detail.str()
                  << " [" << seconds << " s]" << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
