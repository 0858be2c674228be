#include "endowlab/preservation.hpp"

#include <algorithm>

#include "endowlab/error.hpp"

namespace endowlab {

std::vector<AtomRow> certify_atoms(const Poset& poset, const FiniteSpace& space, const std::vector<CoverName>& names,
                                   const std::vector<std::vector<PointSet>>& families,
                                   const std::vector<SetName>& refined, Property property) {
    std::vector<AtomRow> rows;
    for (Cond a : poset.atoms()) {
        AtomRow row{a, {}, false, true};
        PointSet covered;
        for (std::size_t n = 0; n < refined.size(); ++n) {
            AtomLevel level;
            level.value = evaluate_name(poset, refined[n], a);
            const auto cover = evaluate_name(poset, names[n], a);
            const auto& ground = families[n];
            level.subfamily = std::all_of(level.value.begin(), level.value.end(), [&](PointSet w) {
                return std::find(ground.begin(), ground.end(), w) != ground.end();
            });
            level.refines = std::all_of(level.value.begin(), level.value.end(), [&](PointSet w) {
                return std::any_of(cover.begin(), cover.end(), [&](PointSet u) { return w.subset_of(u); });
            });
            switch (property) {
                case Property::rothberger: level.property = level.value.size() <= 1; break;
                case Property::menger: level.property = true; break;
                case Property::selective_screenability: {
                    level.property = true;
                    for (std::size_t i = 0; i < level.value.size(); ++i)
                        for (std::size_t j = i + 1; j < level.value.size(); ++j)
                            if (!level.value[i].disjoint(level.value[j])) level.property = false;
                    break;
                }
            }
            covered |= union_of(level.value);
            row.ok = row.ok && level.subfamily && level.refines && level.property;
            row.levels.push_back(std::move(level));
        }
        row.covered = space.whole().subset_of(covered);
        row.ok = row.ok && row.covered;
        rows.push_back(std::move(row));
    }
    return rows;
}

PreservationRun run_preservation(const Scenario& scenario) {
    const Poset& poset = *scenario.notion.poset;
    const auto& strat = scenario.notion.strat;
    const auto& space = scenario.space;
    const EndowmentFamily family = scenario.notion.family(scenario.family);

    PreservationRun run;
    for (std::size_t n = 0; n < scenario.names.size(); ++n) {
        std::string reason;
        if (!validate_cover_name(poset, space, scenario.names[n], &reason))
            throw InputError("name " + std::to_string(n) + " is not a name for an open cover: " + reason);
    }
    for (std::size_t n = 0; n < scenario.names.size(); ++n) {
        run.point_names.push_back(derive_point_names(poset, space, scenario.names[n]));
        run.approximations.push_back(approximate(poset, space, run.point_names.back(), n, family));
        run.lemma.push_back(check_lemma_approx(poset, strat, run.approximations.back(), scenario.names[n]));
    }

    SelectionProblem problem;
    for (const auto& approx : run.approximations) problem.covers.push_back(approx.cover);
    problem.horizon_floor = strat.stabilization_index();
    problem.mode = scenario.property;
    auto selection = select(space, problem);
    if (!selection)
        throw ScenarioError("ground " + to_string(scenario.property) + " selection is unsatisfiable with " +
                            std::to_string(problem.covers.size()) + " levels and horizon floor " +
                            std::to_string(problem.horizon_floor));
    run.selection = std::move(*selection);

    auto [refined, pipeline] =
        endow_refine_pipeline(poset, space, strat, scenario.names, run.selection.families, run.approximations);
    run.refined = std::move(refined);
    run.pipeline = std::move(pipeline);

    std::vector<SetName> refined_names;
    for (const auto& w : run.refined) refined_names.push_back(w.name);
    run.atoms = certify_atoms(poset, space, scenario.names, run.selection.families, refined_names, scenario.property);

    run.certified = run.pipeline.positive &&
                    std::all_of(run.lemma.begin(), run.lemma.end(), [](const auto& c) { return c.positive; }) &&
                    std::all_of(run.atoms.begin(), run.atoms.end(), [](const AtomRow& r) { return r.ok; });
    return run;
}

namespace {

json atoms_to_json(const Poset& poset, const FiniteSpace& space, const std::vector<AtomRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json levels = json::array();
        for (std::size_t n = 0; n < row.levels.size(); ++n) {
            const auto& lv = row.levels[n];
            levels.push_back({{"level", n},
                              {"W", family_to_json(space, lv.value)},
                              {"subfamily", lv.subfamily},
                              {"refines", lv.refines},
                              {"property", lv.property}});
        }
        out.push_back({{"atom", poset.label(row.atom)}, {"levels", levels}, {"covered", row.covered}, {"ok", row.ok}});
    }
    return out;
}

}  // namespace

json certificate_to_json(const Scenario& scenario, const PreservationRun& run) {
    const Poset& poset = *scenario.notion.poset;
    const auto& space = scenario.space;
    json point_names = json::array(), approximations = json::array(), lemma = json::array();
    json selection = json::array(), refined = json::array(), levels = json::array();
    for (const auto& pn : run.point_names) point_names.push_back(point_names_to_json(poset, space, pn));
    for (const auto& a : run.approximations) approximations.push_back(approximation_to_json(poset, space, a));
    for (const auto& c : run.lemma) lemma.push_back(approx_certificate_to_json(poset, space, c));
    for (const auto& f : run.selection.families) selection.push_back(family_to_json(space, f));
    for (const auto& w : run.refined) refined.push_back(name_to_json(poset, space, w.name));
    for (const auto& c : run.pipeline.levels) levels.push_back(refine_certificate_to_json(poset, space, c));
    return {
        {"format_version", format_version},
        {"kind", "certificate"},
        {"scenario", scenario_to_json(scenario)},
        {"property", to_string(scenario.property)},
        {"stabilization_index", scenario.notion.strat.stabilization_index()},
        {"stages",
         {{"point_names", point_names},
          {"approximations", approximations},
          {"lemma_approx", lemma},
          {"selection", selection},
          {"refined_names", refined},
          {"pipeline",
           {{"levels", levels},
            {"subfamily", run.pipeline.subfamily},
            {"refines", run.pipeline.refines},
            {"covers", run.pipeline.covers},
            {"status", run.pipeline.positive ? "positive" : "negative"}}}}},
        {"atoms", atoms_to_json(poset, space, run.atoms)},
        {"verdict", run.certified ? "certified" : "failed"},
    };
}

json VerifyOutcome::transcript() const {
    return {{"verdict", certified ? "certified" : "failed"},
            {"replay", replay_matches ? "match" : "mismatch"},
            {"reproduction", reproduced ? "identical" : "differs"},
            {"problems", problems},
            {"status", ok() ? "verified" : "failed"}};
}

VerifyOutcome verify_certificate(const json& cert) {
    VerifyOutcome out;
    try {
        expect_keys(cert, {"scenario", "stages", "atoms", "verdict"},
                    {"format_version", "kind", "property", "stabilization_index"}, "certificate");
        out.certified = cert["verdict"] == "certified";
        if (!out.certified) out.problems.push_back("stored verdict is not 'certified'");

        const Scenario scenario = scenario_from_json(cert["scenario"]);
        const Poset& poset = *scenario.notion.poset;
        const auto& stages = cert["stages"];
        expect_keys(stages, {"selection", "refined_names"}, {"point_names", "approximations", "lemma_approx", "pipeline"},
                    "certificate stages");
        std::vector<std::vector<PointSet>> families;
        for (const auto& f : stages["selection"]) families.push_back(family_from_json(scenario.space, f));
        std::vector<SetName> refined;
        for (const auto& w : stages["refined_names"]) refined.push_back(name_from_json(poset, scenario.space, w));
        if (families.size() != scenario.names.size() || refined.size() != scenario.names.size())
            throw InputError("certificate stages do not match the scenario's name count");

        const auto rows = certify_atoms(poset, scenario.space, scenario.names, families, refined, scenario.property);
        const bool rows_ok = std::all_of(rows.begin(), rows.end(), [](const AtomRow& r) { return r.ok; });
        out.replay_matches = atoms_to_json(poset, scenario.space, rows) == cert["atoms"] && (rows_ok || !out.certified);
        if (!out.replay_matches) out.problems.push_back("per-atom table does not replay from the stored transcript");
        if (!rows_ok) out.problems.push_back("some atom fails the forced conclusion");

        const json rerun = certificate_to_json(scenario, run_preservation(scenario));
        out.reproduced = rerun.dump() == cert.dump();
        if (!out.reproduced) out.problems.push_back("rerunning the scenario does not reproduce the certificate");
    } catch (const Error& e) {
        out.problems.push_back(std::string("certificate could not be replayed: ") + e.what());
    }
    return out;
}

}  // namespace endowlab
