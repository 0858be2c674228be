#pragma once

#include <string>
#include <vector>

#include "endowlab/instance.hpp"
#include "endowlab/io.hpp"
#include "endowlab/names.hpp"
#include "endowlab/selection.hpp"

namespace endowlab {

// What one atom's extension sees at level n.
struct AtomLevel {
    std::vector<PointSet> value;  // evaluated W_n
    bool subfamily = false;       // value ⊆ H_n
    bool refines = false;         // value refines the evaluated U_n
    bool property = false;        // |value| <= 1 / finite / pairwise disjoint
};

struct AtomRow {
    Cond atom;
    std::vector<AtomLevel> levels;
    bool covered = false;  // union over n of the values covers X
    bool ok = false;
};

struct PreservationRun {
    std::vector<std::vector<PointName>> point_names;
    std::vector<Approximation> approximations;
    std::vector<ApproxCertificate> lemma;
    Selection selection;
    std::vector<RefinedName> refined;
    PipelineCertificate pipeline;
    std::vector<AtomRow> atoms;
    bool certified = false;
};

// Evaluates every refined name at every atom directly, without the forcing
// oracle used inside the pipeline.
std::vector<AtomRow> certify_atoms(const Poset& poset, const FiniteSpace& space, const std::vector<CoverName>& names,
                                   const std::vector<std::vector<PointSet>>& families,
                                   const std::vector<SetName>& refined, Property property);

// Approximate each name at its level, solve the ground selection with floor
// = stabilization index, lift through the refinement pipeline and certify
// per atom. Invalid names raise InputError; an unsatisfiable ground
// selection raises ScenarioError.
PreservationRun run_preservation(const Scenario& scenario);

json certificate_to_json(const Scenario& scenario, const PreservationRun& run);

struct VerifyOutcome {
    bool certified = false;       // stored verdict
    bool replay_matches = false;  // atom table recomputed from the stored transcript
    bool reproduced = false;      // rerun is byte-identical to the stored certificate
    std::vector<std::string> problems;

    bool ok() const { return certified && replay_matches && reproduced; }
    json transcript() const;
};

VerifyOutcome verify_certificate(const json& certificate);

}  // namespace endowlab
