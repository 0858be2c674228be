#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "endowlab/endowment.hpp"
#include "endowlab/instance.hpp"
#include "endowlab/names.hpp"

namespace endowlab {

using nlohmann::json;

inline constexpr int format_version = 1;

// Rejects keys outside required ∪ optional and missing required keys.
void expect_keys(const json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
                 const std::string& what);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

json set_to_json(const FiniteSpace& space, PointSet s);
PointSet set_from_json(const FiniteSpace& space, const json& j);
json family_to_json(const FiniteSpace& space, const std::vector<PointSet>& family);
std::vector<PointSet> family_from_json(const FiniteSpace& space, const json& j);
json conds_to_json(const Poset& poset, std::span<const Cond> conds);

// {"elements": [...], "leq": [[a, b], ...], "levels"?: [[...], ...]}
json poset_spec_to_json(const PosetSpec& spec);
PosetSpec poset_spec_from_json(const json& j);
// Accepts the bare exchange object or a "poset" instance file.
PosetSpec poset_file_from_json(const json& j);

// {"points": [...], "base": [[...], ...]}
json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const json& j);

// [{"condition": literal, "set": [point ids]}, ...]
json name_to_json(const Poset& poset, const FiniteSpace& space, const SetName& name);
SetName name_from_json(const Poset& poset, const FiniteSpace& space, const json& j);

json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const json& j, const Limits& limits = Limits::current());

json report_to_json(const Poset& poset, const EndowmentReport& report);
json dow_trace_to_json(const CohenPoset& cohen, const DowTrace& trace, std::size_t n);
json point_names_to_json(const Poset& poset, const FiniteSpace& space, const std::vector<PointName>& names);
json approximation_to_json(const Poset& poset, const FiniteSpace& space, const Approximation& approx);
json approx_certificate_to_json(const Poset& poset, const FiniteSpace& space, const ApproxCertificate& cert);
json refine_certificate_to_json(const Poset& poset, const FiniteSpace& space, const RefineCertificate& cert);

}  // namespace endowlab
