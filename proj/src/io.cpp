#include "endowlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "endowlab/error.hpp"

namespace endowlab {

void expect_keys(const json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
                 const std::string& what) {
    if (!j.is_object()) throw InputError(what + " must be a JSON object");
    std::set<std::string> allowed;
    for (const char* k : required) {
        allowed.insert(k);
        if (!j.contains(k)) throw InputError(what + " is missing field '" + k + "'");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& item : j.items())
        if (!allowed.count(item.key())) throw InputError(what + " has unknown field '" + item.key() + "'");
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

namespace {

template <class T>
T get_as(const json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw InputError(what + " has the wrong type");
    }
}

void check_version(const json& j, const char* kind) {
    if (j.contains("format_version") && get_as<int>(j["format_version"], "format_version") != format_version)
        throw InputError("unsupported format_version");
    if (j.contains("kind") && get_as<std::string>(j["kind"], "kind") != kind)
        throw InputError(std::string("expected an instance file of kind '") + kind + "'");
}

}  // namespace

json set_to_json(const FiniteSpace& space, PointSet s) { return space.labels_of(s); }

PointSet set_from_json(const FiniteSpace& space, const json& j) {
    return space.set_of(get_as<std::vector<std::string>>(j, "point set"));
}

json family_to_json(const FiniteSpace& space, const std::vector<PointSet>& family) {
    json out = json::array();
    for (PointSet s : family) out.push_back(set_to_json(space, s));
    return out;
}

std::vector<PointSet> family_from_json(const FiniteSpace& space, const json& j) {
    if (!j.is_array()) throw InputError("family must be an array of point lists");
    std::vector<PointSet> out;
    for (const auto& item : j) out.push_back(set_from_json(space, item));
    return out;
}

json conds_to_json(const Poset& poset, std::span<const Cond> conds) {
    json out = json::array();
    for (Cond c : conds) out.push_back(poset.label(c));
    return out;
}

json poset_spec_to_json(const PosetSpec& spec) {
    switch (spec.kind) {
        case PosetSpec::Kind::cohen: return {{"type", "cohen"}, {"D", spec.index_set}};
        case PosetSpec::Kind::measure: return {{"type", "measure"}, {"k", spec.dimension}};
        case PosetSpec::Kind::explicit_order: {
            json leq = json::array();
            for (const auto& [a, b] : spec.leq) leq.push_back({a, b});
            json out{{"type", "explicit"}, {"elements", spec.elements}, {"leq", leq}};
            if (spec.levels) out["levels"] = *spec.levels;
            return out;
        }
    }
    return {};
}

namespace {

PosetSpec explicit_from_json(const json& j) {
    PosetSpec spec;
    spec.kind = PosetSpec::Kind::explicit_order;
    spec.elements = get_as<std::vector<std::string>>(j.at("elements"), "elements");
    for (const auto& pair : j.at("leq")) {
        const auto ab = get_as<std::vector<std::string>>(pair, "leq pair");
        if (ab.size() != 2) throw InputError("leq entries must be [lower, upper] pairs");
        spec.leq.emplace_back(ab[0], ab[1]);
    }
    if (j.contains("levels")) spec.levels = get_as<std::vector<std::vector<std::string>>>(j["levels"], "levels");
    return spec;
}

}  // namespace

PosetSpec poset_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw InputError("poset spec needs a 'type'");
    const auto type = get_as<std::string>(j["type"], "poset type");
    if (type == "cohen") {
        expect_keys(j, {"type", "D"}, {}, "cohen poset spec");
        if (j["D"].is_number_unsigned()) return PosetSpec::cohen(j["D"].get<std::size_t>());
        PosetSpec spec;
        spec.index_set = get_as<std::vector<unsigned>>(j["D"], "D");
        return spec;
    }
    if (type == "measure") {
        expect_keys(j, {"type", "k"}, {}, "measure poset spec");
        return PosetSpec::measure(get_as<unsigned>(j["k"], "k"));
    }
    if (type == "explicit") {
        expect_keys(j, {"type", "elements", "leq"}, {"levels"}, "explicit poset spec");
        return explicit_from_json(j);
    }
    throw InputError("unknown poset type '" + type + "'");
}

PosetSpec poset_file_from_json(const json& j) {
    expect_keys(j, {"elements", "leq"}, {"levels", "format_version", "kind"}, "poset file");
    check_version(j, "poset");
    return explicit_from_json(j);
}

json space_to_json(const FiniteSpace& space) {
    return {{"points", space.points()}, {"base", family_to_json(space, space.base())}};
}

FiniteSpace space_from_json(const json& j) {
    expect_keys(j, {"points", "base"}, {"format_version", "kind"}, "space");
    check_version(j, "space");
    auto points = get_as<std::vector<std::string>>(j["points"], "points");
    const auto raw = get_as<std::vector<std::vector<std::string>>>(j["base"], "base");
    std::vector<PointSet> base;
    for (const auto& labels : raw) {
        PointSet s;
        for (const auto& l : labels) {
            const auto it = std::find(points.begin(), points.end(), l);
            if (it == points.end()) throw InputError("base mentions unknown point '" + l + "'");
            s |= PointSet::single(static_cast<std::size_t>(it - points.begin()));
        }
        base.push_back(s);
    }
    return FiniteSpace(std::move(points), std::move(base));
}

json name_to_json(const Poset& poset, const FiniteSpace& space, const SetName& name) {
    json out = json::array();
    for (const auto& pr : name.pairs)
        out.push_back({{"condition", poset.label(pr.condition)}, {"set", set_to_json(space, pr.set)}});
    return out;
}

SetName name_from_json(const Poset& poset, const FiniteSpace& space, const json& j) {
    if (!j.is_array()) throw InputError("a name must be an array of {condition, set} pairs");
    SetName name;
    for (const auto& item : j) {
        expect_keys(item, {"condition", "set"}, {}, "name pair");
        name.pairs.push_back({poset.find(get_as<std::string>(item["condition"], "condition")),
                              set_from_json(space, item["set"])});
    }
    name.normalize();
    return name;
}

json scenario_to_json(const Scenario& s) {
    json names = json::array();
    for (const auto& n : s.names) names.push_back(name_to_json(*s.notion.poset, s.space, n));
    return {{"format_version", format_version},
            {"kind", "scenario"},
            {"poset", poset_spec_to_json(s.notion.spec)},
            {"family", s.family},
            {"space", space_to_json(s.space)},
            {"names", names},
            {"property", to_string(s.property)}};
}

Scenario scenario_from_json(const json& j, const Limits& limits) {
    expect_keys(j, {"poset", "space", "names"}, {"format_version", "kind", "family", "property"}, "scenario");
    check_version(j, "scenario");
    ForcingNotion notion = make_forcing_notion(poset_spec_from_json(j["poset"]), limits);
    FiniteSpace space = space_from_json(j["space"]);
    const std::string family = j.contains("family") ? get_as<std::string>(j["family"], "family") : "default";
    notion.family(family);  // reject unknown families on load
    const Property property =
        j.contains("property") ? parse_property(get_as<std::string>(j["property"], "property")) : Property::rothberger;
    if (!j["names"].is_array()) throw InputError("names must be an array");
    std::vector<CoverName> names;
    for (const auto& n : j["names"]) names.push_back(name_from_json(*notion.poset, space, n));
    return Scenario{std::move(notion), family, std::move(space), std::move(names), property};
}

json report_to_json(const Poset& poset, const EndowmentReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"clause", v.clause},
                              {"witness_p", v.witness ? json(poset.label(*v.witness)) : json(nullptr)},
                              {"antichain_id", v.antichain_id},
                              {"status", "violation"},
                              {"detail", v.detail}});
    return {{"family", report.family},
            {"n", report.n},
            {"antichains_checked", report.antichains_checked},
            {"units_checked", report.units_checked},
            {"violations", violations},
            {"status", report.ok() ? "ok" : "violations"}};
}

json dow_trace_to_json(const CohenPoset& cohen, const DowTrace& trace, std::size_t n) {
    const Poset& poset = cohen.poset();
    json stages = json::array();
    for (std::size_t i = 0; i < trace.stages.size(); ++i)
        stages.push_back({{"i", i}, {"E", conds_to_json(poset, trace.stages[i].added)}, {"D", trace.stages[i].support}});
    const CondSet gaps = compatibility_gaps(poset, stratify_cohen(cohen).level(n), trace.result);
    return {{"n", n},
            {"seed", poset.label(trace.seed)},
            {"stages", stages},
            {"L", conds_to_json(poset, trace.result)},
            {"guarantee", gaps.empty()},
            {"uncovered", conds_to_json(poset, gaps)}};
}

json point_names_to_json(const Poset& poset, const FiniteSpace& space, const std::vector<PointName>& names) {
    json out = json::array();
    for (const auto& pn : names) {
        json values = json::array();
        for (std::size_t i = 0; i < pn.antichain.size(); ++i)
            values.push_back({{"condition", poset.label(pn.antichain[i])}, {"set", set_to_json(space, pn.values[i])}});
        out.push_back({{"point", space.points()[pn.point]},
                       {"antichain", conds_to_json(poset, pn.antichain)},
                       {"values", values}});
    }
    return out;
}

json approximation_to_json(const Poset& poset, const FiniteSpace& space, const Approximation& approx) {
    json elements = json::array();
    for (const auto& e : approx.elements)
        elements.push_back({{"point", space.points()[e.point]},
                            {"L", conds_to_json(poset, e.endowment)},
                            {"V", set_to_json(space, e.value)}});
    return {{"level", approx.level}, {"elements", elements}, {"cover", family_to_json(space, approx.cover)}};
}

json approx_certificate_to_json(const Poset& poset, const FiniteSpace& space, const ApproxCertificate& cert) {
    json triples = json::array();
    for (const auto& t : cert.triples)
        triples.push_back({{"V", set_to_json(space, t.v)}, {"p", poset.label(t.p)}, {"r", poset.label(t.r)}});
    json out{{"level", cert.level}, {"status", cert.positive ? "positive" : "negative"}, {"triples", triples}};
    if (cert.counterexample)
        out["counterexample"] = {{"V", set_to_json(space, cert.counterexample->first)},
                                 {"p", poset.label(cert.counterexample->second)}};
    return out;
}

json refine_certificate_to_json(const Poset& poset, const FiniteSpace& space, const RefineCertificate& cert) {
    json triples = json::array();
    for (const auto& t : cert.triples)
        triples.push_back({{"p", poset.label(t.p)}, {"H", set_to_json(space, t.h)}, {"r", poset.label(t.r)}});
    json out{{"level", cert.level},
             {"refines_forced", cert.refines_forced},
             {"status", cert.positive ? "positive" : "negative"},
             {"triples", triples}};
    if (cert.counterexample)
        out["counterexample"] = {{"p", poset.label(cert.counterexample->first)},
                                 {"H", set_to_json(space, cert.counterexample->second)}};
    return out;
}

}  // namespace endowlab
