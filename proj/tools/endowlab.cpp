// endowlab: finite forcing-preservation lab.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "endowlab/error.hpp"
#include "endowlab/fixtures.hpp"
#include "endowlab/generate.hpp"
#include "endowlab/io.hpp"
#include "endowlab/preservation.hpp"
#include "endowlab/selftest.hpp"

using namespace endowlab;

namespace {

struct Output {
    bool json = false;

    // Machine output goes to stdout as one JSON document; otherwise `text`.
    void emit(const nlohmann::json& doc, const std::string& text) const {
        if (json)
            std::cout << doc.dump(2) << '\n';
        else
            std::cout << text;
    }
};

int code(ExitCode c) { return static_cast<int>(c); }

ForcingNotion load_notion(const std::string& text) {
    if (text.starts_with("cohen:") || text.starts_with("measure:")) return make_forcing_notion(parse_poset_spec(text));
    if (!std::filesystem::exists(text))
        throw UsageError("'" + text + "' is neither a poset spec (cohen:D=<n> | measure:k=<n>) nor a file");
    return make_forcing_notion(poset_file_from_json(read_json_file(text)));
}

Cond parse_condition(const ForcingNotion& notion, const std::string& text) {
    if (notion.cohen) return notion.cohen->parse_cond(text);
    if (notion.measure) return notion.measure->parse_cond(text);
    return notion.poset->find(text);
}

// Each item is one or more condition literals separated by ';'.
CondSet parse_antichain(const ForcingNotion& notion, const std::vector<std::string>& items) {
    CondSet out;
    for (const auto& item : items) {
        std::stringstream in(item);
        std::string part;
        bool any = false;
        while (std::getline(in, part, ';')) {
            out.push_back(parse_condition(notion, part));
            any = true;
        }
        if (!any) out.push_back(parse_condition(notion, ""));
    }
    return out;
}

std::vector<CondSet> antichains_from_file(const ForcingNotion& notion, const std::string& path) {
    const json j = read_json_file(path);
    if (!j.is_array()) throw InputError("antichain file must hold an array of arrays of condition literals");
    std::vector<CondSet> out;
    for (const auto& a : j) {
        if (!a.is_array()) throw InputError("antichain file must hold an array of arrays of condition literals");
        CondSet members;
        for (const auto& c : a) {
            if (!c.is_string()) throw InputError("condition literals must be strings");
            members.push_back(parse_condition(notion, c.get<std::string>()));
        }
        out.push_back(std::move(members));
    }
    return out;
}

std::string join(const nlohmann::json& list) {
    std::string out = "{";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += "; ";
        out += list[i].is_string() ? list[i].get<std::string>() : list[i].dump();
    }
    return out + "}";
}

std::string truncation_note(const ForcingNotion& notion) {
    return "finite truncation evidence over " + notion.describe() + "; not a statement about infinite index sets\n";
}

Scenario load_scenario(const std::string& path) { return scenario_from_json(read_json_file(path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite forcing-preservation lab: endowments, approximations and preserved selection principles"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    unsigned jobs = 1;
    app.add_flag("--json", out.json, "Print a single JSON document on stdout");
    app.add_option("--jobs", jobs, "Worker threads for independent verification units")->check(CLI::Range(1u, 256u));

    // endow-verify
    auto* ev = app.add_subcommand("endow-verify", "Check the weak-endowment clauses over maximal antichains");
    std::string ev_spec, ev_family = "default", ev_file;
    std::size_t ev_n = 0, ev_seeded = 0;
    std::uint64_t ev_seed = 0;
    bool ev_exhaustive = false, ev_full = false;
    ev->add_option("poset", ev_spec, "cohen:D=<n>, measure:k=<n> or a poset JSON file")->required();
    ev->add_option("--n", ev_n, "Stratification level")->required();
    auto* ex = ev->add_flag("--exhaustive", ev_exhaustive, "All maximal antichains");
    auto* sd = ev->add_option("--seeded", ev_seeded, "This many seeded random maximal antichains");
    auto* af = ev->add_option("--antichains", ev_file, "JSON file: array of arrays of condition literals");
    ex->excludes(sd, af);
    sd->excludes(af);
    ev->add_option("--seed", ev_seed, "Seed for --seeded");
    ev->add_option("--family", ev_family, "default | dow | measure | compatibility | adversarial");
    ev->add_flag("--clause3", ev_full, "Also check the full clause (3) over multisets of size n");

    // dow
    auto* dw = app.add_subcommand("dow", "Trace the stage-wise extraction of L from a maximal antichain of Fn(D,2)");
    std::string dw_spec;
    std::vector<std::string> dw_items;
    std::size_t dw_n = 0;
    dw->add_option("poset", dw_spec, "cohen:D=<n>")->required();
    dw->add_option("--antichain,-a", dw_items, "Condition literals, ';'-separated or repeated ('' is the empty condition)")
        ->required()
        ->allow_extra_args(false);
    dw->add_option("--n", dw_n, "Level")->required();

    // approx
    auto* ap = app.add_subcommand("approx", "Build the n-th approximation of a scenario name and certify it");
    std::string ap_file;
    std::size_t ap_level = 0;
    ap->add_option("--scenario", ap_file, "Scenario JSON")->required()->check(CLI::ExistingFile);
    ap->add_option("--level", ap_level, "Which name / stratification level")->required();

    // refine
    auto* rf = app.add_subcommand("refine", "Refine a scenario name along a ground family and certify it");
    std::string rf_file, rf_family;
    std::size_t rf_level = 0;
    rf->add_option("--scenario", rf_file, "Scenario JSON")->required()->check(CLI::ExistingFile);
    rf->add_option("--level", rf_level, "Which name / stratification level")->required();
    rf->add_option("--family", rf_family, "Ground family as JSON, e.g. '[[\"x\"],[\"y\"]]' (default: the approximation)");

    // preserve
    auto* pr = app.add_subcommand("preserve", "Run the preservation pipeline and write a certificate");
    std::string pr_file, pr_cert, pr_property;
    pr->add_option("--scenario", pr_file, "Scenario JSON")->required()->check(CLI::ExistingFile);
    pr->add_option("--property", pr_property, "rothberger | menger | selective-screenability (overrides the file)");
    pr->add_option("--cert", pr_cert, "Write the certificate here");

    // verify
    auto* vf = app.add_subcommand("verify", "Replay a stored certificate");
    std::string vf_cert;
    vf->add_option("--cert", vf_cert, "Certificate JSON")->required()->check(CLI::ExistingFile);

    // gen
    auto* gn = app.add_subcommand("gen", "Generate seeded scenarios");
    std::uint64_t gn_seed = 0;
    std::size_t gn_count = 1;
    std::string gn_bounds = "default", gn_property = "rothberger", gn_dir;
    gn->add_option("--seed", gn_seed, "Seed")->required();
    gn->add_option("--count", gn_count, "Number of scenarios (seeds seed, seed+1, ...)");
    gn->add_option("--bounds", gn_bounds, "default | small | large | key=value,...");
    gn->add_option("--property", gn_property, "Property recorded in the scenarios");
    gn->add_option("--out", gn_dir, "Directory for scenario-<seed>.json files (default: stdout)");

    // selftest
    auto* st = app.add_subcommand("selftest", "Oracle, endowment and preservation sweeps");
    std::uint64_t st_seed = 0;
    std::size_t st_count = 0;
    std::string st_bounds = "default";
    st->add_option("--seed", st_seed, "Seed for the seeded sweeps");
    st->add_option("--count", st_count, "Also run this many generated preservation scenarios");
    st->add_option("--bounds", st_bounds, "Generator bounds: default | small | large | key=value,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : code(ExitCode::usage);
    }

    try {
        if (*ev) {
            const ForcingNotion notion = load_notion(ev_spec);
            const Poset& poset = *notion.poset;
            std::vector<CondSet> antichains;
            std::string source;
            if (!ev_file.empty()) {
                antichains = antichains_from_file(notion, ev_file);
                source = "file";
            } else if (ev_seeded > 0) {
                antichains = random_maximal_antichains(poset, ev_seeded, ev_seed);
                source = "seeded:" + std::to_string(ev_seeded);
            } else if (ev_exhaustive) {
                if (poset.size() > Limits::current().exhaustive)
                    throw ResourceError("exhaustive enumeration is limited to " +
                                        std::to_string(Limits::current().exhaustive) + " conditions; use --seeded");
                antichains = all_maximal_antichains(poset);
                source = "exhaustive";
            } else {
                throw UsageError("choose an antichain source: --exhaustive, --seeded <count> or --antichains <file>");
            }
            const EndowmentFamily family = notion.family(ev_family);
            EndowmentReport report = verify_weak_endowment(poset, notion.strat, family, ev_n, antichains, jobs);
            json doc = report_to_json(poset, report);
            if (ev_full) {
                const EndowmentReport full =
                    verify_full_endowment_clause3(poset, notion.strat, family, ev_n, antichains);
                doc["clause3"] = report_to_json(poset, full);
                report.violations.insert(report.violations.end(), full.violations.begin(), full.violations.end());
            }
            doc["poset"] = notion.describe();
            doc["source"] = source;
            std::ostringstream text;
            text << truncation_note(notion) << "family " << report.family << ", n=" << ev_n << ", " << source << ": "
                 << report.antichains_checked << " antichains, " << report.units_checked << " checks, "
                 << report.violations.size() << " violations\n";
            for (const auto& v : doc["violations"])
                text << "  clause " << v["clause"].get<std::string>() << " antichain " << v["antichain_id"]
                     << (v["witness_p"].is_null() ? "" : " p=" + v["witness_p"].get<std::string>()) << ": " << v["detail"].get<std::string>() << '\n';
            out.emit(doc, text.str());
            return code(report.ok() ? ExitCode::ok : ExitCode::verification);
        }

        if (*dw) {
            const ForcingNotion notion = load_notion(dw_spec);
            if (!notion.cohen) throw UsageError("dow needs a Cohen poset (cohen:D=<n>)");
            const CondSet antichain = parse_antichain(notion, dw_items);
            const DowTrace trace = dow_construct(*notion.cohen, antichain, dw_n);
            const json doc = dow_trace_to_json(*notion.cohen, trace, dw_n);
            std::ostringstream text;
            text << truncation_note(notion) << "seed a = " << doc["seed"].get<std::string>() << '\n';
            for (const auto& s : doc["stages"])
                text << "  E_" << s["i"] << " = " << join(s["E"]) << "   D_" << s["i"] << " = " << join(s["D"]) << '\n';
            text << "L = " << join(doc["L"]) << '\n'
                 << "guarantee (every |p| <= " << dw_n << " meets L): " << (doc["guarantee"] ? "holds" : "fails")
                 << '\n';
            out.emit(doc, text.str());
            return code(doc["guarantee"] ? ExitCode::ok : ExitCode::verification);
        }

        if (*ap) {
            const Scenario s = load_scenario(ap_file);
            if (ap_level >= s.names.size()) throw UsageError("level out of range for this scenario");
            const Poset& poset = *s.notion.poset;
            const auto& name = s.names[ap_level];
            std::string reason;
            if (!validate_cover_name(poset, s.space, name, &reason)) throw InputError("invalid cover name: " + reason);
            const auto names = derive_point_names(poset, s.space, name);
            const Approximation approx = approximate(poset, s.space, names, ap_level, s.notion.family(s.family));
            const ApproxCertificate cert = check_lemma_approx(poset, s.notion.strat, approx, name);
            const json doc = {{"point_names", point_names_to_json(poset, s.space, names)},
                              {"approximation", approximation_to_json(poset, s.space, approx)},
                              {"certificate", approx_certificate_to_json(poset, s.space, cert)}};
            std::ostringstream text;
            text << truncation_note(s.notion) << "V_" << ap_level << " = " << join(doc["approximation"]["cover"])
                 << "\ncertificate: " << (cert.positive ? "positive" : "negative") << " (" << cert.triples.size()
                 << " triples)\n";
            out.emit(doc, text.str());
            return code(cert.positive ? ExitCode::ok : ExitCode::verification);
        }

        if (*rf) {
            const Scenario s = load_scenario(rf_file);
            if (rf_level >= s.names.size()) throw UsageError("level out of range for this scenario");
            const Poset& poset = *s.notion.poset;
            const auto& name = s.names[rf_level];
            std::string reason;
            if (!validate_cover_name(poset, s.space, name, &reason)) throw InputError("invalid cover name: " + reason);
            const Approximation approx = approximate(poset, s.space, derive_point_names(poset, s.space, name),
                                                     rf_level, s.notion.family(s.family));
            std::vector<PointSet> family = approx.cover;
            if (!rf_family.empty()) {
                json j;
                try {
                    j = json::parse(rf_family);
                } catch (const json::parse_error& e) {
                    throw UsageError(std::string("--family is not valid JSON: ") + e.what());
                }
                family = family_from_json(s.space, j);
            }
            const auto [refined, cert] = refine_name(poset, s.space, s.notion.strat, approx, family, name);
            const json doc = {{"family", family_to_json(s.space, refined.family)},
                              {"refined_name", name_to_json(poset, s.space, refined.name)},
                              {"certificate", refine_certificate_to_json(poset, s.space, cert)}};
            std::ostringstream text;
            text << truncation_note(s.notion) << "refined name has " << refined.name.pairs.size()
                 << " pairs\ncertificate: " << (cert.positive ? "positive" : "negative") << '\n';
            out.emit(doc, text.str());
            return code(cert.positive ? ExitCode::ok : ExitCode::verification);
        }

        if (*pr) {
            Scenario s = load_scenario(pr_file);
            if (!pr_property.empty()) s.property = parse_property(pr_property);
            const PreservationRun run = run_preservation(s);
            const json cert = certificate_to_json(s, run);
            if (!pr_cert.empty()) write_json_file(pr_cert, cert);
            std::ostringstream text;
            text << truncation_note(s.notion) << to_string(s.property) << " over " << s.names.size()
                 << " names, floor " << s.notion.strat.stabilization_index() << ": "
                 << (run.certified ? "certified" : "failed") << " (" << run.atoms.size() << " atoms)\n";
            out.emit(cert, text.str());
            return code(run.certified ? ExitCode::ok : ExitCode::verification);
        }

        if (*vf) {
            const VerifyOutcome outcome = verify_certificate(read_json_file(vf_cert));
            std::ostringstream text;
            text << (outcome.ok() ? "verified" : "verification failed") << '\n';
            for (const auto& p : outcome.problems) text << "  " << p << '\n';
            out.emit(outcome.transcript(), text.str());
            return code(outcome.ok() ? ExitCode::ok : ExitCode::verification);
        }

        if (*gn) {
            const GenBounds bounds = GenBounds::parse(gn_bounds);
            bounds.check(Limits::current());
            const Property property = parse_property(gn_property);
            json all = json::array();
            for (std::size_t i = 0; i < gn_count; ++i) {
                const json doc = scenario_to_json(generate_scenario(gn_seed + i, bounds, property));
                if (!gn_dir.empty())
                    write_json_file(std::filesystem::path(gn_dir) / ("scenario-" + std::to_string(gn_seed + i) + ".json"),
                                    doc);
                all.push_back(doc);
            }
            if (gn_dir.empty()) std::cout << (gn_count == 1 ? all[0] : all).dump(2) << '\n';
            return code(ExitCode::ok);
        }

        if (*st) {
            const GenBounds bounds = GenBounds::parse(st_bounds);
            bounds.check(Limits::current());
            std::vector<SweepResult> results;
            results.push_back(oracle_sweep(st_seed, 300));
            results.push_back(dow_sweep(st_seed, 3, 3, 2, 100, jobs));
            results.push_back(measure_sweep(st_seed, 3, 2, 2, 50, jobs));
            results.push_back(fixed_scenarios());
            if (st_count > 0) results.push_back(scenario_sweep(st_seed, st_count, bounds));
            bool ok = true;
            json doc = json::array();
            std::ostringstream text;
            for (const auto& r : results) {
                ok = ok && r.passed();
                doc.push_back(sweep_to_json(r));
                text << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.units << " units";
                if (r.skipped) text << ", " << r.skipped << " skipped";
                text << ", " << r.failures << " failures\n";
                for (const auto& s : r.samples) text << "  " << s << '\n';
            }
            out.emit({{"sweeps", doc}, {"status", ok ? "pass" : "fail"}}, text.str());
            return code(ok ? ExitCode::ok : ExitCode::verification);
        }
    } catch (const Error& e) {
        std::cerr << "endowlab: " << e.what() << '\n';
        if (out.json) std::cout << json{{"status", "error"}, {"exit_code", code(e.exit_code())}, {"message", e.what()}}.dump(2) << '\n';
        return code(e.exit_code());
    } catch (const std::bad_alloc&) {
        std::cerr << "endowlab: out of memory\n";
        return code(ExitCode::resource);
    }
    return code(ExitCode::usage);
}
