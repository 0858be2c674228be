#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string bin = ENDOWLAB_BIN;
const std::string fixtures = ENDOWLAB_FIXTURES;

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + bin + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_ok(const std::string& text) {
    json j;
    CHECK_NOTHROW(j = json::parse(text));
    return j;
}

std::string tmp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("endowlab-cli-" + name)).string();
}

}  // namespace

TEST_CASE("endow-verify") {
    CHECK(run("endow-verify cohen:D=2 --n 1 --exhaustive").code == 0);
    CHECK(run("endow-verify measure:k=2 --n 1 --exhaustive").code == 0);
    CHECK(run("endow-verify cohen:D= --n 1 --exhaustive").code == 64);
    CHECK(run("endow-verify cohen:D=2 --n 1").code == 64);
    CHECK(run("endow-verify cohen:D=2 --n 1 --exhaustive --seeded 3").code == 64);
    CHECK(run("endow-verify cohen:D=2 --n 1 --antichains " + fixtures + "/non_maximal.json").code == 65);
    CHECK(run("endow-verify measure:k=3 --n 1 --exhaustive").code == 70);
    CHECK(run("endow-verify measure:k=3 --n 1 --seeded 20 --seed 4").code == 0);
    CHECK(run("endow-verify " + fixtures + "/fork_poset.json --n 1 --exhaustive").code == 0);
    CHECK(run("endow-verify cohen:D=2 --n 1 --exhaustive --clause3").code == 0);

    const Result bad = run("endow-verify cohen:D=2 --n 1 --exhaustive --family adversarial --json");
    CHECK(bad.code == 3);
    const json report = parse_ok(bad.out);
    CHECK(report["status"] == "violations");
    CHECK(report["violations"].size() > 0);
    for (const auto& v : report["violations"]) {
        CHECK(v.contains("clause"));
        CHECK(v.contains("witness_p"));
        CHECK(v.contains("antichain_id"));
        CHECK(v["status"] == "violation");
    }
}

TEST_CASE("output is independent of the job count") {
    const std::string args = "endow-verify cohen:D=3 --n 2 --seeded 60 --seed 9 --family adversarial --json";
    const Result one = run("--jobs 1 " + args), four = run("--jobs 4 " + args);
    CHECK(one.code == 3);
    CHECK(one.out == four.out);
}

TEST_CASE("dow") {
    const Result r = run("dow cohen:D=2 -a '0:0;0:1' --n 1 --json");
    CHECK(r.code == 0);
    CHECK(parse_ok(r.out) == parse_ok(slurp(fixtures + "/i1_dow_n1.json")));
    CHECK(parse_ok(r.out)["L"].size() == 2);
    const json zero = parse_ok(run("dow cohen:D=2 -a 0:0 -a 0:1 --n 0 --json").out);
    CHECK(zero["stages"].size() == 1);
    CHECK(zero["L"] == json::array({"0:0"}));
    CHECK(run("dow cohen:D=2 -a 0:0 --n 1").code == 65);
    CHECK(run("dow cohen:D=2 -a 7:0 --n 1").code == 65);
    CHECK(run("dow measure:k=1 -a 0 --n 1").code == 64);
}

TEST_CASE("approx and refine") {
    const Result a = run("approx --scenario " + fixtures + "/i1.json --level 1 --json");
    CHECK(a.code == 0);
    const json aj = parse_ok(a.out);
    CHECK(aj["approximation"]["cover"] == json::parse(R"([["x"], ["x", "y"]])"));
    CHECK(aj["certificate"]["status"] == "positive");

    CHECK(run("refine --scenario " + fixtures + "/i1.json --level 1").code == 0);
    const Result r = run("refine --scenario " + fixtures + "/i1.json --level 1 --family '[[\"x\"]]' --json");
    CHECK(r.code == 0);
    CHECK(parse_ok(r.out)["refined_name"].size() == 9);
    CHECK(run("refine --scenario " + fixtures + "/i1.json --level 1 --family '[[\"y\"]]'").code == 65);
    CHECK(run("refine --scenario " + fixtures + "/i1.json --level 1 --family '[[' ").code == 64);
    CHECK(run("approx --scenario " + fixtures + "/i1.json --level 3").code == 64);
}

TEST_CASE("preserve and verify") {
    const std::string cert = tmp("i1-cert.json");
    CHECK(run("preserve --scenario " + fixtures + "/i1.json --cert " + cert).code == 0);
    CHECK(slurp(cert) == slurp(fixtures + "/i1_certificate.json"));
    const std::string mcert = tmp("m-cert.json");
    CHECK(run("preserve --property rothberger --scenario " + fixtures + "/measure_k1.json --cert " + mcert).code == 0);
    CHECK(slurp(mcert) == slurp(fixtures + "/measure_k1_certificate.json"));

    const Result v1 = run("verify --cert " + cert + " --json"), v2 = run("verify --cert " + cert + " --json");
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);
    CHECK(parse_ok(v1.out)["status"] == "verified");

    json tampered = json::parse(slurp(cert));
    tampered["atoms"][1]["covered"] = false;
    const std::string bad = tmp("tampered.json");
    std::ofstream(bad) << tampered.dump(2);
    CHECK(run("verify --cert " + bad).code == 3);

    CHECK(run("preserve --scenario " + fixtures + "/no_headroom.json").code == 2);
    CHECK(run("preserve --scenario " + fixtures + "/i1.json --property lindelof").code == 64);
    for (const char* p : {"menger", "selective-screenability"})
        CHECK(run(std::string("preserve --scenario ") + fixtures + "/i1.json --property " + p).code == 0);
    const Result j = run("preserve --scenario " + fixtures + "/i1.json --json");
    CHECK(parse_ok(j.out)["verdict"] == "certified");
}

TEST_CASE("gen") {
    const Result a = run("gen --seed 0"), b = run("gen --seed 0"), c = run("gen --seed 1");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(parse_ok(a.out)["kind"] == "scenario");
    CHECK(parse_ok(run("gen --seed 3 --count 4").out).size() == 4);
    CHECK(run("gen --seed 0 --bounds large").code == 70);
    CHECK(run("gen --seed 0 --bounds wild=3").code == 64);
    const std::string file = tmp("gen.json");
    std::ofstream(file) << a.out;
    CHECK(run("preserve --scenario " + file).code == 0);
}

TEST_CASE("selftest") {
    CHECK(run("selftest").code == 0);
    CHECK(run("selftest --bounds large").code == 70);
    const Result r = run("selftest --seed 7 --count 20 --json");
    CHECK(r.code == 0);
    const json j = parse_ok(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["sweeps"].size() == 5);
}

TEST_CASE("usage, environment bounds and error documents") {
    CHECK(run("").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("--help").code == 0);
    CHECK(run("endow-verify cohen:D=3 --n 1 --seeded 5", "ENDOWLAB_BOUNDS=cohen_D=2").code == 70);
    CHECK(run("endow-verify cohen:D=2 --n 1 --exhaustive", "ENDOWLAB_BOUNDS=bogus=1").code == 64);
    const Result e = run("preserve --scenario " + fixtures + "/no_headroom.json --json");
    CHECK(e.code == 2);
    const json doc = parse_ok(e.out);
    CHECK(doc["status"] == "error");
    CHECK(doc["exit_code"] == 2);
}
