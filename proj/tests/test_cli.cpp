#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "berkline/cli.hpp"
#include "berkline/sampling.hpp"
#include "berkline/serialize.hpp"

using namespace berkline;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("berkline_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string write(const std::string& name, const std::string& content) const {
        std::ofstream out(path / name);
        out << content;
        return (path / name).string();
    }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::vector<const char*> argv = {"berkline"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("tree-metric prints the exact distance") {
    TempDir dir;
    std::string p = dir.write(
        "p.json", R"js({"chart":"Z","kind":"disk","center":"0","log_radius":"1"})js");
    std::string q = dir.write(
        "q.json", R"js({"chart":"Z","kind":"disk","center":"0","log_radius":"4"})js");
    RunResult r = run({"tree-metric", p, q});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    RunResult rj = run({"--out", "json", "tree-metric", p, q});
    CHECK(rj.code == 0);
    CHECK(Json::parse(rj.out)["dan"] == "3");
}

TEST_CASE("job files validate version, command, and unknown fields") {
    TempDir dir;
    std::string good = dir.write("job.json", R"js({
        "version": 1, "command": "tree-metric",
        "payload": {"kind": "disk", "center": "0", "log_radius": "1"}
    })js");
    std::string q =
        dir.write("q.json", R"js({"kind":"disk","center":"0","log_radius":"2"})js");
    CHECK(run({"tree-metric", good, q}).code == 0);

    std::string bad_version = dir.write("bad1.json", R"js({
        "version": 2, "command": "tree-metric",
        "payload": {"kind": "disk", "center": "0", "log_radius": "1"}
    })js");
    CHECK(run({"tree-metric", bad_version, q}).code == 2);

    std::string unknown_field = dir.write(
        "bad2.json", R"js({"kind":"disk","center":"0","log_radius":"1","extra":3})js");
    CHECK(run({"tree-metric", unknown_field, q}).code == 2);

    std::string malformed = dir.write("bad3.json", "{not json");
    RunResult r = run({"tree-metric", malformed, q});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad3.json") != std::string::npos);
}

TEST_CASE("real-test emits a re-verifiable certificate") {
    TempDir dir;
    std::string p = dir.write("disk.json", R"js({
        "kind": "disk", "center": {"re": "0", "im": "1"}, "log_radius": "-1"
    })js");
    RunResult r = run({"real-test", p});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["verdict"] == false);
    CHECK(j["witness"]["kind"] == "violating_family");
    CHECK(j["witness"]["lhs"] == "-1");
    CHECK(j["witness"]["rhs"] == "0");
    CHECK(j["witness"]["family"].size() == 2);
}

TEST_CASE("tree-path output round-trips") {
    TempDir dir;
    std::string p =
        dir.write("p.json", R"js({"kind":"disk","center":"0","log_radius":"0"})js");
    std::string q =
        dir.write("q.json", R"js({"kind":"disk","center":"x","log_radius":"0"})js");
    RunResult r = run({"tree-path", p, q, "1"});
    CHECK(r.code == 0);
    BerkPoint point = parse_point(Json::parse(r.out));
    CHECK(points_equal(point, BerkPoint::disk(ComplexPuiseux(), Rational(1))));
}

TEST_CASE("chart-W points normalize to chart Z") {
    TempDir dir;
    // D_w(x^{-1}, e^{-3}) does not contain w = 0: it is the chart-Z disk
    // D(x, e^{-1}).
    std::string p = dir.write(
        "w.json",
        R"js({"chart":"W","kind":"disk","center":"x^(-1)","log_radius":"-3"})js");
    std::string q = dir.write(
        "z.json", R"js({"chart":"Z","kind":"disk","center":"x","log_radius":"-1"})js");
    RunResult r = run({"tree-metric", p, q});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");

    // Containing w = 0 it collapses to D(0, e^{+1/2}).
    std::string c = dir.write(
        "c.json",
        R"js({"chart":"W","kind":"disk","center":"x^(-1)","log_radius":"-1/2"})js");
    std::string g =
        dir.write("g.json", R"js({"kind":"disk","center":"0","log_radius":"1/2"})js");
    RunResult rc = run({"tree-metric", c, g});
    CHECK(rc.code == 0);
    CHECK(rc.out == "0\n");
}

TEST_CASE("spectrum-sign and ladder exhaustion exit codes") {
    TempDir dir;
    std::string point = dir.write("pt.json", R"js({"kind":"right_of","u":"0"})js");
    std::string poly = dir.write("poly.json", R"js(["0","1"])js"); // z
    RunResult r = run({"spectrum-sign", point, poly});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["sign"] == 1);
    CHECK(j["closed"] == false);

    std::string cut = dir.write("cut.json", R"js({
        "kind": "free_cut", "ladder": ["3", "3.1", "3.14"], "budget": 2
    })js");
    std::string unstable = dir.write("unstable.json", R"js(["-3.12", "1"])js"); // z - 3.12
    RunResult rc = run({"spectrum-sign", cut, unstable});
    CHECK(rc.code == 3);
}

TEST_CASE("translation-length and orbit") {
    TempDir dir;
    std::string g = dir.write("g.json", R"js([["x","0"],["0","x^(-1)"]])js");
    RunResult r = run({"translation-length", g});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    std::string p =
        dir.write("p.json", R"js({"kind":"disk","center":"0","log_radius":"0"})js");
    RunResult orbit = run({"orbit", g, p, "--steps", "3"});
    CHECK(orbit.code == 0);
    Json rows = Json::parse(orbit.out);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) CHECK(row["displacement"] == "2");
    CHECK(rows[3]["from_start"] == "6");
}

TEST_CASE("minvec and cartan") {
    TempDir dir;
    std::string rep = dir.write("rep.json", R"js({
        "n": 2, "generators": ["a"], "matrices": [[[1, 1], [0, 1]]]
    })js");
    RunResult r = run({"minvec-check", rep});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["ok"] == false);
    CHECK(j["residual"].get<double>() == doctest::Approx(std::sqrt(2.0)));

    std::string a = dir.write("A.json", "[[1, 0], [0, 1]]");
    std::string b = dir.write("B.json", "[[4, 0], [0, 0.25]]");
    RunResult rc = run({"cartan", a, b});
    CHECK(rc.code == 0);
    Json jc = Json::parse(rc.out);
    CHECK(jc["d_delta"].get<double>() == doctest::Approx(16.0));
}

TEST_CASE("degenerate emits the fixed CSV header and is deterministic") {
    TempDir dir;
    std::string job = dir.write("job.json", R"js({
        "version": 1, "command": "degenerate",
        "payload": {
            "rep": {"generators": ["a"], "matrices": [[["x","0"],["0","x^(-1)"]]]},
            "words": ["a", "aa"],
            "t_grid": [100.0, 10000.0]
        }
    })js");
    RunResult first = run({"degenerate", job});
    CHECK(first.code == 0);
    CHECK(first.out.rfind("word,t,rescaled,limit,gap\n", 0) == 0);
    RunResult second = run({"degenerate", job});
    CHECK(second.out == first.out); // byte-identical reruns

    RunResult json_out = run({"--out", "json", "--jobs", "2", "degenerate", job});
    CHECK(json_out.code == 0);
    Json rows = Json::parse(json_out.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0]["word"] == "a");
    CHECK(rows[0]["limit"] == "4");
    CHECK(rows[2]["word"] == "aa");
    CHECK(rows[2]["limit"] == "8");

    std::string bad = dir.write("bad.json", R"js({
        "version": 1, "command": "degenerate",
        "payload": {
            "rep": {"generators": ["a"], "matrices": [[["x","0"],["0","x^(-1)"]]]},
            "words": ["a"], "t_grid": [100.0], "typo": true
        }
    })js");
    CHECK(run({"degenerate", bad}).code == 2);
}

TEST_CASE("seminorm command") {
    TempDir dir;
    std::string p =
        dir.write("p.json", R"js({"kind":"disk","center":"0","log_radius":"1"})js");
    std::string f = dir.write("f.json", R"js(["1", "x", "1"])js");
    RunResult r = run({"seminorm", p, f});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["seminorm"] == "2");
}

TEST_CASE("point serialization round trip") {
    Sampler s(71);
    for (int i = 0; i < 200; ++i) {
        BerkPoint p = s.coin() ? s.disk() : BerkPoint::type1(s.complex_puiseux());
        BerkPoint back = parse_point(point_to_json(p));
        CHECK(points_equal(p, back));
    }
    BerkPoint inf = parse_point(point_to_json(BerkPoint::infinity()));
    CHECK(inf.is_infinity());
}
