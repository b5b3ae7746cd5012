#include "support.hpp"

#include "qorder/cli.hpp"
#include "qorder/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace qorder;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qorder");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("diagonal of a pair") {
    auto r = run({"quantale", "dq", "c3", "--pair", "e", "e"});
    CHECK(r.code == 0);
    CHECK(r.out == "{bot,e,top}\n");
    auto j = run({"--json", "quantale", "dq", "c3", "--pair", "e", "top"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["diagonal"] == nlohmann::json::array({"bot", "top"}));
}

TEST_CASE("invalid quantales exit with 2") {
    for (const char* f : {"broken_assoc.quantale", "m3_meet.quantale", "c3_unit_top.quantale", "trivial.quantale"}) {
        CAPTURE(f);
        auto path = support::fixture(f).string();
        auto v = run({"quantale", "validate", path});
        CHECK(v.code == 2);
        CHECK(v.err.find("AxiomError") != std::string::npos);
        CHECK(run({"verify", "--quantale", path}).code == 2);
    }
    CHECK(run({"quantale", "validate", "c4"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"quantale", "dq"}).code == 2);
    CHECK(run({"ord", "check", "/nonexistent/file"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify passes and writes its report") {
    support::TempDir dir;
    auto report = (dir.path / "report.json").string();
    auto r = run({"verify", "--samples", "5", "--filter", "quantale.", "--report", report});
    CHECK(r.code == 0);
    std::ifstream in(report);
    auto j = nlohmann::json::parse(in);
    CHECK(j["exit_code"] == 0);
    CHECK_FALSE(j["laws"].empty());
    CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("classification as JSON") {
    auto r = run({"--json", "quantale", "classify", "c4"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["integral"] == true);
    CHECK(j["divisible"] == false);
    CHECK(j["commutative"] == false);
}

TEST_CASE("ordered-set commands") {
    support::TempDir dir;
    auto ord = dir.write("chain.ord", "context C over bool2\nsource a:1 b:1\nrel a a 1\nrel b b 1\nrel a b 1\n")
                   .string();
    auto check = run({"ord", "check", ord});
    CHECK(check.code == 0);
    auto dot = run({"ord", "underlying", ord, "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    auto count = run({"--json", "powerset", ord, "--count"});
    CHECK(count.code == 0);
    auto rep = run({"complete", "report", ord});
    CHECK(rep.code == 0);
    CHECK(run({"macneille", ord}).code == 0);
    CHECK(run({"cauchy", ord}).code == 0);
    auto bad = dir.write("bad.ord", "context B over bool2\nsource a:1\n").string();
    CHECK(run({"ord", "check", bad}).code == 2);
}

TEST_CASE("membership enumeration") {
    support::TempDir dir;
    std::string text = "context R over c3\nsource bot e top\n";
    auto q = make_c3();
    for (Elem i = 0; i < 3; ++i)
        for (Elem j = 0; j < 3; ++j)
            text += "rel " + q.label(i) + " " + q.label(j) + " " + q.label(q.res_left(j, i)) + "\n";
    auto path = dir.write("r.mat", text).string();
    auto r = run({"--json", "ord", "enumerate-memberships", path});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 4);
}

TEST_CASE("relations and concepts") {
    support::TempDir dir;
    auto k = dir
                 .write("k.ctx", "context K over bool2\nsource g0:1 g1:1\ntarget m0:1 m1:1\n"
                                 "rel g0 m0 1\nrel g1 m1 1\n")
                 .string();
    CHECK(run({"rel", "validate", k}).code == 0);
    auto c = run({"concepts", k, "--mode", "fca", "--json", "-"});
    REQUIRE(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["mode"] == "fca");
    auto dot = (dir.path / "k.dot").string();
    CHECK(run({"concepts", k, "--mode", "rst", "--dot", dot}).code == 0);
    CHECK(std::filesystem::exists(dot));
}

}  // TEST_SUITE
