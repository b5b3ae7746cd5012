#include "support.hpp"

#include "qorder/verify.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>

using namespace qorder;

TEST_SUITE("verify") {

TEST_CASE("law ids are unique and sorted") {
    const auto& laws = law_registry();
    REQUIRE_FALSE(laws.empty());
    std::set<std::string> ids;
    for (const auto& l : laws) {
        CHECK(ids.insert(l.id).second);
        CHECK_FALSE(l.description.empty());
    }
    for (std::size_t i = 1; i < laws.size(); ++i) CHECK(laws[i - 1].id < laws[i].id);
}

TEST_CASE("runs are deterministic for a seed") {
    VerifyOptions o;
    o.seed = 99;
    o.samples = 10;
    o.filter = "qrel.";
    auto a = to_json(run_verify(o)), b = to_json(run_verify(o));
    CHECK(a == b);
}

TEST_CASE("every law holds on the default quantales") {
    VerifyOptions o;
    o.samples = 20;
    auto rep = run_verify(o);
    CHECK(rep.exit_code() == 0);
    for (const auto& e : rep.entries) {
        CAPTURE(e.law);
        CAPTURE(e.quantale);
        CAPTURE(e.outcome.witness);
        CHECK(e.outcome.status != LawStatus::fail);
        if (e.outcome.status == LawStatus::skip) CHECK_FALSE(e.outcome.note.empty());
    }
    CHECK(rep.count(LawStatus::pass) > rep.count(LawStatus::skip));
}

TEST_CASE("filters select by prefix") {
    VerifyOptions o;
    o.samples = 5;
    o.filter = "quantale.";
    auto rep = run_verify(o);
    REQUIRE_FALSE(rep.entries.empty());
    for (const auto& e : rep.entries) CHECK(e.law.rfind("quantale.", 0) == 0);
}

TEST_CASE("QORDER_CAP scales the caps") {
    ::setenv("QORDER_CAP", "123", 1);
    auto c = Caps::from_env();
    CHECK(c.powerset == 123);
    CHECK(c.memberships == 123);
    CHECK(c.adjoints == 123);
    ::setenv("QORDER_CAP", "junk", 1);
    CHECK(Caps::from_env().powerset == Caps::defaults().powerset);
    ::unsetenv("QORDER_CAP");
}

}  // TEST_SUITE
