#include "oracles.hpp"
#include "support.hpp"

#include "qorder/error.hpp"
#include "qorder/io.hpp"
#include "qorder/quantale.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace qorder;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

AxiomKind axiom_kind(const std::string& file) {
    try {
        load_quantale(slurp(support::fixture(file)));
    } catch (const AxiomError& e) {
        return e.kind();
    }
    FAIL("no AxiomError for " << file);
    return AxiomKind::not_a_lattice;
}

}  // namespace

TEST_SUITE("quantale") {

TEST_CASE("builtin sizes and units") {
    CHECK(builtin("bool2").size() == 2);
    CHECK(builtin("c3").size() == 3);
    CHECK(builtin("c4").size() == 4);
    CHECK(builtin("lukasiewicz(4)").size() == 5);
    CHECK(builtin("rel(2)").size() == 16);
    auto c3 = make_c3();
    CHECK(c3.label(c3.unit()) == "e");
    auto c4 = make_c4();
    CHECK(c4.unit() == c4.top());
    auto l = make_lukasiewicz(4);
    CHECK(l.find("1/4").has_value());
}

TEST_CASE("unknown and oversized builtins") {
    CHECK_THROWS_AS(builtin("nope"), Error);
    CHECK_THROWS_AS(make_lukasiewicz(100), UnsupportedSize);
    CHECK_THROWS_AS(make_sup_endo(5), UnsupportedSize);
    CHECK_THROWS_AS(make_rel(3), UnsupportedSize);
}

TEST_CASE("residuations agree with brute force") {
    for (const char* name : support::builtins) {
        CAPTURE(name);
        auto q = builtin(name);
        for (Elem a = 0; a < q.size(); ++a)
            for (Elem b = 0; b < q.size(); ++b) {
                CHECK(q.res_left(a, b) == oracle::res_left(q, a, b));
                CHECK(q.res_right(a, b) == oracle::res_right(q, a, b));
                CHECK(q.join(a, b) == oracle::join(q, a, b));
                CHECK(q.meet(a, b) == oracle::meet(q, a, b));
            }
    }
}

TEST_CASE("diagonal sets agree with brute force") {
    for (const char* name : support::builtins) {
        CAPTURE(name);
        auto q = builtin(name);
        for (Elem p = 0; p < q.size(); ++p)
            for (Elem r = 0; r < q.size(); ++r) {
                auto d = q.diagonal(p, r);
                CHECK(d.elements() == oracle::diagonal(q, p, r));
                CHECK(d.contains(q.bottom()));
                CHECK(q.diagonal_top(p, r) == q.join_all(d));
            }
    }
}

TEST_CASE("p lies in D(p,p)") {
    for (const char* name : support::builtins) {
        auto q = builtin(name);
        for (Elem p = 0; p < q.size(); ++p) CHECK(q.diagonal(p, p).contains(p));
    }
}

TEST_CASE("classification") {
    auto c3 = make_c3().classify();
    CHECK_FALSE(c3.integral);
    CHECK(c3.commutative);
    CHECK(c3.idempotents_above_unit.size() == 2);
    auto b = make_bool2().classify();
    CHECK(b.integral);
    CHECK(b.divisible);
    CHECK(b.commutative);
    auto l = make_lukasiewicz(4).classify();
    CHECK(l.integral);
    CHECK(l.divisible);
    CHECK(l.commutative);
    for (const char* name : support::builtins) {
        auto q = builtin(name);
        CHECK(q.classify().idempotents_above_unit.size() == oracle::idempotents_above_unit(q));
    }
}

TEST_CASE("conjugate reverses multiplication and swaps residuals") {
    for (const char* name : support::builtins) {
        CAPTURE(name);
        auto q = builtin(name);
        auto c = q.conjugate();
        for (Elem a = 0; a < q.size(); ++a)
            for (Elem b = 0; b < q.size(); ++b) {
                CHECK(c.mul(a, b) == q.mul(b, a));
                CHECK(c.res_left(a, b) == q.res_right(b, a));
            }
        CHECK(c.conjugate() == q);
    }
}

TEST_CASE("text round trip") {
    for (const char* name : support::builtins) {
        CAPTURE(name);
        auto q = builtin(name);
        CHECK(load_quantale(to_text(q)) == q);
    }
}

TEST_CASE("axiom failures name their kind") {
    CHECK(axiom_kind("m3_meet.quantale") == AxiomKind::non_distributive);
    CHECK(axiom_kind("c3_unit_top.quantale") == AxiomKind::unit_failure);
    CHECK(axiom_kind("trivial.quantale") == AxiomKind::trivial);
    CHECK(axiom_kind("broken_assoc.quantale") == AxiomKind::non_associative);
}

TEST_CASE("not a lattice") {
    // Two incomparable maximal elements have no join.
    const char* text = "quantale v\nelements 0 a b\nunit a\norder 0<a 0<b\n"
                       "mul 0 0 0\nmul 0 a 0\nmul 0 b 0\nmul a 0 0\nmul a a a\nmul a b b\n"
                       "mul b 0 0\nmul b a b\nmul b b b\n";
    try {
        load_quantale(text);
        FAIL("accepted");
    } catch (const AxiomError& e) {
        CHECK(e.kind() == AxiomKind::not_a_lattice);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            load_quantale(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("quantale x\nelements a b\nbogus\n") == 3);
    CHECK(line_of("quantale x\nelements a b\nunit a\nmul a b\n") == 4);
    CHECK(line_of("quantale x\nelements a b\nunit a\norder a<c\n") == 4);
    CHECK(line_of("quantale x\nelements a a\n") == 2);
}

TEST_CASE("quantale references resolve builtins and files") {
    CHECK(resolve_quantale("c3")->size() == 3);
    CHECK_THROWS_AS(resolve_quantale(support::fixture("trivial.quantale").string()), AxiomError);
    support::TempDir dir;
    dir.write("c4.quantale", to_text(make_c4()));
    CHECK(*resolve_quantale("c4.quantale", dir.path) == make_c4());
}

}  // TEST_SUITE
