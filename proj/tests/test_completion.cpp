#include "oracles.hpp"
#include "support.hpp"

#include "qorder/completion.hpp"
#include "qorder/error.hpp"

#include <doctest.h>

using namespace qorder;

namespace {

QOrderedSet crisp_order(const QuantalePtr& q, std::size_t n, const std::vector<bool>& le) {
    std::vector<std::string> labels;
    std::vector<Elem> alpha(n * n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < n * n; ++i) alpha[i] = le[i] ? q->top() : q->bottom();
    return make_ordered(QSubset(q, labels, std::vector<Elem>(n, q->top())), alpha);
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_SUITE("completion") {

TEST_CASE("representables have themselves as suprema") {
    Rng rng(21);
    for (const char* name : {"bool2", "c3", "c4", "lukasiewicz(4)"}) {
        auto q = support::shared(builtin(name));
        for (int i = 0; i < 30; ++i) {
            auto x = random_ordered(q, rng, 1, 3);
            for (std::size_t a = 0; a < x.size(); ++a) {
                CHECK(contains(sup(x, yoneda(x, a)), a));
                CHECK(contains(inf(x, co_yoneda(x, a)), a));
            }
        }
    }
}

TEST_CASE("tensor by the degree is the element itself") {
    Rng rng(22);
    for (const char* name : {"c3", "c4", "lukasiewicz(4)"}) {
        auto q = support::shared(builtin(name));
        for (int i = 0; i < 30; ++i) {
            auto x = random_ordered(q, rng, 1, 3);
            for (std::size_t a = 0; a < x.size(); ++a) {
                const Elem d = x.degree(a);
                CHECK(contains(tensor(x, d, a, d), a));
                CHECK(contains(cotensor(x, d, a, d), a));
            }
        }
    }
}

TEST_CASE("scalars outside the diagonal are rejected") {
    auto q = support::shared(make_c3());
    auto x = QOrderedSet::discrete(QSubset::singleton(q, q->unit(), "x"));
    // D(e,top) = {bot,top}.
    CHECK_THROWS_AS(tensor(x, q->unit(), 0, q->top()), InvalidScalar);
}

TEST_CASE("suprema are least upper bounds") {
    Rng rng(23);
    auto q = support::shared(make_c4());
    for (int i = 0; i < 20; ++i) {
        auto x = random_ordered(q, rng, 1, 3);
        auto px = presheaves(x);
        for (std::size_t k = 0; k < px.size(); ++k) {
            auto mu = px.presheaf(k);
            auto up = ub(x, mu);
            for (std::size_t s : sup(x, mu)) {
                CHECK(up.values[s] == mu.degree);
                // ub mu = 1_X(s,-) restricted to degree mu.degree.
                for (std::size_t b = 0; b < x.size(); ++b)
                    if (x.degree(b) == mu.degree) CHECK(up.values[b] == x.alpha(s, b));
            }
        }
    }
}

TEST_CASE("crisp posets over bool2 are never complete") {
    auto q = support::shared(make_bool2());
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& le : oracle::posets(n)) {
            auto x = crisp_order(q, n, le);
            auto rep = completeness_report(x);
            CHECK(rep.consistent());
            // bool2 has a bottom fibre, so no crisp poset alone is complete.
            CHECK_FALSE(rep.complete);
            CHECK_FALSE(rep.order_complete);
        }
}

TEST_CASE("powersets of crisp posets are complete") {
    auto q = support::shared(make_bool2());
    for (const auto& le : oracle::posets(2)) {
        auto px = presheaves(crisp_order(q, 2, le));
        auto rep = completeness_report(px.ordered());
        CHECK(rep.complete);
        CHECK(rep.cocomplete);
        CHECK(rep.tensored);
        CHECK(rep.cotensored);
        CHECK(rep.order_complete);
        CHECK_FALSE(rep.missing_sup.has_value());
    }
}

TEST_CASE("report names the first missing supremum") {
    auto q = support::shared(make_bool2());
    auto x = QOrderedSet::discrete(QSubset(q, {"a", "b"}, {1, 1}));
    auto rep = completeness_report(x);
    CHECK_FALSE(rep.complete);
    CHECK(rep.missing_sup.has_value());
}

TEST_CASE("order-completeness caps the fibre scan") {
    auto q = support::shared(make_bool2());
    // The degree 0 fibre is scanned first and must not be empty.
    auto x = QOrderedSet::discrete(QSubset(q, {"z", "a", "b", "c"}, {0, 1, 1, 1}));
    Caps tiny;
    tiny.subset_bits = 2;
    CHECK_THROWS_AS(is_order_complete(x, tiny), SizeCap);
}

TEST_CASE("preservation of suprema by identities and constants") {
    auto q = support::shared(make_bool2());
    auto px = presheaves(QOrderedSet::discrete(QSubset(q, {"a", "b"}, {1, 1})));
    const auto& p = px.ordered();
    CHECK(is_sup_preserving(identity_map(p)).holds);
    CHECK(is_inf_preserving(identity_map(p)).holds);
    // Constant at the top of each degree: preserves infima but not suprema.
    std::vector<std::size_t> top(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::vector<Elem> full(2, p.degree(k));
        top[k] = *px.index_of(p.degree(k), full);
    }
    QOrderMap f(p, p, top);
    CHECK_FALSE(is_sup_preserving(f).holds);
    CHECK(is_sup_preserving(f).witness.has_value());
    CHECK(is_inf_preserving(f).holds);
}

}  // TEST_SUITE
