#include "oracles.hpp"
#include "support.hpp"

#include "qorder/error.hpp"
#include "qorder/galois.hpp"

#include <doctest.h>

using namespace qorder;

namespace {

QSubset crisp(const QuantalePtr& q, std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return QSubset(q, labels, std::vector<Elem>(n, q->top()));
}

bool small(const QOrderedSet& x, std::size_t cap) {
    return powerset_candidates(x, Variance::lower) <= cap && powerset_candidates(x, Variance::upper) <= cap;
}

}  // namespace

TEST_SUITE("galois") {

TEST_CASE("identity is its own adjoint") {
    Rng rng(31);
    auto q = support::shared(make_c4());
    for (int i = 0; i < 10; ++i) {
        auto x = random_ordered(q, rng, 1, 3);
        auto id = identity_map(x);
        CHECK(is_galois(id, id));
        auto right = find_adjoint(id, Side::right);
        REQUIRE_FALSE(right.empty());
        for (const auto& g : right) CHECK(graph_criterion(id, g));
    }
}

TEST_CASE("adjunction agrees with the graph criterion") {
    Rng rng(32);
    for (const char* name : {"bool2", "c3", "c4"}) {
        auto q = support::shared(builtin(name));
        std::size_t adjoint = 0;
        for (int i = 0; i < 60; ++i) {
            auto x = random_ordered(q, rng, 1, 3), y = random_ordered(q, rng, 1, 3);
            auto f = random_map(x, y, rng), g = random_map(y, x, rng);
            if (!f || !g) continue;
            bool a = is_galois(*f, *g);
            adjoint += a;
            CHECK(a == graph_criterion(*f, *g));
            for (const auto& h : find_adjoint(*f, Side::right)) CHECK(is_galois(*f, h));
            for (const auto& h : find_adjoint(*f, Side::left)) CHECK(is_galois(h, *f));
        }
        CHECK(adjoint > 0);
    }
}

TEST_CASE("distributor formulations agree") {
    Rng rng(33);
    for (const char* name : {"bool2", "c3", "c4", "lukasiewicz(4)"}) {
        auto q = support::shared(builtin(name));
        for (int i = 0; i < 40; ++i) {
            auto x = random_ordered(q, rng, 1, 3), y = random_ordered(q, rng, 1, 3);
            auto r = random_relation(x.carrier(), y.carrier(), rng, 0.6);
            auto forms = distributor_forms(r, x, y);
            CHECK(forms.agree());
            CHECK(forms.composite == is_distributor(r, x, y).holds);
            auto c = distributor_closure(r, x, y);
            CHECK(is_distributor(c, x, y).holds);
            CHECK(leq(r, c));
            CHECK(is_distributor(random_distributor(x, y, rng), x, y).holds);
        }
    }
}

TEST_CASE("graph is left adjoint to cograph") {
    Rng rng(34);
    for (const char* name : {"c3", "c4", "lukasiewicz(4)"}) {
        auto q = support::shared(builtin(name));
        for (int i = 0; i < 40; ++i) {
            auto x = random_ordered(q, rng, 1, 3), y = random_ordered(q, rng, 1, 3);
            auto f = random_map(x, y, rng);
            if (!f) continue;
            CHECK(is_dist_adjoint(graph(*f), cograph(*f), x, y));
        }
    }
}

TEST_CASE("lifted pairs are Galois") {
    Rng rng(35);
    auto q = support::shared(make_bool2());
    for (int i = 0; i < 20; ++i) {
        auto x = random_ordered(q, rng, 1, 2);
        if (!small(x, 100)) continue;
        auto px = powersets(x);
        auto id = identity_map(x);
        auto lifted = lift_galois(id, id, px, px);
        for (const auto* p : {&lifted.polarity, &lifted.axiality, &lifted.dual_axiality})
            CHECK(is_galois(p->left, p->right));
    }
}

TEST_CASE("fixed points of a Galois pair are complete") {
    Rng rng(36);
    auto q = support::shared(make_bool2());
    for (int i = 0; i < 20; ++i) {
        auto x = random_ordered(q, rng, 1, 2), y = random_ordered(q, rng, 1, 2);
        auto px = powersets(x), py = powersets(y);
        auto phi = random_distributor(x, y, rng);
        for (auto pair : {isbell(phi, px, py), kan(phi, px, py)}) {
            auto fp = fixed_points(pair);
            auto fq = fixed_points(pair, true);
            CHECK(fp.ordered.size() == fq.ordered.size());
            CHECK(completeness_report(fp.ordered).complete);
        }
    }
}

TEST_CASE("MacNeille completion of a chain is the chain") {
    auto q = support::shared(make_bool2());
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Elem> alpha(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) alpha[i * n + j] = i <= j ? q->top() : q->bottom();
        auto x = make_ordered(crisp(q, n, "c"), alpha);
        auto mc = macneille(x);
        std::size_t crisp_points = 0;
        for (std::size_t k = 0; k < mc.ordered.size(); ++k) crisp_points += mc.ordered.degree(k) == q->top();
        // Only the principal cuts.
        CHECK(crisp_points == n);
    }
}

TEST_CASE("concept lattices over bool2") {
    auto q = support::shared(make_bool2());
    // Two objects, two attributes, the identity context.
    QRelation ctx(crisp(q, 2, "g"), crisp(q, 2, "m"), {1, 0, 0, 1});
    auto fca = concept_lattice(ctx, ConceptMode::fca);
    std::size_t full = 0;
    for (const auto& c : fca.concepts) full += c.degree == q->top();
    CHECK(full == 4);
    CHECK_FALSE(fca.covers.empty());
    auto rst = concept_lattice(ctx, ConceptMode::rst);
    CHECK(rst.mode == ConceptMode::rst);
    CHECK(completeness_report(rst.extents.ordered).complete);
}

TEST_CASE("Hasse covers of a chain") {
    auto q = support::shared(make_bool2());
    auto x = make_ordered(crisp(q, 3, "c"), {1, 1, 1, 0, 1, 1, 0, 0, 1});
    auto covers = hasse_covers(x);
    std::sort(covers.begin(), covers.end());
    CHECK(covers == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("Cauchy completeness") {
    auto q = support::shared(make_bool2());
    // A crisp point has no element of degree 0 for the zero presheaf.
    auto point = QOrderedSet::discrete(QSubset::singleton(q, q->top(), "p"));
    auto r = cauchy_report(point);
    CHECK_FALSE(r.cauchy_complete);
    CHECK(r.right_adjoint_count == 2);
    // A powerset is complete, hence Cauchy complete.
    auto px = presheaves(point).ordered();
    CHECK(is_cauchy_complete(px));
    for (std::size_t k = 0; k < px.size(); ++k)
        CHECK_FALSE(right_adjoint_witnesses(yoneda(px, k), copresheaves(px)).empty());
}

TEST_CASE("adjoint search respects its cap") {
    auto q = support::shared(make_bool2());
    auto f = identity_map(QOrderedSet::discrete(QSubset(q, {"a", "b"}, {1, 1})));
    Caps tiny;
    tiny.adjoints = 0;
    CHECK_THROWS_AS(find_adjoint(f, Side::right, tiny), SizeCap);
}

}  // TEST_SUITE
