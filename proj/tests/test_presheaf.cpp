#include "oracles.hpp"
#include "support.hpp"

#include "qorder/error.hpp"
#include "qorder/galois.hpp"
#include "qorder/presheaf.hpp"

#include <doctest.h>

using namespace qorder;

TEST_SUITE("presheaf") {

TEST_CASE("enumeration agrees with brute force") {
    Rng rng(11);
    for (const char* name : {"bool2", "c3", "c4", "lukasiewicz(4)"}) {
        CAPTURE(name);
        auto q = support::shared(builtin(name));
        for (int i = 0; i < 15; ++i) {
            auto x = random_ordered(q, rng, 1, 3);
            if (powerset_candidates(x, Variance::lower) > 50000) continue;
            const auto& m = x.carrier().membership();
            const auto& a = x.order().entries();
            for (bool lower : {true, false}) {
                auto p = lower ? presheaves(x) : copresheaves(x);
                oracle::Weights got;
                for (std::size_t k = 0; k < p.size(); ++k) got.emplace(p.degree(k), p.values(k));
                CHECK(got.size() == p.size());
                CHECK(got == oracle::weights(*q, m, a, lower));
            }
        }
    }
}

TEST_CASE("powersets are separated and indexed") {
    Rng rng(12);
    auto q = support::shared(make_c4());
    for (int i = 0; i < 10; ++i) {
        auto x = random_ordered(q, rng, 1, 2);
        auto px = presheaves(x);
        CHECK(is_separated(px.ordered()));
        for (std::size_t k = 0; k < px.size(); ++k) {
            CHECK(px.index_of(px.degree(k), px.values(k)) == k);
            CHECK(px.index_of(px.relation(k)) == k);
            CHECK(is_presheaf(x, px.degree(k), px.values(k)));
            // The order on PX is the hom of presheaves.
            for (std::size_t j = 0; j < px.size(); ++j)
                CHECK(px.ordered().alpha(k, j) == presheaf_hom(px.presheaf(k), px.presheaf(j)));
        }
    }
}

TEST_CASE("Yoneda maps are fully faithful") {
    Rng rng(13);
    for (const char* name : {"bool2", "c3", "c4"}) {
        auto q = support::shared(builtin(name));
        for (int i = 0; i < 10; ++i) {
            auto x = random_ordered(q, rng, 1, 3);
            if (powerset_candidates(x, Variance::lower) > 50000) continue;
            auto px = presheaves(x), pdx = copresheaves(x);
            auto y = yoneda_map(px), cy = co_yoneda_map(pdx);
            CHECK(check_map(y.assignment(), x, px.ordered()).fully_faithful);
            CHECK(check_map(cy.assignment(), x, pdx.ordered()).fully_faithful);
            for (std::size_t a = 0; a < x.size(); ++a) {
                CHECK(px.values(y(a)) == yoneda(x, a).values);
                CHECK(pdx.values(cy(a)) == co_yoneda(x, a).values);
            }
        }
    }
}

TEST_CASE("image maps preserve membership and order") {
    Rng rng(14);
    auto q = support::shared(make_c3());
    for (int i = 0; i < 20; ++i) {
        auto x = random_ordered(q, rng, 1, 2), y = random_ordered(q, rng, 1, 2);
        auto f = random_map(x, y, rng);
        if (!f) continue;
        auto px = presheaves(x), py = presheaves(y), pdx = copresheaves(x), pdy = copresheaves(y);
        // Construction throws InvalidMap if any of the four fails.
        auto im = image_maps(*f, px, py, pdx, pdy);
        CHECK(is_galois(im.forward, im.backward));
    }
}

TEST_CASE("size caps") {
    auto q = support::shared(make_lukasiewicz(4));
    QSubset s(q, {"a", "b", "c", "d"}, std::vector<Elem>(4, q->top()));
    auto x = QOrderedSet::discrete(s);
    Caps tiny;
    tiny.powerset = 10;
    CHECK_THROWS_AS(presheaves(x, tiny), SizeCap);
}

TEST_CASE("weight labels") {
    auto q = support::shared(make_c3());
    CHECK(weight_label(*q, q->unit(), {q->bottom(), q->unit()}).find("e") != std::string::npos);
}

}  // TEST_SUITE
