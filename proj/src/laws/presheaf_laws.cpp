#include "../laws.hpp"

#include "qorder/error.hpp"
#include "qorder/presheaf.hpp"

#include <set>

namespace qorder::laws {

namespace {

using Weight = std::pair<Elem, std::vector<Elem>>;

// Every diagonal-valid vector of the given variance whose relation satisfies
// mu o alpha <= mu (lower) or alpha o lambda <= lambda (upper).
std::set<Weight> closed_weights(const QOrderedSet& x, Variance v) {
    const auto& q = x.quantale();
    const std::size_t n = x.size();
    std::set<Weight> out;
    for (std::size_t d = 0; d < q.size(); ++d) {
        const auto deg = static_cast<Elem>(d);
        auto one = QSubset::singleton(x.quantale_ptr(), deg);
        std::vector<std::vector<Elem>> cand(n);
        for (std::size_t i = 0; i < n; ++i)
            cand[i] = (v == Variance::lower ? q.diagonal(x.degree(i), deg) : q.diagonal(deg, x.degree(i))).elements();
        std::vector<std::size_t> pos(n, 0);
        for (;;) {
            std::vector<Elem> w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = cand[i][pos[i]];
            bool closed = v == Variance::lower
                              ? leq(compose(QRelation::trusted(x.carrier(), one, w), x.order()),
                                    QRelation::trusted(x.carrier(), one, w))
                              : leq(compose(x.order(), QRelation::trusted(one, x.carrier(), w)),
                                    QRelation::trusted(one, x.carrier(), w));
            if (closed) out.emplace(deg, w);
            std::size_t i = n;
            while (i > 0 && pos[i - 1] + 1 == cand[i - 1].size()) pos[--i] = 0;
            if (i == 0) break;
            ++pos[i - 1];
        }
    }
    return out;
}

std::set<Weight> as_set(const PowersetOrder& p) {
    std::set<Weight> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.emplace(p.degree(i), p.values(i));
    return out;
}

LawOutcome enumeration(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto px = presheaves(x, c.caps);
        auto pdx = copresheaves(x, c.caps);
        t.check(as_set(px) == closed_weights(x, Variance::lower) && px.size() == as_set(px).size(),
                [&] { return "presheaves of " + show(x); });
        t.check(as_set(pdx) == closed_weights(x, Variance::upper) && pdx.size() == as_set(pdx).size(),
                [&] { return "copresheaves of " + show(x); });
    }
    return t.done();
}

LawOutcome powerset_valid(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < heavy(c); ++i) {
        auto x = small_ordered(c, 3, 150);
        for (const auto& p : {presheaves(x, c.caps), copresheaves(x, c.caps)}) {
            bool valid = true;
            try {
                make_ordered(p.ordered().carrier(), p.ordered().order().entries());
            } catch (const Error&) {
                valid = false;
            }
            t.check(valid && is_separated(p.ordered()), [&] {
                return std::string(p.variance() == Variance::lower ? "PX" : "P+X") + " of " + show(x);
            });
        }
    }
    return t.done();
}

LawOutcome yoneda_lemma(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto px = presheaves(x, c.caps);
        auto pdx = copresheaves(x, c.caps);
        for (std::size_t k = 0; k < px.size(); ++k) {
            auto mu = px.presheaf(k);
            for (std::size_t a = 0; a < x.size(); ++a)
                t.check(presheaf_hom(yoneda(x, a), mu) == mu.values[a],
                        [&] { return px.ordered().label(k) + " at " + x.label(a) + " in " + show(x); });
        }
        for (std::size_t k = 0; k < pdx.size(); ++k) {
            auto lam = pdx.copresheaf(k);
            for (std::size_t a = 0; a < x.size(); ++a)
                t.check(copresheaf_hom(lam, co_yoneda(x, a)) == lam.values[a],
                        [&] { return "dual " + pdx.ordered().label(k) + " at " + x.label(a) + " in " + show(x); });
        }
    }
    return t.done();
}

LawOutcome yoneda_embedding(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto px = presheaves(x, c.caps);
        auto pdx = copresheaves(x, c.caps);
        auto y = yoneda_map(px);
        auto yd = co_yoneda_map(pdx);
        t.check(check_map(y.assignment(), x, px.ordered()).fully_faithful &&
                    check_map(yd.assignment(), x, pdx.ordered()).fully_faithful,
                [&] { return show(x); });
    }
    return t.done();
}

LawOutcome upper_reversed(LawContext& c) {
    Tally t;
    const auto& q = *c.q;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto pdx = copresheaves(x, c.caps);
        const std::size_t m = pdx.size();
        auto le = underlying_preorder(pdx.ordered());
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (pdx.degree(a) != pdx.degree(b)) continue;
                bool below = true;
                for (std::size_t k = 0; k < x.size(); ++k) below = below && q.leq(pdx.values(b)[k], pdx.values(a)[k]);
                t.check(le[a * m + b] == below,
                        [&] { return pdx.ordered().label(a) + " vs " + pdx.ordered().label(b) + " over " + show(x); });
            }
    }
    return t.done();
}

LawOutcome image_representables(LawContext& c) {
    Tally t;
    std::size_t found = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c, 2);
        auto y = small_ordered(c, 3);
        auto f = random_map(x, y, c.rng);
        if (!f) continue;
        ++found;
        auto px = presheaves(x, c.caps), py = presheaves(y, c.caps);
        auto pdx = copresheaves(x, c.caps), pdy = copresheaves(y, c.caps);
        auto im = image_maps(*f, px, py, pdx, pdy);
        auto yx = yoneda_map(px), yy = yoneda_map(py);
        auto dx = co_yoneda_map(pdx), dy = co_yoneda_map(pdy);
        for (std::size_t a = 0; a < x.size(); ++a)
            t.check(im.forward(yx(a)) == yy((*f)(a)) && im.dual_forward(dx(a)) == dy((*f)(a)),
                    [&] { return "at " + x.label(a) + " for " + show(x) + " -> " + show(y); });
        auto idx = image_maps(identity_map(x), px, px, pdx, pdx);
        t.check(idx.forward == identity_map(px.ordered()) && idx.backward == identity_map(px.ordered()) &&
                    idx.dual_forward == identity_map(pdx.ordered()) && idx.dual_backward == identity_map(pdx.ordered()),
                [&] { return "identity images on " + show(x); });
    }
    if (found == 0) return skipped("no maps were sampled");
    return t.done();
}

}  // namespace

void add_presheaf_laws(std::vector<Law>& out) {
    out.push_back({"presheaf.enumeration.closure", "enumerated weights are exactly the closed diagonal vectors",
                   enumeration});
    out.push_back({"presheaf.powerset.separated", "PX and P+X are valid separated ordered sets", powerset_valid});
    out.push_back({"presheaf.yoneda.lemma", "1(y x, mu) = mu(x) and 1(lambda, y+ x) = lambda(x)", yoneda_lemma});
    out.push_back({"presheaf.yoneda.fully-faithful", "both Yoneda embeddings are fully faithful", yoneda_embedding});
    out.push_back({"presheaf.upper.reversed", "P+X orders copresheaves by reverse inclusion", upper_reversed});
    out.push_back({"presheaf.image.representables", "forward images send representables to representables",
                   image_representables});
}

}  // namespace qorder::laws
