#include "../laws.hpp"

#include "qorder/completion.hpp"

#include <algorithm>

namespace qorder::laws {

namespace {

QRelation scalar(const QuantalePtr& q, Elem from, Elem to, Elem v) {
    return QRelation::trusted(QSubset::singleton(q, from), QSubset::singleton(q, to), {v});
}

bool isomorphic(const std::vector<bool>& le, std::size_t n, std::size_t a, std::size_t b) {
    return le[a * n + b] && le[b * n + a];
}

LawOutcome sup_is_inf_of_ub(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto px = presheaves(x, c.caps);
        auto pdx = copresheaves(x, c.caps);
        for (std::size_t k = 0; k < px.size(); ++k) {
            auto mu = px.presheaf(k);
            t.check(sup(x, mu) == inf(x, ub(x, mu)), [&] { return px.ordered().label(k) + " over " + show(x); });
        }
        for (std::size_t k = 0; k < pdx.size(); ++k) {
            auto lam = pdx.copresheaf(k);
            t.check(inf(x, lam) == sup(x, lb(x, lam)), [&] { return pdx.ordered().label(k) + " over " + show(x); });
        }
    }
    return t.done();
}

LawOutcome witnesses(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        const std::size_t n = x.size();
        auto le = underlying_preorder(x);
        bool separated = is_separated(x);
        auto px = presheaves(x, c.caps);
        for (std::size_t k = 0; k < px.size(); ++k) {
            auto s = sup(x, px.presheaf(k));
            t.check(!separated || s.size() <= 1, [&] { return "several suprema in a separated set: " + show(x); });
            for (std::size_t a : s)
                for (std::size_t b : s)
                    t.check(isomorphic(le, n, a, b), [&] { return "non-isomorphic suprema in " + show(x); });
        }
        for (std::size_t a = 0; a < n; ++a) {
            auto s = sup(x, yoneda(x, a));
            t.check(std::find(s.begin(), s.end(), a) != s.end(),
                    [&] { return x.label(a) + " is not a supremum of its representable in " + show(x); });
        }
    }
    return t.done();
}

LawOutcome tensor_as_sup(LawContext& c) {
    Tally t;
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        for (std::size_t a = 0; a < x.size(); ++a)
            for (Elem d = 0; d < n; ++d) {
                for (Elem u : q.diagonal(x.degree(a), d).elements()) {
                    QRelation w = compose(scalar(c.q, x.degree(a), d, u), yoneda(x, a).relation());
                    t.check(tensor(x, u, a, d) == sup(x, Presheaf{x, d, w.entries()}),
                            [&] { return q.label(u) + " (x) " + x.label(a) + " in " + show(x); });
                }
                for (Elem v : q.diagonal(d, x.degree(a)).elements()) {
                    QRelation w = compose(co_yoneda(x, a).relation(), scalar(c.q, d, x.degree(a), v));
                    t.check(cotensor(x, v, a, d) == inf(x, Copresheaf{x, d, w.entries()}),
                            [&] { return q.label(v) + " -> " + x.label(a) + " in " + show(x); });
                }
            }
    }
    return t.done();
}

LawOutcome characterization(LawContext& c) {
    Tally t;
    std::size_t complete = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto r = completeness_report(x, c.caps);
        if (r.complete) ++complete;
        t.check(r.consistent(), [&] {
            return show(x) + ": complete=" + std::to_string(r.complete) + " tensored=" + std::to_string(r.tensored) +
                   " cotensored=" + std::to_string(r.cotensored) + " order_complete=" + std::to_string(r.order_complete);
        });
    }
    t.note(std::to_string(complete) + " complete fixtures");
    return t.done();
}

// Suprema, infima, tensors and cotensors in PX and P+X have closed forms.
LawOutcome powerset_closed_forms(LawContext& c) {
    Tally t;
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    for (std::size_t i = 0; i < heavy(c); ++i) {
        auto x = small_ordered(c, 2, 60);
        auto px = presheaves(x, c.caps);
        auto pdx = copresheaves(x, c.caps);
        const auto& P = px.ordered();
        const auto& D = pdx.ordered();
        QRelation ygraph = graph(yoneda_map(px));
        QRelation dcograph = cograph(co_yoneda_map(pdx));
        for (std::size_t s = 0; s < medium(c); ++s) {
            auto d = static_cast<Elem>(uniform_index(c.rng, n));
            auto one = QSubset::singleton(c.q, d);
            QRelation theta = compose(random_relation(P.carrier(), one, c.rng, 0.5), P.order());
            QRelation lam = compose(P.order(), random_relation(one, P.carrier(), c.rng, 0.5));
            auto sp = sup(P, Presheaf{P, d, theta.entries()});
            auto ip = inf(P, Copresheaf{P, d, lam.entries()});
            t.check(sp == std::vector<std::size_t>{px.index_of(compose(theta, ygraph))} &&
                        ip == std::vector<std::size_t>{px.index_of(imp_right(lam, ygraph))},
                    [&] { return "in PX of " + show(x) + ": " + show(theta) + " / " + show(lam); });
            QRelation theta2 = compose(random_relation(D.carrier(), one, c.rng, 0.5), D.order());
            QRelation lam2 = compose(D.order(), random_relation(one, D.carrier(), c.rng, 0.5));
            auto sd = sup(D, Presheaf{D, d, theta2.entries()});
            auto id = inf(D, Copresheaf{D, d, lam2.entries()});
            t.check(sd == std::vector<std::size_t>{pdx.index_of(imp_left(dcograph, theta2))} &&
                        id == std::vector<std::size_t>{pdx.index_of(compose(dcograph, lam2))},
                    [&] { return "in P+X of " + show(x) + ": " + show(theta2) + " / " + show(lam2); });
        }
        for (std::size_t k = 0; k < px.size(); ++k) {
            const Elem p = px.degree(k);
            for (Elem d = 0; d < n; ++d) {
                for (Elem u : q.diagonal(p, d).elements())
                    t.check(tensor(P, u, k, d) ==
                                std::vector<std::size_t>{px.index_of(compose(scalar(c.q, p, d, u), px.relation(k)))},
                            [&] { return q.label(u) + " (x) " + P.label(k) + " in PX of " + show(x); });
                for (Elem v : q.diagonal(d, p).elements())
                    t.check(cotensor(P, v, k, d) ==
                                std::vector<std::size_t>{px.index_of(imp_right(scalar(c.q, d, p, v), px.relation(k)))},
                            [&] { return q.label(v) + " -> " + P.label(k) + " in PX of " + show(x); });
            }
        }
        for (std::size_t k = 0; k < pdx.size(); ++k) {
            const Elem p = pdx.degree(k);
            for (Elem d = 0; d < n; ++d) {
                for (Elem u : q.diagonal(p, d).elements())
                    t.check(tensor(D, u, k, d) ==
                                std::vector<std::size_t>{pdx.index_of(imp_left(pdx.relation(k), scalar(c.q, p, d, u)))},
                            [&] { return q.label(u) + " (x) " + D.label(k) + " in P+X of " + show(x); });
                for (Elem v : q.diagonal(d, p).elements())
                    t.check(cotensor(D, v, k, d) ==
                                std::vector<std::size_t>{pdx.index_of(compose(pdx.relation(k), scalar(c.q, d, p, v)))},
                            [&] { return q.label(v) + " -> " + D.label(k) + " in P+X of " + show(x); });
            }
        }
    }
    return t.done();
}

// Whole-report check for powersets small enough to enumerate their own powersets.
LawOutcome powerset_complete(LawContext& c) {
    Tally t;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < heavy(c); ++i) {
        auto x = small_ordered(c, 2, 40);
        for (const auto& p : {presheaves(x, c.caps), copresheaves(x, c.caps)}) {
            const auto& P = p.ordered();
            if (powerset_candidates(P, Variance::lower) > 20000 || powerset_candidates(P, Variance::upper) > 20000)
                continue;
            ++checked;
            auto r = completeness_report(P, c.caps);
            t.check(is_separated(P) && r.complete && r.cocomplete && r.tensored && r.cotensored && r.order_complete,
                    [&] { return std::string(p.variance() == Variance::lower ? "PX" : "P+X") + " of " + show(x); });
        }
    }
    if (checked == 0) return skipped("no powerset small enough for a full report");
    return t.done();
}

LawOutcome sup_preserving_identity(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto id = identity_map(x);
        t.check(is_sup_preserving(id, c.caps).holds && is_inf_preserving(id, c.caps).holds, [&] { return show(x); });
    }
    return t.done();
}

}  // namespace

void add_completion_laws(std::vector<Law>& out) {
    out.push_back({"completion.sup.inf-of-upper-bounds", "sup mu = inf ub mu and inf lambda = sup lb lambda",
                   sup_is_inf_of_ub});
    out.push_back({"completion.sup.witnesses", "suprema are unique up to isomorphism; x is a sup of y x", witnesses});
    out.push_back({"completion.tensor.as-sup", "u (x) x = sup(u o y x) and v -> x = inf(y+ x o v)", tensor_as_sup});
    out.push_back({"completion.characterization",
                   "complete iff tensored, cotensored and order-complete; complete iff cocomplete", characterization});
    out.push_back({"completion.powerset.closed-forms", "suprema, infima, tensors and cotensors in PX and P+X",
                   powerset_closed_forms});
    out.push_back({"completion.powerset.complete", "PX and P+X are separated, tensored, cotensored and complete",
                   powerset_complete});
    out.push_back({"completion.preservation.identity", "identity maps preserve suprema and infima",
                   sup_preserving_identity});
}

}  // namespace qorder::laws
