#include "../laws.hpp"

#include "qorder/completion.hpp"
#include "qorder/error.hpp"
#include "qorder/galois.hpp"

#include <algorithm>
#include <map>
#include <type_traits>

namespace qorder::laws {

namespace {

QRelation scalar(const QuantalePtr& q, Elem from, Elem to, Elem v) {
    return QRelation::trusted(QSubset::singleton(q, from), QSubset::singleton(q, to), {v});
}

// Small complete fixtures: PX or P+X of a one- or two-element ordered set.
QOrderedSet complete_fixture(LawContext& c) {
    auto x = small_ordered(c, 2, 12);
    if (c.rng() & 1) return presheaves(x, c.caps).ordered();
    return copresheaves(x, c.caps).ordered();
}

LawOutcome distributor_forms_agree(LawContext& c) {
    Tally t;
    std::size_t positive = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 3);
        auto y = random_ordered(c.q, c.rng, 1, 3);
        auto r = random_relation(x.carrier(), y.carrier(), c.rng, 0.6);
        if (c.rng() & 1) r = distributor_closure(r, x, y);
        auto f = distributor_forms(r, x, y);
        if (f.composite) ++positive;
        auto d = is_distributor(r, x, y);
        t.check(f.agree() && d.holds == f.composite && d.holds != d.witness.has_value(),
                [&] { return show(r) + " between " + show(x) + " and " + show(y); });
    }
    t.note(std::to_string(positive) + " distributors among the samples");
    return t.done();
}

LawOutcome distributor_examples(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 3);
        auto y = random_ordered(c.q, c.rng, 1, 4);
        t.check(is_distributor(x.order(), x, x).holds, [&] { return "order of " + show(x); });
        auto f = random_map(x, y, c.rng);
        if (!f) continue;
        t.check(is_distributor(graph(*f), x, y).holds && is_distributor(cograph(*f), y, x).holds,
                [&] { return "graph of a map " + show(x) + " -> " + show(y); });
        t.check(is_dist_adjoint(graph(*f), cograph(*f), x, y),
                [&] { return "graph not left adjoint to cograph for " + show(x) + " -> " + show(y); });
        t.check(is_dist_adjoint(x.order(), x.order(), x, x), [&] { return "identity on " + show(x); });
    }
    return t.done();
}

LawOutcome adjoint_identities(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 3);
        auto y = random_ordered(c.q, c.rng, 1, 3);
        auto f = random_map(x, y, c.rng);
        if (!f) continue;
        QRelation phi = graph(*f), psi = cograph(*f);
        auto z = random_ordered(c.q, c.rng, 1, 3);
        auto w = random_ordered(c.q, c.rng, 1, 3);
        auto d = [&](const QOrderedSet& a, const QOrderedSet& b) { return random_distributor(a, b, c.rng); };
        auto ctx = [&] { return show(x) + " -> " + show(y) + " via " + show(phi); };
        {
            auto yz = d(y, z), wy = d(w, y);
            t.check(compose(yz, phi) == imp_left(yz, psi) && compose(psi, wy) == imp_right(phi, wy),
                    [&] { return "group 1: " + ctx(); });
        }
        {
            auto wx = d(w, x), zy = d(z, y);
            auto yz = d(y, z), xw = d(x, w);
            t.check(imp_right(compose(phi, wx), zy) == imp_right(wx, compose(psi, zy)) &&
                        imp_left(compose(yz, phi), xw) == imp_left(yz, compose(xw, psi)),
                    [&] { return "group 2: " + ctx(); });
        }
        {
            auto yz = d(y, z), wz = d(w, z);
            auto ww = d(w, w), wy = d(w, y);
            t.check(compose(imp_right(wz, yz), phi) == imp_right(wz, compose(yz, phi)) &&
                        compose(psi, imp_left(wy, ww)) == imp_left(compose(psi, wy), ww),
                    [&] { return "group 3: " + ctx(); });
        }
        {
            auto yz = d(y, z), wz = d(w, z);
            auto wy = d(w, y), wz2 = d(w, z);
            t.check(compose(psi, imp_right(yz, wz)) == imp_right(compose(yz, phi), wz) &&
                        compose(imp_left(wz2, wy), phi) == imp_left(wz2, compose(psi, wy)),
                    [&] { return "group 4: " + ctx(); });
        }
    }
    return t.done();
}

// For membership-preserving pairs the adjunction is the graph equation, and
// pairs satisfying the equation are automatically order-preserving.
LawOutcome map_criterion(LawContext& c) {
    Tally t;
    std::size_t adjoint = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 3);
        auto y = random_ordered(c.q, c.rng, 1, 3);
        auto f = random_map(x, y, c.rng);
        if (!f) continue;
        std::vector<QOrderMap> gs = find_adjoint(*f, Side::right, c.caps);
        if (auto g = random_map(y, x, c.rng)) gs.push_back(*g);
        for (const auto& g : gs) {
            bool gal = is_galois(*f, g);
            if (gal) ++adjoint;
            t.check(gal == graph_criterion(*f, g), [&] { return show(x) + " <-> " + show(y); });
        }
        for (int k = 0; k < 20; ++k) {
            std::vector<std::size_t> fa(x.size()), ga(y.size());
            bool ok = true;
            for (std::size_t a = 0; a < x.size() && ok; ++a) {
                std::vector<std::size_t> opts;
                for (std::size_t b = 0; b < y.size(); ++b)
                    if (y.degree(b) == x.degree(a)) opts.push_back(b);
                ok = !opts.empty();
                if (ok) fa[a] = opts[uniform_index(c.rng, opts.size())];
            }
            for (std::size_t b = 0; b < y.size() && ok; ++b) {
                std::vector<std::size_t> opts;
                for (std::size_t a = 0; a < x.size(); ++a)
                    if (x.degree(a) == y.degree(b)) opts.push_back(a);
                ok = !opts.empty();
                if (ok) ga[b] = opts[uniform_index(c.rng, opts.size())];
            }
            if (!ok) break;
            bool eq = true;
            for (std::size_t a = 0; a < x.size(); ++a)
                for (std::size_t b = 0; b < y.size(); ++b) eq = eq && y.alpha(fa[a], b) == x.alpha(a, ga[b]);
            if (eq)
                t.check(check_map(fa, x, y).order_preserving && check_map(ga, y, x).order_preserving,
                        [&] { return "graph equation without order preservation: " + show(x) + " <-> " + show(y); });
        }
    }
    t.note(std::to_string(adjoint) + " adjoint pairs among the samples");
    return t.done();
}

LawOutcome adjoints_isomorphic(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 3);
        auto y = random_ordered(c.q, c.rng, 1, 3);
        auto f = random_map(x, y, c.rng);
        if (!f) continue;
        for (Side side : {Side::right, Side::left}) {
            auto gs = find_adjoint(*f, side, c.caps);
            for (const auto& g : gs) {
                t.check(side == Side::right ? is_galois(*f, g) : is_galois(g, *f),
                        [&] { return "found map is not adjoint: " + show(x) + " -> " + show(y); });
                for (const auto& h : gs)
                    t.check(map_leq(g, h) && map_leq(h, g),
                            [&] { return "adjoints are not isomorphic: " + show(x) + " -> " + show(y); });
            }
        }
    }
    return t.done();
}

LawOutcome image_adjunctions(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c, 2);
        auto y = small_ordered(c, 3);
        auto f = random_map(x, y, c.rng);
        if (!f) continue;
        auto px = presheaves(x, c.caps), py = presheaves(y, c.caps);
        auto pdx = copresheaves(x, c.caps), pdy = copresheaves(y, c.caps);
        auto im = image_maps(*f, px, py, pdx, pdy);
        t.check(is_galois(im.forward, im.backward) && is_galois(im.dual_backward, im.dual_forward),
                [&] { return show(x) + " -> " + show(y); });
    }
    return t.done();
}

LawOutcome ub_lb(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto p = powersets(x, c.caps);
        auto is = isbell(x.order(), p, p);
        bool ok = is_galois(is.left, is.right);
        for (std::size_t k = 0; k < p.lower.size() && ok; ++k) {
            auto u = ub(x, p.lower.presheaf(k));
            ok = is.left(k) == *p.upper.index_of(u.degree, u.values);
        }
        for (std::size_t k = 0; k < p.upper.size() && ok; ++k) {
            auto l = lb(x, p.upper.copresheaf(k));
            ok = is.right(k) == *p.lower.index_of(l.degree, l.values);
        }
        auto kn = kan(x.order(), p, p);
        auto dk = dual_kan(x.order(), p, p);
        ok = ok && kn.left == identity_map(p.lower.ordered()) && kn.right == identity_map(p.lower.ordered()) &&
             dk.left == identity_map(p.upper.ordered()) && dk.right == identity_map(p.upper.ordered());
        t.check(ok, [&] { return show(x); });
    }
    return t.done();
}

LawOutcome yoneda_left_adjoint(LawContext& c) {
    Tally t;
    std::size_t complete = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto px = presheaves(x, c.caps);
        auto y = yoneda_map(px);
        auto sups = find_adjoint(y, Side::left, c.caps);
        bool is_complete = completeness_report(x, c.caps).complete;
        if (is_complete) ++complete;
        t.check(is_complete == !sups.empty(), [&] { return show(x); });
        for (const auto& g : sups)
            for (std::size_t k = 0; k < px.size(); ++k) {
                auto s = sup(x, px.presheaf(k));
                t.check(std::find(s.begin(), s.end(), g(k)) != s.end(),
                        [&] { return "left adjoint of y is not sup at " + px.ordered().label(k) + " in " + show(x); });
            }
    }
    t.note(std::to_string(complete) + " complete fixtures");
    return t.done();
}

// X has all tensors u (x) x at x iff y |-> alpha(x,y), X -> P1_|x|, has a left adjoint.
LawOutcome tensor_left_adjoint(LawContext& c) {
    Tally t;
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        for (std::size_t a = 0; a < x.size(); ++a) {
            auto one = QOrderedSet::discrete(QSubset::singleton(c.q, x.degree(a)));
            auto p1 = presheaves(one, c.caps);
            std::vector<std::size_t> f(x.size());
            for (std::size_t b = 0; b < x.size(); ++b) f[b] = *p1.index_of(x.degree(b), {x.alpha(a, b)});
            QOrderMap rep(x, p1.ordered(), f);
            bool tensors = true;
            for (Elem d = 0; d < n && tensors; ++d)
                for (Elem u : q.diagonal(x.degree(a), d).elements())
                    if (tensor(x, u, a, d).empty()) tensors = false;
            t.check(tensors == !find_adjoint(rep, Side::left, c.caps).empty(),
                    [&] { return "at " + x.label(a) + " in " + show(x); });
        }
    }
    return t.done();
}

template <class Report>
LawOutcome adjoint_report(LawContext& c, Report (*make)(const QOrderMap&, const Caps&)) {
    Tally t;
    std::size_t positive = 0, negative = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = complete_fixture(c);
        auto y = (c.rng() & 1) ? complete_fixture(c) : small_ordered(c, 3);
        auto f = random_map(x, y, c.rng, 50);
        if (!f) continue;
        auto r = make(*f, c.caps);
        bool adj;
        if constexpr (std::is_same_v<Report, LeftAdjointReport>)
            adj = r.left_adjoint;
        else
            adj = r.right_adjoint;
        (adj ? positive : negative)++;
        t.check(r.consistent(), [&] { return show(x) + " -> " + show(y); });
    }
    t.note(std::to_string(positive) + " adjoint and " + std::to_string(negative) + " non-adjoint maps");
    return t.done();
}

LawOutcome left_adjoint_report_law(LawContext& c) { return adjoint_report(c, &left_adjoint_report); }
LawOutcome right_adjoint_report_law(LawContext& c) { return adjoint_report(c, &right_adjoint_report); }

struct Pairs {
    InducedPair is, kn, dk;
};

Pairs induced(const QRelation& phi, const Powersets& px, const Powersets& py) {
    return Pairs{isbell(phi, px, py), kan(phi, px, py), dual_kan(phi, px, py)};
}

LawOutcome induced_pairs(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c, 2, 60);
        auto y = small_ordered(c, 2, 60);
        auto px = powersets(x, c.caps), py = powersets(y, c.caps);
        QRelation phi = random_distributor(x, y, c.rng);
        auto p = induced(phi, px, py);
        auto what = [&] { return show(phi) + " between " + show(x) + " and " + show(y); };
        t.check(is_galois(p.is.left, p.is.right) && is_galois(p.kn.left, p.kn.right) &&
                    is_galois(p.dk.left, p.dk.right),
                [&] { return "not Galois: " + what(); });
        auto yx = yoneda_map(px.lower), dx = co_yoneda_map(px.upper);
        auto yy = yoneda_map(py.lower), dy = co_yoneda_map(py.upper);
        for (std::size_t a = 0; a < x.size(); ++a) {
            auto row = phi.row(a);
            std::size_t hat = py.upper.index_of(row);
            t.check(p.is.left(yx(a)) == hat && p.dk.right(dx(a)) == hat, [&] { return "row identity: " + what(); });
        }
        for (std::size_t b = 0; b < y.size(); ++b) {
            std::size_t tilde = px.lower.index_of(phi.col(b));
            t.check(p.is.right(dy(b)) == tilde && p.kn.left(yy(b)) == tilde,
                    [&] { return "column identity: " + what(); });
        }
    }
    return t.done();
}

LawOutcome induced_round_trip(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c, 2, 60);
        auto y = small_ordered(c, 2, 60);
        auto px = powersets(x, c.caps), py = powersets(y, c.caps);
        QRelation phi = random_distributor(x, y, c.rng);
        auto p = induced(phi, px, py);
        for (const InducedPair* pair : {&p.is, &p.kn, &p.dk}) {
            QRelation back = dist_from_pair(*pair);
            auto again = induced(back, px, py);
            const InducedPair& q2 = pair->kind == PairKind::polarity   ? again.is
                                    : pair->kind == PairKind::axiality ? again.kn
                                                                       : again.dk;
            auto rights = find_adjoint(pair->left, Side::right, c.caps);
            t.check(back == phi && q2.left == pair->left && q2.right == pair->right && rights.size() == 1 &&
                        rights.front() == pair->right,
                    [&] { return std::string(to_string(pair->kind)) + " of " + show(phi); });
        }
    }
    return t.done();
}

LawOutcome induced_order(LawContext& c) {
    Tally t;
    const auto& q = *c.q;
    auto pointwise = [&](const PowersetOrder& p, const QOrderMap& f, const QOrderMap& g) {
        for (std::size_t a = 0; a < f.source().size(); ++a)
            for (std::size_t k = 0; k < p.values(f(a)).size(); ++k)
                if (!q.leq(p.values(f(a))[k], p.values(g(a))[k])) return false;
        return true;
    };
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c, 2, 60);
        auto y = small_ordered(c, 2, 60);
        auto px = powersets(x, c.caps), py = powersets(y, c.caps);
        QRelation phi = random_distributor(x, y, c.rng);
        QRelation phi2 = random_distributor(x, y, c.rng);
        if (c.rng() & 1) phi2 = hom_join(phi, phi2);
        auto a = induced(phi, px, py), b = induced(phi2, px, py);
        bool below = leq(phi, phi2);
        t.check(below == pointwise(py.upper, a.is.left, b.is.left) && below == pointwise(px.lower, a.kn.left, b.kn.left),
                [&] { return show(phi) + " vs " + show(phi2); });
        bool same = phi == phi2;
        t.check(same == (a.is.left == b.is.left) && same == (a.is.right == b.is.right) &&
                    same == (a.kn.left == b.kn.left) && same == (a.kn.right == b.kn.right) &&
                    same == (a.dk.left == b.dk.left) && same == (a.dk.right == b.dk.right),
                [&] { return "injectivity: " + show(phi) + " vs " + show(phi2); });
    }
    return t.done();
}

// The left Kan component commutes with scalar composition.
LawOutcome kan_tensor(LawContext& c) {
    Tally t;
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c, 2, 60);
        auto y = small_ordered(c, 2, 60);
        auto px = powersets(x, c.caps), py = powersets(y, c.caps);
        QRelation phi = random_distributor(x, y, c.rng);
        auto kn = kan(phi, px, py);
        for (std::size_t k = 0; k < py.lower.size(); ++k) {
            const Elem p = py.lower.degree(k);
            for (Elem d = 0; d < n; ++d)
                for (Elem u : q.diagonal(p, d).elements()) {
                    QRelation s = scalar(c.q, p, d, u);
                    std::size_t lhs = kn.left(py.lower.index_of(compose(s, py.lower.relation(k))));
                    std::size_t rhs = px.lower.index_of(compose(s, px.lower.relation(kn.left(k))));
                    t.check(lhs == rhs, [&] { return show(phi) + " at " + py.lower.ordered().label(k); });
                }
        }
    }
    return t.done();
}

LawOutcome lift(LawContext& c) {
    Tally t;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c, 2, 60);
        auto y = small_ordered(c, 2, 60);
        auto f = random_map(x, y, c.rng);
        if (!f) continue;
        auto gs = find_adjoint(*f, Side::right, c.caps);
        if (gs.empty()) continue;
        ++pairs;
        const auto& g = gs.front();
        auto px = powersets(x, c.caps), py = powersets(y, c.caps);
        auto l = lift_galois(*f, g, px, py);
        auto imf = image_maps(*f, px.lower, py.lower, px.upper, py.upper);
        auto img = image_maps(g, py.lower, px.lower, py.upper, px.upper);
        auto yx = yoneda_map(px.lower);
        auto dy = co_yoneda_map(py.upper);
        bool ok = graph(*f) == cograph(g) && is_galois(l.polarity.left, l.polarity.right) &&
                  is_galois(l.axiality.left, l.axiality.right) && is_galois(l.dual_axiality.left, l.dual_axiality.right) &&
                  l.axiality.left == imf.backward && l.axiality.left == img.forward;
        for (std::size_t a = 0; a < x.size(); ++a) ok = ok && l.polarity.left(yx(a)) == dy((*f)(a));
        t.check(ok, [&] { return show(x) + " -> " + show(y); });
    }
    t.note(std::to_string(pairs) + " adjoint pairs lifted");
    if (pairs == 0) return skipped("no adjoint pairs were sampled");
    return t.done();
}

LawOutcome macneille_law(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < heavy(c); ++i) {
        auto x = small_ordered(c, 2, 40);
        auto m = macneille(x, c.caps);
        auto px = presheaves(x, c.caps);
        auto y = yoneda_map(px);
        std::map<std::size_t, std::size_t> pos;
        for (std::size_t k = 0; k < m.indices.size(); ++k) pos[m.indices[k]] = k;
        std::vector<std::size_t> emb(x.size());
        bool lands = true;
        for (std::size_t a = 0; a < x.size(); ++a) {
            auto it = pos.find(y(a));
            lands = lands && it != pos.end();
            if (lands) emb[a] = it->second;
        }
        t.check(lands && check_map(emb, x, m.ordered).fully_faithful, [&] { return "embedding of " + show(x); });
        if (powerset_candidates(m.ordered, Variance::lower) > 20000 ||
            powerset_candidates(m.ordered, Variance::upper) > 20000)
            continue;
        auto r = completeness_report(m.ordered, c.caps);
        t.check(is_separated(m.ordered) && r.complete && r.consistent(), [&] { return "completion of " + show(x); });
    }
    return t.done();
}

LawOutcome concepts_complete(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < heavy(c); ++i) {
        auto objs = random_subset(c.q, c.rng, 1, 2);
        auto attrs = random_subset(c.q, c.rng, 1, 2);
        auto ctx = random_relation(objs, attrs, c.rng, 0.6);
        for (ConceptMode mode : {ConceptMode::fca, ConceptMode::rst}) {
            auto cl = concept_lattice(ctx, mode, c.caps);
            const auto& o = cl.extents.ordered;
            if (powerset_candidates(o, Variance::lower) > 20000 || powerset_candidates(o, Variance::upper) > 20000)
                continue;
            auto r = completeness_report(o, c.caps);
            t.check(r.complete && r.consistent(),
                    [&] { return std::string(mode == ConceptMode::fca ? "fca " : "rst ") + show(ctx); });
        }
    }
    return t.done();
}

LawOutcome cauchy(LawContext& c) {
    Tally t;
    std::size_t cauchy_count = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = small_ordered(c);
        auto p = powersets(x, c.caps);
        for (std::size_t a = 0; a < x.size(); ++a)
            t.check(!right_adjoint_witnesses(yoneda(x, a), p.upper).empty(),
                    [&] { return "representable at " + x.label(a) + " is not a right adjoint in " + show(x); });
        auto r = cauchy_report(x, c.caps);
        if (r.cauchy_complete) ++cauchy_count;
        if (completeness_report(x, c.caps).complete)
            t.check(r.cauchy_complete, [&] { return "complete but not Cauchy complete: " + show(x); });
    }
    t.note(std::to_string(cauchy_count) + " Cauchy complete fixtures");
    return t.done();
}

// Over bool2 with full support, adjoint distributors are exactly graph and
// cograph of an order-preserving map.
LawOutcome crisp_adjoint_distributors(LawContext& c) {
    const auto& q = *c.q;
    if (q.size() != 2) return skipped("only meaningful over the two-element chain");
    Tally t;
    const Elem one = q.top();
    auto crisp = [&](std::size_t n) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
        QSubset s(c.q, labels, std::vector<Elem>(n, one));
        return make_ordered(s, preorder_closure(random_relation(s, s, c.rng, 0.4)).entries());
    };
    auto all_distributors = [&](const QOrderedSet& a, const QOrderedSet& b) {
        std::vector<QRelation> out;
        const std::size_t cells = a.size() * b.size();
        for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
            std::vector<Elem> e(cells);
            for (std::size_t k = 0; k < cells; ++k) e[k] = ((bits >> k) & 1u) ? one : q.bottom();
            QRelation r(a.carrier(), b.carrier(), std::move(e));
            if (is_distributor(r, a, b).holds) out.push_back(std::move(r));
        }
        return out;
    };
    for (std::size_t i = 0; i < heavy(c); ++i) {
        auto x = crisp(1 + uniform_index(c.rng, 3));
        auto y = crisp(1 + uniform_index(c.rng, 3));
        std::vector<std::pair<QRelation, QRelation>> from_maps;
        std::vector<std::size_t> f(x.size(), 0);
        for (;;) {
            if (check_map(f, x, y).order_preserving) {
                QOrderMap m(x, y, f);
                from_maps.emplace_back(graph(m), cograph(m));
            }
            std::size_t k = x.size();
            while (k > 0 && f[k - 1] + 1 == y.size()) f[--k] = 0;
            if (k == 0) break;
            ++f[k - 1];
        }
        auto xy = all_distributors(x, y);
        auto yx = all_distributors(y, x);
        for (const auto& phi : xy)
            for (const auto& psi : yx) {
                bool adj = is_dist_adjoint(phi, psi, x, y);
                bool graph_pair = std::any_of(from_maps.begin(), from_maps.end(),
                                              [&](const auto& p) { return p.first == phi && p.second == psi; });
                t.check(adj == graph_pair, [&] { return show(phi) + " and " + show(psi); });
            }
    }
    return t.done();
}

}  // namespace

void add_galois_laws(std::vector<Law>& out) {
    out.push_back({"galois.distributor.forms", "the five distributor conditions agree", distributor_forms_agree});
    out.push_back({"galois.distributor.examples", "orders, graphs and cographs are distributors; graph -| cograph",
                   distributor_examples});
    out.push_back({"galois.distributor.adjoint-identities", "identities of an adjoint pair of distributors",
                   adjoint_identities});
    out.push_back({"galois.distributor.crisp-adjoints", "crisp adjoint distributors come from order-preserving maps",
                   crisp_adjoint_distributors});
    out.push_back({"galois.maps.criterion", "f -| g iff the graph equation holds", map_criterion});
    out.push_back({"galois.maps.adjoints-isomorphic", "every found adjoint is adjoint and they are isomorphic",
                   adjoints_isomorphic});
    out.push_back({"galois.maps.image-adjunctions", "forward -| backward and dual backward -| dual forward images",
                   image_adjunctions});
    out.push_back({"galois.maps.ub-lb", "the identity distributor induces (ub, lb) and identity Kan pairs", ub_lb});
    out.push_back({"galois.maps.yoneda-left-adjoint", "X is complete iff y has a left adjoint, which is sup",
                   yoneda_left_adjoint});
    out.push_back({"galois.maps.tensor-left-adjoint", "tensors at x exist iff alpha(x,-) has a left adjoint",
                   tensor_left_adjoint});
    out.push_back({"galois.report.left-adjoint", "left adjoint, sup-preserving, underlying adjoint with tensors agree",
                   left_adjoint_report_law});
    out.push_back({"galois.report.right-adjoint",
                   "right adjoint, inf-preserving, underlying adjoint with cotensors agree", right_adjoint_report_law});
    out.push_back({"galois.induced.pairs", "induced pairs are Galois and recover rows and columns", induced_pairs});
    out.push_back({"galois.induced.round-trip", "distributor to pair to distributor is the identity, and back",
                   induced_round_trip});
    out.push_back({"galois.induced.order", "the constructions are injective and order isomorphisms", induced_order});
    out.push_back({"galois.induced.kan-tensor", "the left Kan component commutes with scalars", kan_tensor});
    out.push_back({"galois.lift", "adjoint maps lift to the three induced pairs", lift});
    out.push_back({"galois.macneille", "the completion is separated, complete and receives X fully faithfully",
                   macneille_law});
    out.push_back({"galois.concepts.complete", "concept lattices are complete", concepts_complete});
    out.push_back({"galois.cauchy", "representables are right adjoints; complete implies Cauchy complete", cauchy});
}

}  // namespace qorder::laws
