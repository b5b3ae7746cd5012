#include "../laws.hpp"

#include <array>

namespace qorder::laws {

namespace {

struct Gen {
    LawContext& c;
    QSubset set() { return random_subset(c.q, c.rng, 1, 3); }
    QRelation rel(const QSubset& x, const QSubset& y) {
        static constexpr std::array<double, 3> density{0.4, 0.7, 1.0};
        return random_relation(x, y, c.rng, density[uniform_index(c.rng, density.size())]);
    }
    std::vector<QRelation> family(const QSubset& x, const QSubset& y) {
        std::vector<QRelation> out;
        std::size_t k = uniform_index(c.rng, 4);  // the empty family is included
        for (std::size_t i = 0; i < k; ++i) out.push_back(rel(x, y));
        return out;
    }
};

std::string shows(std::initializer_list<const QRelation*> rs) {
    std::string out;
    for (const auto* r : rs) out += (out.empty() ? "" : " | ") + show(*r);
    return out;
}

LawOutcome associative(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set(), w = g.set();
        auto phi = g.rel(x, y), psi = g.rel(y, z), xi = g.rel(z, w);
        t.check(compose(xi, compose(psi, phi)) == compose(compose(xi, psi), phi),
                [&] { return shows({&phi, &psi, &xi}); });
    }
    return t.done();
}

LawOutcome identity_law(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set();
        auto phi = g.rel(x, y);
        t.check(compose(identity(y), phi) == phi && compose(phi, identity(x)) == phi, [&] { return show(phi); });
    }
    return t.done();
}

LawOutcome join_preserving(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto phis = g.family(x, y);
        auto psis = g.family(y, z);
        auto phi = g.rel(x, y);
        auto psi = g.rel(y, z);
        std::vector<QRelation> left, right;
        for (const auto& p : phis) left.push_back(compose(psi, p));
        for (const auto& p : psis) right.push_back(compose(p, phi));
        bool ok = compose(psi, hom_join(phis, x, y)) == hom_join(left, x, z) &&
                  compose(hom_join(psis, y, z), phi) == hom_join(right, x, z);
        t.check(ok, [&] { return shows({&phi, &psi}) + " with families of " + std::to_string(phis.size()) + " and " +
                                 std::to_string(psis.size()); });
    }
    return t.done();
}

// (psi(y,z)/|y|) & phi(x,y) = psi(y,z) & (|y| \ phi(x,y)) for every entry.
LawOutcome residual_forms(LawContext& c) {
    Gen g{c};
    const auto& q = *c.q;
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto phi = g.rel(x, y), psi = g.rel(y, z);
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = 0; b < y.size(); ++b)
                for (std::size_t d = 0; d < z.size(); ++d) {
                    Elem p = y.degree(b);
                    t.check(q.mul(q.res_left(psi(b, d), p), phi(a, b)) == q.mul(psi(b, d), q.res_right(p, phi(a, b))),
                            [&] { return shows({&phi, &psi}); });
                }
    }
    return t.done();
}

// The single-entry relation with value u at (y,z).
QRelation point(const QSubset& y, const QSubset& z, std::size_t a, std::size_t b, Elem u) {
    std::vector<Elem> e(y.size() * z.size(), y.quantale().bottom());
    e[a * z.size() + b] = u;
    return QRelation::trusted(y, z, std::move(e));
}

// xi <- phi is the largest psi with psi o phi <= xi, found by scanning each
// entry over its whole diagonal set (composition is join-preserving, so the
// condition splits into single entries).
LawOutcome implication_largest(LawContext& c) {
    Gen g{c};
    const auto& q = *c.q;
    Tally t;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto phi = g.rel(x, y), xi = g.rel(x, z);
        auto il = imp_left(xi, phi);
        for (std::size_t a = 0; a < y.size(); ++a)
            for (std::size_t b = 0; b < z.size(); ++b)
                for (Elem u : q.diagonal(y.degree(a), z.degree(b)).elements()) {
                    bool fits = leq(compose(point(y, z, a, b, u), phi), xi);
                    t.check(fits == q.leq(u, il(a, b)), [&] { return "left: " + shows({&xi, &phi}); });
                }
        auto psi = g.rel(y, z);
        auto ir = imp_right(psi, xi);
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = 0; b < y.size(); ++b)
                for (Elem u : q.diagonal(x.degree(a), y.degree(b)).elements()) {
                    bool fits = leq(compose(psi, point(x, y, a, b, u)), xi);
                    t.check(fits == q.leq(u, ir(a, b)), [&] { return "right: " + shows({&psi, &xi}); });
                }
    }
    return t.done();
}

LawOutcome calc_adjunction(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto phi = g.rel(x, y), psi = g.rel(y, z);
        auto xi = g.rel(x, z);
        if (c.rng() & 1) xi = hom_join(xi, compose(psi, phi));
        bool a = leq(compose(psi, phi), xi);
        t.check(a == leq(psi, imp_left(xi, phi)) && a == leq(phi, imp_right(psi, xi)),
                [&] { return shows({&phi, &psi, &xi}); });
    }
    return t.done();
}

LawOutcome calc_meets(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto phi = g.rel(x, y), psi = g.rel(y, z);
        auto xis = g.family(x, z);
        std::vector<QRelation> l, r;
        for (const auto& xi : xis) {
            l.push_back(imp_left(xi, phi));
            r.push_back(imp_right(psi, xi));
        }
        auto m = hom_meet(xis, x, z);
        t.check(imp_left(m, phi) == hom_meet(l, y, z) && imp_right(psi, m) == hom_meet(r, x, y),
                [&] { return shows({&phi, &psi}) + " with " + std::to_string(xis.size()) + " relations xi"; });
    }
    return t.done();
}

LawOutcome calc_joins(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto xi = g.rel(x, z);
        auto phis = g.family(x, y);
        auto psis = g.family(y, z);
        std::vector<QRelation> l, r;
        for (const auto& p : phis) l.push_back(imp_left(xi, p));
        for (const auto& p : psis) r.push_back(imp_right(p, xi));
        t.check(imp_left(xi, hom_join(phis, x, y)) == hom_meet(l, y, z) &&
                    imp_right(hom_join(psis, y, z), xi) == hom_meet(r, x, y),
                [&] { return show(xi) + " with families of " + std::to_string(phis.size()) + " and " +
                             std::to_string(psis.size()); });
    }
    return t.done();
}

LawOutcome calc_composition(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set(), w = g.set();
        {
            auto phi = g.rel(x, y), psi = g.rel(x, z), xi = g.rel(x, w);
            t.check(leq(compose(imp_left(xi, psi), imp_left(psi, phi)), imp_left(xi, phi)),
                    [&] { return "left: " + shows({&phi, &psi, &xi}); });
        }
        {
            auto phi = g.rel(w, z), psi = g.rel(y, z), xi = g.rel(x, z);
            t.check(leq(compose(imp_right(phi, psi), imp_right(psi, xi)), imp_right(phi, xi)),
                    [&] { return "right: " + shows({&phi, &psi, &xi}); });
        }
    }
    return t.done();
}

LawOutcome calc_currying(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set(), w = g.set();
        {
            auto phi = g.rel(x, y), psi = g.rel(y, z), xi = g.rel(x, w);
            t.check(imp_left(imp_left(xi, phi), psi) == imp_left(xi, compose(psi, phi)),
                    [&] { return "left: " + shows({&phi, &psi, &xi}); });
        }
        {
            auto phi = g.rel(w, y), psi = g.rel(y, z), xi = g.rel(x, z);
            t.check(imp_right(phi, imp_right(psi, xi)) == imp_right(compose(psi, phi), xi),
                    [&] { return "right: " + shows({&phi, &psi, &xi}); });
        }
    }
    return t.done();
}

LawOutcome calc_interchange(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), a = g.set(), b = g.set();
        auto xi = g.rel(x, b), psi = g.rel(a, b), phi = g.rel(x, y);
        t.check(imp_left(imp_right(psi, xi), phi) == imp_right(psi, imp_left(xi, phi)),
                [&] { return shows({&phi, &psi, &xi}); });
    }
    return t.done();
}

LawOutcome calc_counit(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto phi = g.rel(x, y), psi = g.rel(y, z), xi = g.rel(x, z);
        t.check(leq(compose(imp_left(xi, phi), phi), xi) && leq(compose(psi, imp_right(psi, xi)), xi),
                [&] { return shows({&phi, &psi, &xi}); });
    }
    return t.done();
}

LawOutcome calc_strength(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set(), w = g.set();
        {
            auto phi = g.rel(x, y), psi = g.rel(x, z), xi = g.rel(z, w);
            t.check(leq(compose(xi, imp_left(psi, phi)), imp_left(compose(xi, psi), phi)),
                    [&] { return "left: " + shows({&phi, &psi, &xi}); });
        }
        {
            auto phi = g.rel(x, y), psi = g.rel(z, w), xi = g.rel(y, w);
            t.check(leq(compose(imp_right(psi, xi), phi), imp_right(psi, compose(xi, phi))),
                    [&] { return "right: " + shows({&phi, &psi, &xi}); });
        }
    }
    return t.done();
}

// Composition is the join over y of row-by-column composites; implications
// are meets of implications between rows (left) or columns (right).
LawOutcome decomposition(LawContext& c) {
    Gen g{c};
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = g.set(), y = g.set(), z = g.set();
        auto phi = g.rel(x, y), psi = g.rel(y, z), xi = g.rel(x, z);
        std::vector<QRelation> parts, lefts, rights;
        for (std::size_t b = 0; b < y.size(); ++b) parts.push_back(compose(psi.row(b), phi.col(b)));
        for (std::size_t a = 0; a < x.size(); ++a) lefts.push_back(imp_left(xi.row(a), phi.row(a)));
        for (std::size_t d = 0; d < z.size(); ++d) rights.push_back(imp_right(psi.col(d), xi.col(d)));
        t.check(compose(psi, phi) == hom_join(parts, x, z) && imp_left(xi, phi) == hom_meet(lefts, y, z) &&
                    imp_right(psi, xi) == hom_meet(rights, x, y),
                [&] { return shows({&phi, &psi, &xi}); });
    }
    return t.done();
}

QRelation scalar(const QuantalePtr& q, Elem from, Elem to, Elem v) {
    return QRelation::trusted(QSubset::singleton(q, from), QSubset::singleton(q, to), {v});
}

// For u in D(p,q), v in D(q,r), w in D(p,r):
//   w <- u = floor of w/(q\u) in D(q,r),  v -> w = floor of (v/q)\w in D(p,q).
LawOutcome singleton_formula(LawContext& c) {
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    Tally t;
    for (Elem p = 0; p < n; ++p)
        for (Elem m = 0; m < n; ++m)
            for (Elem r = 0; r < n; ++r)
                for (Elem w : q.diagonal(p, r).elements()) {
                    for (Elem u : q.diagonal(p, m).elements())
                        t.check(imp_left(scalar(c.q, p, r, w), scalar(c.q, p, m, u))(0, 0) ==
                                    q.diagonal_floor(m, r, q.res_left(w, q.res_right(m, u))),
                                [&] { return "w <- u with w = " + q.label(w) + ", u = " + q.label(u); });
                    for (Elem v : q.diagonal(m, r).elements())
                        t.check(imp_right(scalar(c.q, m, r, v), scalar(c.q, p, r, w))(0, 0) ==
                                    q.diagonal_floor(p, m, q.res_right(q.res_left(v, m), w)),
                                [&] { return "v -> w with v = " + q.label(v) + ", w = " + q.label(w); });
                }
    return t.done();
}

// Exhaustive search for a singleton instance where the relational implication
// differs from residuation in Q. Both outcomes pass; the note records which,
// preferring witnesses whose memberships are all above bottom.
LawOutcome residuation_gap(LawContext& c) {
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    LawOutcome out;
    std::string left[2], right[2];
    std::size_t left_count = 0, right_count = 0;
    const Elem bot = q.bottom();
    for (Elem p = 0; p < n; ++p)
        for (Elem m = 0; m < n; ++m)
            for (Elem r = 0; r < n; ++r) {
                const int proper = p != bot && m != bot && r != bot;
                for (Elem w : q.diagonal(p, r).elements()) {
                    for (Elem u : q.diagonal(p, m).elements()) {
                        ++out.instances;
                        Elem il = imp_left(scalar(c.q, p, r, w), scalar(c.q, p, m, u))(0, 0);
                        if (il == q.res_left(w, u)) continue;
                        ++left_count;
                        if (left[proper].empty())
                            left[proper] = "p=" + q.label(p) + " q=" + q.label(m) + " r=" + q.label(r) +
                                           " u=" + q.label(u) + " w=" + q.label(w) + ": w<-u=" + q.label(il) +
                                           " but w/u=" + q.label(q.res_left(w, u));
                    }
                    for (Elem v : q.diagonal(m, r).elements()) {
                        ++out.instances;
                        Elem ir = imp_right(scalar(c.q, m, r, v), scalar(c.q, p, r, w))(0, 0);
                        if (ir == q.res_right(v, w)) continue;
                        ++right_count;
                        if (right[proper].empty())
                            right[proper] = "p=" + q.label(p) + " q=" + q.label(m) + " r=" + q.label(r) +
                                            " v=" + q.label(v) + " w=" + q.label(w) + ": v->w=" + q.label(ir) +
                                            " but v\\w=" + q.label(q.res_right(v, w));
                    }
                }
            }
    auto pick = [](const std::string (&w)[2], std::size_t count) {
        if (count == 0) return std::string("none (exhaustive)");
        return std::to_string(count) + " instances, e.g. " + (w[1].empty() ? w[0] : w[1]);
    };
    out.note = "left gap: " + pick(left, left_count) + "; right gap: " + pick(right, right_count);
    return out;
}

}  // namespace

void add_qrel_laws(std::vector<Law>& out) {
    out.push_back({"qrel.composition.associative", "xi o (psi o phi) = (xi o psi) o phi", associative});
    out.push_back({"qrel.composition.identity", "identities are units for composition", identity_law});
    out.push_back({"qrel.composition.joins", "composition preserves joins in each variable", join_preserving});
    out.push_back({"qrel.composition.residual-forms", "the two residual forms of a composite entry agree", residual_forms});
    out.push_back({"qrel.implication.largest", "implications are the largest solutions, by entrywise search",
                   implication_largest});
    out.push_back({"qrel.calculus.adjunction", "psi o phi <= xi iff psi <= xi<-phi iff phi <= psi->xi", calc_adjunction});
    out.push_back({"qrel.calculus.meets", "implications preserve meets of the numerator", calc_meets});
    out.push_back({"qrel.calculus.joins", "implications turn joins of the denominator into meets", calc_joins});
    out.push_back({"qrel.calculus.composition", "composites of implications are below the implication", calc_composition});
    out.push_back({"qrel.calculus.currying", "(xi<-phi)<-psi = xi<-(psi o phi) and dually", calc_currying});
    out.push_back({"qrel.calculus.interchange", "(psi->xi)<-phi = psi->(xi<-phi)", calc_interchange});
    out.push_back({"qrel.calculus.counit", "(xi<-phi) o phi <= xi and psi o (psi->xi) <= xi", calc_counit});
    out.push_back({"qrel.calculus.strength", "xi o (psi<-phi) <= (xi o psi)<-phi and dually", calc_strength});
    out.push_back({"qrel.decomposition", "composition and implications split over rows and columns", decomposition});
    out.push_back({"qrel.singleton.formula", "singleton implications are diagonal floors of residuations",
                   singleton_formula});
    out.push_back({"qrel.singleton.residuation-gap", "records where singleton implications differ from residuation",
                   residuation_gap});
}

}  // namespace qorder::laws
