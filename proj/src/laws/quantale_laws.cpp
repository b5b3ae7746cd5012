#include "../laws.hpp"

namespace qorder::laws {

namespace {

std::string triple(const FiniteQuantale& q, Elem a, Elem b, Elem c) {
    return q.label(a) + ", " + q.label(b) + ", " + q.label(c);
}

LawOutcome residuation(LawContext& c) {
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    Tally t;
    for (Elem p = 0; p < n; ++p)
        for (Elem s = 0; s < n; ++s)
            for (Elem r = 0; r < n; ++r) {
                bool below = q.leq(q.mul(p, s), r);
                t.check(below == q.leq(p, q.res_left(r, s)) && below == q.leq(s, q.res_right(p, r)),
                        [&] { return "p, q, r = " + triple(q, p, s, r); });
            }
    return t.done();
}

LawOutcome diagonal_join_closed(LawContext& c) {
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    Tally t;
    for (Elem p = 0; p < n; ++p)
        for (Elem s = 0; s < n; ++s) {
            auto d = q.diagonal(p, s);
            t.check(d.contains(q.bottom()), [&] { return "bottom missing from D(" + q.label(p) + "," + q.label(s) + ")"; });
            for (Elem u : d.elements())
                for (Elem v : d.elements())
                    t.check(d.contains(q.join(u, v)), [&] {
                        return "D(" + q.label(p) + "," + q.label(s) + ") lacks " + q.label(u) + " v " + q.label(v);
                    });
        }
    return t.done();
}

// u in D(p,q), v in D(q,r): the composite (v/q)&u = v&(q\u) lies in D(p,r),
// and the elements q act as identities.
LawOutcome diagonal_composition(LawContext& c) {
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    Tally t;
    for (Elem p = 0; p < n; ++p)
        for (Elem m = 0; m < n; ++m) {
            for (Elem u : q.diagonal(p, m).elements()) {
                t.check(q.mul(q.res_left(m, m), u) == u && q.mul(q.res_left(u, p), p) == u, [&] {
                    return "identity fails for u = " + q.label(u) + " in D(" + q.label(p) + "," + q.label(m) + ")";
                });
                for (Elem r = 0; r < n; ++r)
                    for (Elem v : q.diagonal(m, r).elements()) {
                        Elem a = q.mul(q.res_left(v, m), u);
                        Elem b = q.mul(v, q.res_right(m, u));
                        t.check(a == b && q.diagonal(p, r).contains(a),
                                [&] { return "p, q, r = " + triple(q, p, m, r) + "; u, v = " + q.label(u) + ", " + q.label(v); });
                    }
            }
            t.check(q.diagonal(m, m).contains(m), [&] { return q.label(m) + " not in D(q,q)"; });
        }
    return t.done();
}

LawOutcome divisible_diagonal(LawContext& c) {
    const auto& q = *c.q;
    if (!q.classify().divisible) return skipped("quantale is not divisible");
    const auto n = static_cast<Elem>(q.size());
    Tally t;
    for (Elem p = 0; p < n; ++p)
        for (Elem s = 0; s < n; ++s)
            t.check(q.diagonal(p, s) == q.down_set(q.meet(p, s)),
                    [&] { return "D(" + q.label(p) + "," + q.label(s) + ") differs from the down-set of the meet"; });
    return t.done();
}

LawOutcome classification(LawContext& c) {
    const auto& q = *c.q;
    auto k = q.classify();
    Tally t;
    t.check(!k.divisible || k.integral, [] { return std::string("divisible but not integral"); });
    const auto n = static_cast<Elem>(q.size());
    for (Elem a = 0; a < n; ++a)
        t.check(k.idempotents_above_unit.contains(a) == (q.leq(q.unit(), a) && q.mul(a, a) == a),
                [&] { return "idempotent flag wrong for " + q.label(a); });
    return t.done();
}

LawOutcome conjugate(LawContext& c) {
    const auto& q = *c.q;
    auto t_ = q.conjugate();
    Tally t;
    t.check(t_.conjugate() == q, [] { return std::string("conjugate is not an involution"); });
    const auto n = static_cast<Elem>(q.size());
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            t.check(t_.mul(a, b) == q.mul(b, a) && t_.res_left(a, b) == q.res_right(b, a) &&
                        t_.diagonal(a, b) == q.diagonal(b, a),
                    [&] { return "conjugate tables disagree at " + q.label(a) + ", " + q.label(b); });
    return t.done();
}

LawOutcome text_round_trip(LawContext& c) {
    Tally t;
    t.check(load_quantale(to_text(*c.q)) == *c.q, [] { return std::string("reloaded quantale differs"); });
    return t.done();
}

}  // namespace

void add_quantale_laws(std::vector<Law>& out) {
    out.push_back({"quantale.residuation.adjunction", "p&q <= r iff p <= r/q iff q <= p\\r", residuation});
    out.push_back({"quantale.diagonal.join-closed", "each D(p,q) contains bottom and is closed under joins",
                   diagonal_join_closed});
    out.push_back({"quantale.diagonal.composition", "diagonal elements compose and have identities",
                   diagonal_composition});
    out.push_back({"quantale.diagonal.divisible", "over a divisible quantale D(p,q) is the down-set of p^q",
                   divisible_diagonal});
    out.push_back({"quantale.classify.consistency", "divisible implies integral; idempotents above e", classification});
    out.push_back({"quantale.conjugate.involution", "the conjugate reverses multiplication and is involutive", conjugate});
    out.push_back({"quantale.text.round-trip", "the text format reloads to the same quantale", text_round_trip});
}

}  // namespace qorder::laws
