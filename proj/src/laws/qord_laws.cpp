#include "../laws.hpp"

#include "qorder/error.hpp"

namespace qorder::laws {

namespace {

// Random diagonal-valid relations, half of them closed to preorders.
LawOutcome matrix_form(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = random_subset(c.q, c.rng, 1, 3);
        auto r = random_relation(x, x, c.rng, 0.6);
        if (c.rng() & 1) r = preorder_closure(r);
        bool matrix = leq(identity(x), r) && leq(compose(r, r), r);
        bool accepted = true;
        try {
            make_ordered(x, r.entries());
        } catch (const PreorderError&) {
            accepted = false;
        }
        t.check(matrix == accepted, [&] { return show(r); });
    }
    return t.done();
}

LawOutcome integral_diagonal(LawContext& c) {
    if (!c.q->classify().integral) return skipped("quantale is not integral");
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 4);
        for (std::size_t a = 0; a < x.size(); ++a)
            t.check(x.alpha(a, a) == x.degree(a), [&] { return show(x); });
    }
    return t.done();
}

LawOutcome underlying(LawContext& c) {
    Tally t;
    for (std::size_t i = 0; i < light(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 4);
        const std::size_t n = x.size();
        auto le = underlying_preorder(x);
        for (std::size_t a = 0; a < n; ++a) {
            t.check(le[a * n + a], [&] { return "not reflexive: " + show(x); });
            for (std::size_t b = 0; b < n; ++b) {
                if (le[a * n + b]) t.check(x.degree(a) == x.degree(b), [&] { return "cross-degree pair: " + show(x); });
                for (std::size_t d = 0; d < n; ++d)
                    if (le[a * n + b] && le[b * n + d])
                        t.check(le[a * n + d], [&] { return "not transitive: " + show(x); });
            }
        }
    }
    return t.done();
}

LawOutcome map_composition(LawContext& c) {
    Tally t;
    std::size_t found = 0;
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 3);
        auto y = random_ordered(c.q, c.rng, 1, 4);
        auto z = random_ordered(c.q, c.rng, 1, 4);
        auto f = random_map(x, y, c.rng);
        auto g = random_map(y, z, c.rng);
        if (!f || !g) continue;
        ++found;
        auto h = compose_maps(*g, *f);
        auto chk = check_map(h.assignment(), x, z);
        bool ff = check_map(f->assignment(), x, y).fully_faithful && check_map(g->assignment(), y, z).fully_faithful;
        t.check(chk.membership_preserving && chk.order_preserving && (!ff || chk.fully_faithful),
                [&] { return show(x) + " -> " + show(y) + " -> " + show(z); });
        t.check(compose_maps(h, identity_map(x)) == h && compose_maps(identity_map(z), h) == h,
                [&] { return "identity maps are not units"; });
    }
    if (found == 0) return skipped("no composable map pairs were sampled");
    return t.done();
}

LawOutcome coreflection(LawContext& c) {
    Tally t;
    const auto n = static_cast<Elem>(c.q->size());
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 4);
        ElemSet keep;
        for (Elem d = 0; d < n; ++d)
            if (c.rng() & 1) keep.insert(d);
        auto once = coreflect(x, keep);
        auto twice = coreflect(once, keep);
        auto inc = coreflect_inclusion(x, keep);
        t.check(once.order() == twice.order() && check_map(inc.assignment(), once, x).fully_faithful,
                [&] { return show(x); });
    }
    return t.done();
}

LawOutcome hoehle_round_trip(LawContext& c) {
    if (!c.q->classify().integral) return skipped("quantale is not integral");
    Tally t;
    auto conj = std::make_shared<const FiniteQuantale>(c.q->conjugate());
    for (std::size_t i = 0; i < medium(c); ++i) {
        auto x = random_ordered(c.q, c.rng, 1, 4);
        auto back = from_hoehle(conj, x.carrier().labels(), to_hoehle(x));
        t.check(back.quantale() == *c.q && back.order().entries() == x.order().entries() &&
                    back.carrier().membership() == x.carrier().membership(),
                [&] { return show(x); });
    }
    return t.done();
}

LawOutcome singleton_count(LawContext& c) {
    const auto& q = *c.q;
    const auto n = static_cast<Elem>(q.size());
    auto one = QSubset::singleton(c.q, q.unit(), "x");
    std::size_t valid = 0, idempotent = 0;
    for (Elem a = 0; a < n; ++a) {
        if (q.leq(q.unit(), a) && q.mul(a, a) == a) ++idempotent;
        try {
            make_ordered(one, {a});
            ++valid;
        } catch (const PreorderError&) {
        }
    }
    Tally t;
    t.check(valid == idempotent, [&] {
        return std::to_string(valid) + " preorders but " + std::to_string(idempotent) + " idempotents above e";
    });
    t.note(std::to_string(valid) + " preorders on the crisp singleton");
    return t.done();
}

}  // namespace

void add_qord_laws(std::vector<Law>& out) {
    out.push_back({"qord.preorder.matrix-form", "make_ordered accepts exactly id <= a and a o a <= a", matrix_form});
    out.push_back({"qord.preorder.integral-diagonal", "over an integral quantale a(x,x) = |x|", integral_diagonal});
    out.push_back({"qord.underlying.preorder", "the underlying relation is a preorder within each degree", underlying});
    out.push_back({"qord.maps.composition", "order-preserving and fully faithful maps compose", map_composition});
    out.push_back({"qord.coreflect.idempotent", "coreflection is idempotent with a fully faithful inclusion",
                   coreflection});
    out.push_back({"qord.hoehle.round-trip", "valued preorders over the conjugate give back the ordered set",
                   hoehle_round_trip});
    out.push_back({"qord.singleton.count", "preorders on the crisp singleton are the idempotents above e",
                   singleton_count});
}

}  // namespace qorder::laws
