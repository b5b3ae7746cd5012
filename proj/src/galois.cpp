#include "qorder/galois.hpp"

#include "qorder/error.hpp"

#include <algorithm>
#include <map>

namespace qorder {

Powersets powersets(const QOrderedSet& x, const Caps& caps) {
    return Powersets{presheaves(x, caps), copresheaves(x, caps)};
}

DistributorCheck is_distributor(const QRelation& phi, const QOrderedSet& x, const QOrderedSet& y) {
    QRelation c = compose(y.order(), compose(phi, x.order()));
    const auto& q = phi.quantale();
    for (std::size_t i = 0; i < phi.rows(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j)
            if (!q.leq(c(i, j), phi(i, j))) return {false, std::make_pair(i, j)};
    return {};
}

QRelation distributor_closure(const QRelation& r, const QOrderedSet& x, const QOrderedSet& y) {
    return compose(y.order(), compose(r, x.order()));
}

DistributorForms distributor_forms(const QRelation& phi, const QOrderedSet& x, const QOrderedSet& y) {
    const auto& q = phi.quantale();
    DistributorForms f;
    f.composite = is_distributor(phi, x, y).holds;

    f.elementwise = true;
    for (std::size_t a = 0; a < x.size() && f.elementwise; ++a)
        for (std::size_t a2 = 0; a2 < x.size() && f.elementwise; ++a2)
            for (std::size_t b = 0; b < y.size() && f.elementwise; ++b)
                for (std::size_t b2 = 0; b2 < y.size() && f.elementwise; ++b2) {
                    Elem lhs = q.mul(q.mul(q.res_left(y.alpha(b, b2), y.degree(b)), q.res_left(phi(a, b), x.degree(a))),
                                     x.alpha(a2, a));
                    if (!q.leq(lhs, phi(a2, b2))) f.elementwise = false;
                }

    f.one_sided = leq(compose(phi, x.order()), phi) && leq(compose(y.order(), phi), phi);

    f.weights = true;
    for (std::size_t a = 0; a < x.size(); ++a) {
        std::vector<Elem> row(y.size());
        for (std::size_t b = 0; b < y.size(); ++b) row[b] = phi(a, b);
        if (!is_copresheaf(y, x.degree(a), row)) f.weights = false;
    }
    for (std::size_t b = 0; b < y.size(); ++b) {
        std::vector<Elem> col(x.size());
        for (std::size_t a = 0; a < x.size(); ++a) col[a] = phi(a, b);
        if (!is_presheaf(x, y.degree(b), col)) f.weights = false;
    }

    f.implications = leq(x.order(), imp_right(phi, phi)) && leq(y.order(), imp_left(phi, phi));
    return f;
}

bool is_dist_adjoint(const QRelation& phi, const QRelation& psi, const QOrderedSet& x, const QOrderedSet& y) {
    return leq(x.order(), compose(psi, phi)) && leq(compose(phi, psi), y.order());
}

namespace {

void require_opposite(const QOrderMap& f, const QOrderMap& g) {
    if (!f.source().carrier().same_as(g.target().carrier()) || !f.target().carrier().same_as(g.source().carrier()))
        throw DimensionMismatch("maps do not run in opposite directions");
}

}  // namespace

bool is_galois(const QOrderMap& f, const QOrderMap& g) {
    require_opposite(f, g);
    const auto& x = f.source();
    const auto& y = f.target();
    const auto& q = x.quantale();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!q.leq(x.degree(i), x.alpha(i, g(f(i))))) return false;
    for (std::size_t j = 0; j < y.size(); ++j)
        if (!q.leq(y.degree(j), y.alpha(f(g(j)), j))) return false;
    return true;
}

bool graph_criterion(const QOrderMap& f, const QOrderMap& g) {
    require_opposite(f, g);
    const auto& x = f.source();
    const auto& y = f.target();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y.alpha(f(i), j) != x.alpha(i, g(j))) return false;
    return true;
}

namespace {

// For each element of Y, the elements of X that may serve as its image under
// an adjoint of f, by the graph criterion.
std::vector<std::vector<std::size_t>> adjoint_candidates(const QOrderMap& f, Side side) {
    const auto& x = f.source();
    const auto& y = f.target();
    std::vector<std::vector<std::size_t>> cand(y.size());
    for (std::size_t j = 0; j < y.size(); ++j)
        for (std::size_t c = 0; c < x.size(); ++c) {
            if (x.degree(c) != y.degree(j)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < x.size() && ok; ++i)
                ok = side == Side::right ? x.alpha(i, c) == y.alpha(f(i), j) : x.alpha(c, i) == y.alpha(j, f(i));
            if (ok) cand[j].push_back(c);
        }
    return cand;
}

}  // namespace

std::vector<QOrderMap> find_adjoint(const QOrderMap& f, Side side, const Caps& caps) {
    auto cand = adjoint_candidates(f, side);
    double total = 1;
    for (const auto& c : cand) total *= static_cast<double>(c.size());
    if (total > static_cast<double>(caps.adjoints))
        throw SizeCap("adjoint search would return " + std::to_string(static_cast<long long>(total)) + " maps");
    std::vector<QOrderMap> out;
    if (total == 0) return out;
    std::vector<std::size_t> pos(cand.size(), 0);
    for (;;) {
        std::vector<std::size_t> g(cand.size());
        for (std::size_t j = 0; j < cand.size(); ++j) g[j] = cand[j][pos[j]];
        out.emplace_back(f.target(), f.source(), std::move(g));
        std::size_t j = cand.size();
        while (j > 0 && pos[j - 1] + 1 == cand[j - 1].size()) pos[--j] = 0;
        if (j == 0) break;
        ++pos[j - 1];
    }
    return out;
}

namespace {

bool has_adjoint(const QOrderMap& f, Side side) {
    auto cand = adjoint_candidates(f, side);
    return std::all_of(cand.begin(), cand.end(), [](const auto& c) { return !c.empty(); });
}

// Side::right: every y has some c with (x <= c iff fx <= y);
// Side::left: every y has some c with (c <= x iff y <= fx).
bool underlying_adjoint_exists(const QOrderMap& f, Side side) {
    const auto& x = f.source();
    const auto& y = f.target();
    const std::size_t n = x.size(), m = y.size();
    auto lx = underlying_preorder(x);
    auto ly = underlying_preorder(y);
    for (std::size_t j = 0; j < m; ++j) {
        bool found = false;
        for (std::size_t c = 0; c < n && !found; ++c) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = side == Side::right ? lx[i * n + c] == ly[f(i) * m + j] : lx[c * n + i] == ly[j * m + f(i)];
            found = ok;
        }
        if (!found) return false;
    }
    return true;
}

bool contains(const std::vector<std::size_t>& v, std::size_t a) {
    return std::find(v.begin(), v.end(), a) != v.end();
}

}  // namespace

LeftAdjointReport left_adjoint_report(const QOrderMap& f, const Caps& caps) {
    const auto& x = f.source();
    const auto& y = f.target();
    const auto& q = x.quantale();
    LeftAdjointReport r;
    r.left_adjoint = has_adjoint(f, Side::right);
    r.sup_preserving = is_sup_preserving(f, caps).holds;
    r.underlying_adjoint = underlying_adjoint_exists(f, Side::right);
    r.tensor_preserving = true;
    for (std::size_t i = 0; i < x.size() && r.tensor_preserving; ++i)
        for (std::size_t d = 0; d < q.size() && r.tensor_preserving; ++d)
            for (Elem u : q.diagonal(x.degree(i), static_cast<Elem>(d)).elements()) {
                auto t = tensor(x, u, i, static_cast<Elem>(d));
                if (t.empty()) continue;
                auto ty = tensor(y, u, f(i), static_cast<Elem>(d));
                if (!contains(ty, f(t.front()))) {
                    r.tensor_preserving = false;
                    break;
                }
            }
    return r;
}

RightAdjointReport right_adjoint_report(const QOrderMap& f, const Caps& caps) {
    const auto& x = f.source();
    const auto& y = f.target();
    const auto& q = x.quantale();
    RightAdjointReport r;
    r.right_adjoint = has_adjoint(f, Side::left);
    r.inf_preserving = is_inf_preserving(f, caps).holds;
    r.underlying_adjoint = underlying_adjoint_exists(f, Side::left);
    r.cotensor_preserving = true;
    for (std::size_t i = 0; i < x.size() && r.cotensor_preserving; ++i)
        for (std::size_t d = 0; d < q.size() && r.cotensor_preserving; ++d)
            for (Elem v : q.diagonal(static_cast<Elem>(d), x.degree(i)).elements()) {
                auto t = cotensor(x, v, i, static_cast<Elem>(d));
                if (t.empty()) continue;
                auto ty = cotensor(y, v, f(i), static_cast<Elem>(d));
                if (!contains(ty, f(t.front()))) {
                    r.cotensor_preserving = false;
                    break;
                }
            }
    return r;
}

const char* to_string(PairKind kind) {
    switch (kind) {
    case PairKind::polarity: return "polarity";
    case PairKind::axiality: return "axiality";
    case PairKind::dual_axiality: return "dual-axiality";
    }
    return "?";
}

namespace {

void require_distributor(const QRelation& phi, const Powersets& x, const Powersets& y) {
    if (!phi.source().same_as(x.base().carrier()) || !phi.target().same_as(y.base().carrier()))
        throw DimensionMismatch("distributor carriers do not match the ordered sets");
    if (!is_distributor(phi, x.base(), y.base()).holds) throw Error("relation is not a distributor");
}

}  // namespace

InducedPair isbell(const QRelation& phi, const Powersets& x, const Powersets& y) {
    require_distributor(phi, x, y);
    auto up = powerset_map(x.lower, y.upper, [&](const QRelation& mu) { return imp_left(phi, mu); });
    auto down = powerset_map(y.upper, x.lower, [&](const QRelation& lam) { return imp_right(lam, phi); });
    return InducedPair{PairKind::polarity, x.lower, y.upper, std::move(up), std::move(down)};
}

InducedPair kan(const QRelation& phi, const Powersets& x, const Powersets& y) {
    require_distributor(phi, x, y);
    auto star = powerset_map(y.lower, x.lower, [&](const QRelation& mu) { return compose(mu, phi); });
    auto lower_star = powerset_map(x.lower, y.lower, [&](const QRelation& mu) { return imp_left(mu, phi); });
    return InducedPair{PairKind::axiality, y.lower, x.lower, std::move(star), std::move(lower_star)};
}

InducedPair dual_kan(const QRelation& phi, const Powersets& x, const Powersets& y) {
    require_distributor(phi, x, y);
    auto lower_dagger = powerset_map(y.upper, x.upper, [&](const QRelation& lam) { return imp_right(phi, lam); });
    auto dagger = powerset_map(x.upper, y.upper, [&](const QRelation& lam) { return compose(phi, lam); });
    return InducedPair{PairKind::dual_axiality, y.upper, x.upper, std::move(lower_dagger), std::move(dagger)};
}

LiftedPairs lift_galois(const QOrderMap& f, const QOrderMap& g, const Powersets& x, const Powersets& y) {
    if (!is_galois(f, g)) throw NotAdjoint("maps are not adjoint");
    QRelation phi = graph(f);
    return LiftedPairs{isbell(phi, x, y), kan(phi, x, y), dual_kan(phi, x, y)};
}

namespace {

QRelation recover(const InducedPair& p) {
    const auto& Q = p.domain.base().quantale();
    switch (p.kind) {
    case PairKind::polarity: {
        const auto& x = p.domain.base();
        const auto& y = p.codomain.base();
        std::vector<Elem> e(x.size() * y.size(), Q.bottom());
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto yx = yoneda(x, i);
            const auto& row = p.codomain.values(p.left(*p.domain.index_of(yx.degree, yx.values)));
            std::copy(row.begin(), row.end(), e.begin() + static_cast<std::ptrdiff_t>(i * y.size()));
        }
        return QRelation(x.carrier(), y.carrier(), std::move(e));
    }
    case PairKind::axiality: {
        const auto& y = p.domain.base();
        const auto& x = p.codomain.base();
        std::vector<Elem> e(x.size() * y.size(), Q.bottom());
        for (std::size_t j = 0; j < y.size(); ++j) {
            auto yy = yoneda(y, j);
            const auto& col = p.codomain.values(p.left(*p.domain.index_of(yy.degree, yy.values)));
            for (std::size_t i = 0; i < x.size(); ++i) e[i * y.size() + j] = col[i];
        }
        return QRelation(x.carrier(), y.carrier(), std::move(e));
    }
    case PairKind::dual_axiality: {
        const auto& y = p.domain.base();
        const auto& x = p.codomain.base();
        std::vector<Elem> e(x.size() * y.size(), Q.bottom());
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto yx = co_yoneda(x, i);
            const auto& row = p.domain.values(p.right(*p.codomain.index_of(yx.degree, yx.values)));
            std::copy(row.begin(), row.end(), e.begin() + static_cast<std::ptrdiff_t>(i * y.size()));
        }
        return QRelation(x.carrier(), y.carrier(), std::move(e));
    }
    }
    throw Error("unknown pair kind");
}

// Whether the left component of p is the one phi induces.
bool induced_by(const InducedPair& p, const QRelation& phi) {
    for (std::size_t a = 0; a < p.domain.size(); ++a) {
        QRelation r = p.domain.relation(a);
        QRelation image = p.kind == PairKind::polarity ? imp_left(phi, r)
                          : p.kind == PairKind::axiality ? compose(r, phi)
                                                         : imp_right(phi, r);
        Elem d = p.kind == PairKind::axiality ? image.target().degree(0) : image.source().degree(0);
        auto b = p.codomain.index_of(d, image.entries());
        if (!b || p.left(a) != *b) return false;
    }
    return true;
}

}  // namespace

QRelation dist_from_pair(const InducedPair& p) {
    if (!is_galois(p.left, p.right)) throw NotAdjoint(std::string(to_string(p.kind)) + " maps are not adjoint");
    QRelation phi = recover(p);
    if (!induced_by(p, phi))
        throw NotAdjoint(std::string(to_string(p.kind)) + " maps are adjoint but not induced by a distributor");
    return phi;
}

namespace {

QOrderedSet restrict_to(const QOrderedSet& x, const std::vector<std::size_t>& idx) {
    std::vector<std::string> labels;
    std::vector<Elem> deg, alpha;
    for (std::size_t i : idx) {
        labels.push_back(x.label(i));
        deg.push_back(x.degree(i));
        for (std::size_t j : idx) alpha.push_back(x.alpha(i, j));
    }
    QSubset carrier(x.quantale_ptr(), std::move(labels), std::move(deg));
    return QOrderedSet::trusted(QRelation::trusted(carrier, carrier, std::move(alpha)));
}

}  // namespace

FixedPoints fixed_points(const InducedPair& pair, bool codomain_side) {
    std::vector<std::size_t> idx;
    if (!codomain_side) {
        for (std::size_t a = 0; a < pair.domain.size(); ++a)
            if (pair.right(pair.left(a)) == a) idx.push_back(a);
        return FixedPoints{restrict_to(pair.domain.ordered(), idx), idx};
    }
    for (std::size_t b = 0; b < pair.codomain.size(); ++b)
        if (pair.left(pair.right(b)) == b) idx.push_back(b);
    return FixedPoints{restrict_to(pair.codomain.ordered(), idx), idx};
}

FixedPoints macneille(const QOrderedSet& x, const Caps& caps) {
    auto p = powersets(x, caps);
    return fixed_points(isbell(x.order(), p, p));
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const QOrderedSet& x) {
    const std::size_t n = x.size();
    auto le = underlying_preorder(x);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
        bool first = true;
        for (std::size_t j = 0; j < i && first; ++j)
            if (le[i * n + j] && le[j * n + i]) first = false;
        if (first) reps.push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a : reps)
        for (std::size_t b : reps) {
            if (a == b || !le[a * n + b]) continue;
            bool cover = true;
            for (std::size_t c : reps)
                if (c != a && c != b && le[a * n + c] && le[c * n + b]) cover = false;
            if (cover) covers.emplace_back(a, b);
        }
    return covers;
}

ConceptLattice concept_lattice(const QRelation& context, ConceptMode mode, const Caps& caps) {
    auto x = QOrderedSet::discrete(context.source());
    auto y = QOrderedSet::discrete(context.target());
    auto px = powersets(x, caps);
    auto py = powersets(y, caps);
    std::vector<Concept> concepts;
    if (mode == ConceptMode::fca) {
        auto pair = isbell(context, px, py);
        auto fp = fixed_points(pair);
        for (std::size_t a : fp.indices)
            concepts.push_back(Concept{pair.domain.degree(a), pair.domain.values(a), pair.codomain.values(pair.left(a))});
        auto covers = hasse_covers(fp.ordered);
        return ConceptLattice{context, mode, std::move(fp), std::move(concepts), std::move(covers)};
    }
    auto pair = kan(context, px, py);
    auto fp = fixed_points(pair, true);
    for (std::size_t b : fp.indices)
        concepts.push_back(Concept{pair.codomain.degree(b), pair.codomain.values(b), pair.domain.values(pair.right(b))});
    auto covers = hasse_covers(fp.ordered);
    return ConceptLattice{context, mode, std::move(fp), std::move(concepts), std::move(covers)};
}

std::vector<std::size_t> right_adjoint_witnesses(const Presheaf& mu, const PowersetOrder& pdx) {
    const auto& x = mu.base;
    const auto& q = x.quantale();
    QRelation m = mu.relation();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pdx.size(); ++i) {
        if (pdx.degree(i) != mu.degree) continue;
        QRelation lam = pdx.relation(i);
        if (!q.leq(mu.degree, compose(m, lam)(0, 0))) continue;
        if (!leq(compose(lam, m), x.order())) continue;
        out.push_back(i);
    }
    return out;
}

bool is_right_adjoint_dist(const Presheaf& mu, const Caps& caps) {
    return !right_adjoint_witnesses(mu, copresheaves(mu.base, caps)).empty();
}

FixedPoints cauchy_presheaves(const Powersets& x) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < x.lower.size(); ++i)
        if (!right_adjoint_witnesses(x.lower.presheaf(i), x.upper).empty()) idx.push_back(i);
    return FixedPoints{restrict_to(x.lower.ordered(), idx), idx};
}

CauchyReport cauchy_report(const QOrderedSet& x, const Caps& caps) {
    auto p = powersets(x, caps);
    auto c = cauchy_presheaves(p);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < c.indices.size(); ++k) pos[c.indices[k]] = k;
    auto y = yoneda_map(p.lower);
    std::vector<std::size_t> f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto it = pos.find(y(i));
        if (it == pos.end()) throw Error("a representable presheaf is not a right adjoint");
        f[i] = it->second;
    }
    QOrderMap yc(x, c.ordered, std::move(f));
    CauchyReport r;
    r.right_adjoint_count = c.indices.size();
    r.left_adjoint_witnesses = find_adjoint(yc, Side::left, caps).size();
    r.cauchy_complete = r.left_adjoint_witnesses > 0;
    return r;
}

bool is_cauchy_complete(const QOrderedSet& x, const Caps& caps) {
    return cauchy_report(x, caps).cauchy_complete;
}

}  // namespace qorder
