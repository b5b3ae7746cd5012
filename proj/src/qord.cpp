#include "qorder/qord.hpp"

#include "qorder/error.hpp"

#include <cstdlib>
#include <optional>

namespace qorder {

Caps Caps::from_env() {
    Caps c;
    if (const char* env = std::getenv("QORDER_CAP"); env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) c.powerset = c.memberships = c.adjoints = static_cast<std::size_t>(v);
    }
    return c;
}

const char* to_string(PreorderFailure kind) {
    switch (kind) {
    case PreorderFailure::not_in_diagonal: return "NotInDiagonal";
    case PreorderFailure::not_reflexive: return "NotReflexive";
    case PreorderFailure::not_transitive: return "NotTransitive";
    }
    return "?";
}

namespace {

struct Violation {
    PreorderFailure kind;
    std::size_t i, j, k;
};

std::optional<Violation> find_violation(const FiniteQuantale& q, const std::vector<Elem>& deg,
                                        const std::vector<Elem>& alpha) {
    const std::size_t n = deg.size();
    auto a = [&](std::size_t i, std::size_t j) { return alpha[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) >= q.size() || !q.diagonal(deg[i], deg[j]).contains(a(i, j)))
                return Violation{PreorderFailure::not_in_diagonal, i, j, 0};
    for (std::size_t i = 0; i < n; ++i)
        if (!q.leq(deg[i], a(i, i))) return Violation{PreorderFailure::not_reflexive, i, i, 0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!q.leq(q.mul(q.res_left(a(j, k), deg[j]), a(i, j)), a(i, k)))
                    return Violation{PreorderFailure::not_transitive, i, j, k};
    return std::nullopt;
}

}  // namespace

QOrderedSet make_ordered(const QSubset& x, std::vector<Elem> alpha) {
    const std::size_t n = x.size();
    if (alpha.size() != n * n) throw DimensionMismatch("order matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (auto v = find_violation(x.quantale(), x.membership(), alpha)) {
        std::string where = x.label(v->i) + "," + x.label(v->j);
        if (v->kind == PreorderFailure::not_transitive) where += "," + x.label(v->k);
        if (v->kind == PreorderFailure::not_reflexive) where = x.label(v->i);
        throw PreorderError(v->kind, v->i, v->j, v->k, std::string(to_string(v->kind)) + " at (" + where + ")");
    }
    return QOrderedSet(QRelation::trusted(x, x, std::move(alpha)));
}

QOrderedSet QOrderedSet::discrete(const QSubset& carrier) {
    return QOrderedSet(identity(carrier));
}

QOrderedSet QOrderedSet::from_relation(const QRelation& alpha) {
    if (!alpha.source().same_as(alpha.target())) throw DimensionMismatch("an order must be an endo-relation");
    return make_ordered(alpha.source(), alpha.entries());
}

std::vector<bool> underlying_preorder(const QOrderedSet& x) {
    const std::size_t n = x.size();
    const auto& q = x.quantale();
    std::vector<bool> le(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            le[i * n + j] = x.degree(i) == x.degree(j) && q.leq(x.degree(i), x.alpha(i, j));
    return le;
}

bool is_separated(const QOrderedSet& x) {
    const std::size_t n = x.size();
    auto le = underlying_preorder(x);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (le[i * n + j] && le[j * n + i]) return false;
    return true;
}

MapCheck check_map(const std::vector<std::size_t>& f, const QOrderedSet& x, const QOrderedSet& y) {
    if (f.size() != x.size()) throw DimensionMismatch("map assignment has wrong length");
    for (std::size_t v : f)
        if (v >= y.size()) throw DimensionMismatch("map sends an element outside the target");
    if (!same_quantale(x.quantale_ptr(), y.quantale_ptr())) throw DimensionMismatch("maps must stay over one quantale");
    const auto& q = x.quantale();
    MapCheck c;
    c.membership_preserving = true;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.degree(i) != y.degree(f[i])) c.membership_preserving = false;
    if (!c.membership_preserving) return c;
    c.order_preserving = c.fully_faithful = true;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            Elem a = x.alpha(i, j), b = y.alpha(f[i], f[j]);
            if (!q.leq(a, b)) c.order_preserving = false;
            if (a != b) c.fully_faithful = false;
        }
    c.fully_faithful = c.fully_faithful && c.order_preserving;
    return c;
}

QOrderMap::QOrderMap(QOrderedSet source, QOrderedSet target, std::vector<std::size_t> assignment)
    : src_(std::move(source)), tgt_(std::move(target)), f_(std::move(assignment)) {
    auto c = check_map(f_, src_, tgt_);
    if (!c.membership_preserving) throw InvalidMap("map does not preserve membership");
    if (!c.order_preserving) throw InvalidMap("map does not preserve the order");
}

QOrderMap identity_map(const QOrderedSet& x) {
    std::vector<std::size_t> f(x.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = i;
    return QOrderMap(x, x, std::move(f));
}

QOrderMap compose_maps(const QOrderMap& g, const QOrderMap& f) {
    if (!f.target().carrier().same_as(g.source().carrier())) throw DimensionMismatch("maps are not composable");
    std::vector<std::size_t> h(f.assignment().size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = g(f(i));
    return QOrderMap(f.source(), g.target(), std::move(h));
}

bool operator==(const QOrderMap& f, const QOrderMap& g) {
    return f.source().carrier().same_as(g.source().carrier()) && f.target().carrier().same_as(g.target().carrier()) &&
           f.assignment() == g.assignment();
}

QRelation graph(const QOrderMap& f) {
    const auto& y = f.target();
    const std::size_t nx = f.source().size(), ny = y.size();
    std::vector<Elem> e(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) e[i * ny + j] = y.alpha(f(i), j);
    return QRelation::trusted(f.source().carrier(), y.carrier(), std::move(e));
}

QRelation cograph(const QOrderMap& f) {
    const auto& y = f.target();
    const std::size_t nx = f.source().size(), ny = y.size();
    std::vector<Elem> e(ny * nx);
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) e[j * nx + i] = y.alpha(j, f(i));
    return QRelation::trusted(y.carrier(), f.source().carrier(), std::move(e));
}

bool map_leq(const QOrderMap& f, const QOrderMap& g) {
    if (!f.source().carrier().same_as(g.source().carrier()) || !f.target().carrier().same_as(g.target().carrier()))
        throw DimensionMismatch("map_leq needs parallel maps");
    const auto& q = f.source().quantale();
    for (std::size_t i = 0; i < f.source().size(); ++i)
        if (!q.leq(f.source().degree(i), f.target().alpha(f(i), g(i)))) return false;
    return true;
}

namespace {

std::vector<std::size_t> kept(const QOrderedSet& x, ElemSet s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (s.contains(x.degree(i))) idx.push_back(i);
    return idx;
}

}  // namespace

QOrderedSet coreflect(const QOrderedSet& x, ElemSet s) {
    auto idx = kept(x, s);
    std::vector<std::string> labels;
    std::vector<Elem> deg, alpha;
    for (std::size_t i : idx) {
        labels.push_back(x.label(i));
        deg.push_back(x.degree(i));
        for (std::size_t j : idx) alpha.push_back(x.alpha(i, j));
    }
    return make_ordered(QSubset(x.quantale_ptr(), std::move(labels), std::move(deg)), std::move(alpha));
}

QOrderMap coreflect_inclusion(const QOrderedSet& x, ElemSet s) {
    return QOrderMap(coreflect(x, s), x, kept(x, s));
}

QOrderedSet from_hoehle(const QuantalePtr& q, std::vector<std::string> labels, std::vector<Elem> alpha) {
    const std::size_t n = labels.size();
    if (alpha.size() != n * n) throw DimensionMismatch("order matrix must be square");
    auto a = [&](std::size_t i, std::size_t j) { return alpha[i * n + j]; };
    for (Elem v : alpha)
        if (v >= q->size()) throw NotHoehlePreorder("entry out of range");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem xy = a(i, j), xx = a(i, i), yy = a(j, j);
            if (q->mul(q->res_left(xy, yy), yy) != xy || q->mul(xx, q->res_right(xx, xy)) != xy)
                throw NotHoehlePreorder("divisibility fails at (" + labels[i] + "," + labels[j] + ")");
            for (std::size_t k = 0; k < n; ++k) {
                Elem yz = a(j, k), xz = a(i, k);
                if (!q->leq(q->mul(xy, q->res_right(yy, yz)), xz) || !q->leq(q->mul(q->res_left(xy, yy), yz), xz))
                    throw NotHoehlePreorder("transitivity fails at (" + labels[i] + "," + labels[j] + "," + labels[k] + ")");
            }
        }
    std::vector<Elem> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = a(i, i);
    auto conj = std::make_shared<const FiniteQuantale>(q->conjugate());
    try {
        return make_ordered(QSubset(conj, std::move(labels), std::move(deg)), std::move(alpha));
    } catch (const PreorderError& e) {
        throw NotHoehlePreorder(e.what());
    }
}

std::vector<Elem> to_hoehle(const QOrderedSet& x) {
    return x.order().entries();
}

std::vector<std::vector<Elem>> enumerate_memberships(const QuantalePtr& q, std::size_t n, const std::vector<Elem>& alpha,
                                                     const Caps& caps) {
    if (alpha.size() != n * n) throw DimensionMismatch("order matrix must be square");
    const std::size_t m = q->size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(m);
    if (total > static_cast<double>(caps.memberships))
        throw SizeCap("membership scan of " + std::to_string(m) + "^" + std::to_string(n) + " maps exceeds the cap");
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> deg(n, 0);
    for (;;) {
        if (!find_violation(*q, deg, alpha)) out.push_back(deg);
        std::size_t i = n;
        while (i > 0 && deg[i - 1] + 1u == m) deg[--i] = 0;
        if (i == 0) break;
        ++deg[i - 1];
    }
    return out;
}

}  // namespace qorder
