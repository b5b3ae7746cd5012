#include "qorder/completion.hpp"

#include "qorder/error.hpp"

#include <algorithm>

namespace qorder {

namespace {

void require_base(const QOrderedSet& x, const QOrderedSet& base) {
    if (!x.carrier().same_as(base.carrier())) throw DimensionMismatch("weight lives on a different ordered set");
}

std::vector<std::size_t> rows_equal(const QOrderedSet& x, Elem degree, const std::vector<Elem>& row) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < x.size(); ++s) {
        if (x.degree(s) != degree) continue;
        bool eq = true;
        for (std::size_t j = 0; j < x.size() && eq; ++j) eq = x.alpha(s, j) == row[j];
        if (eq) out.push_back(s);
    }
    return out;
}

std::vector<std::size_t> cols_equal(const QOrderedSet& x, Elem degree, const std::vector<Elem>& col) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < x.size(); ++s) {
        if (x.degree(s) != degree) continue;
        bool eq = true;
        for (std::size_t j = 0; j < x.size() && eq; ++j) eq = x.alpha(j, s) == col[j];
        if (eq) out.push_back(s);
    }
    return out;
}

}  // namespace

Copresheaf ub(const QOrderedSet& x, const Presheaf& mu) {
    require_base(x, mu.base);
    QRelation r = imp_left(x.order(), mu.relation());
    return Copresheaf{x, mu.degree, r.entries()};
}

Presheaf lb(const QOrderedSet& x, const Copresheaf& lambda) {
    require_base(x, lambda.base);
    QRelation r = imp_right(lambda.relation(), x.order());
    return Presheaf{x, lambda.degree, r.entries()};
}

std::vector<std::size_t> sup(const QOrderedSet& x, const Presheaf& mu) {
    auto u = ub(x, mu);
    return rows_equal(x, mu.degree, u.values);
}

std::vector<std::size_t> inf(const QOrderedSet& x, const Copresheaf& lambda) {
    auto l = lb(x, lambda);
    return cols_equal(x, lambda.degree, l.values);
}

std::vector<std::size_t> tensor(const QOrderedSet& x, Elem u, std::size_t at, Elem q) {
    const auto& Q = x.quantale();
    if (at >= x.size() || q >= Q.size()) throw DimensionMismatch("tensor: index out of range");
    if (u >= Q.size() || !Q.diagonal(x.degree(at), q).contains(u))
        throw InvalidScalar("scalar is not in D(|x|,q)");
    QRelation scalar = QRelation::trusted(QSubset::singleton(x.quantale_ptr(), x.degree(at)),
                                          QSubset::singleton(x.quantale_ptr(), q), {u});
    QRelation r = imp_left(x.order().row(at), scalar);
    return rows_equal(x, q, r.entries());
}

std::vector<std::size_t> cotensor(const QOrderedSet& x, Elem v, std::size_t at, Elem q) {
    const auto& Q = x.quantale();
    if (at >= x.size() || q >= Q.size()) throw DimensionMismatch("cotensor: index out of range");
    if (v >= Q.size() || !Q.diagonal(q, x.degree(at)).contains(v))
        throw InvalidScalar("scalar is not in D(q,|x|)");
    QRelation scalar = QRelation::trusted(QSubset::singleton(x.quantale_ptr(), q),
                                          QSubset::singleton(x.quantale_ptr(), x.degree(at)), {v});
    QRelation r = imp_right(scalar, x.order().col(at));
    return cols_equal(x, q, r.entries());
}

bool is_order_complete(const QOrderedSet& x, const Caps& caps) {
    const auto& Q = x.quantale();
    const std::size_t n = x.size();
    auto le = underlying_preorder(x);
    for (std::size_t d = 0; d < Q.size(); ++d) {
        std::vector<std::size_t> fibre;
        for (std::size_t i = 0; i < n; ++i)
            if (x.degree(i) == d) fibre.push_back(i);
        if (fibre.size() > caps.subset_bits)
            throw SizeCap("fibre of size " + std::to_string(fibre.size()) + " exceeds the subset scan cap");
        const std::size_t k = fibre.size();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
            std::vector<std::size_t> upper;
            for (std::size_t j : fibre) {
                bool above = true;
                for (std::size_t b = 0; b < k && above; ++b)
                    if ((s >> b) & 1u) above = le[fibre[b] * n + j];
                if (above) upper.push_back(j);
            }
            bool has_least = std::any_of(upper.begin(), upper.end(), [&](std::size_t j) {
                return std::all_of(upper.begin(), upper.end(), [&](std::size_t u) { return le[j * n + u]; });
            });
            if (!has_least) return false;
        }
    }
    return true;
}

CompletenessReport completeness_report(const QOrderedSet& x, const Caps& caps) {
    const auto& Q = x.quantale();
    CompletenessReport r;
    auto px = presheaves(x, caps);
    r.complete = true;
    for (std::size_t i = 0; i < px.size() && r.complete; ++i)
        if (sup(x, px.presheaf(i)).empty()) {
            r.complete = false;
            r.missing_sup = px.ordered().label(i);
        }
    auto pdx = copresheaves(x, caps);
    r.cocomplete = true;
    for (std::size_t i = 0; i < pdx.size() && r.cocomplete; ++i)
        if (inf(x, pdx.copresheaf(i)).empty()) r.cocomplete = false;

    r.tensored = r.cotensored = true;
    for (std::size_t at = 0; at < x.size(); ++at)
        for (std::size_t d = 0; d < Q.size(); ++d) {
            const auto q = static_cast<Elem>(d);
            for (Elem u : Q.diagonal(x.degree(at), q).elements())
                if (r.tensored && tensor(x, u, at, q).empty()) {
                    r.tensored = false;
                    r.missing_tensor = Q.label(u) + " (x) " + x.label(at) + " at degree " + Q.label(q);
                }
            for (Elem v : Q.diagonal(q, x.degree(at)).elements())
                if (r.cotensored && cotensor(x, v, at, q).empty()) {
                    r.cotensored = false;
                    r.missing_cotensor = Q.label(v) + " -> " + x.label(at) + " at degree " + Q.label(q);
                }
        }
    r.order_complete = is_order_complete(x, caps);
    return r;
}

PreservationResult is_sup_preserving(const QOrderMap& f, const Caps& caps) {
    const auto& x = f.source();
    const auto& y = f.target();
    auto px = presheaves(x, caps);
    QRelation co = cograph(f);
    for (std::size_t i = 0; i < px.size(); ++i) {
        auto mu = px.presheaf(i);
        auto s = sup(x, mu);
        if (s.empty()) continue;
        Presheaf image{y, mu.degree, compose(mu.relation(), co).entries()};
        auto t = sup(y, image);
        for (std::size_t w : s)
            if (std::find(t.begin(), t.end(), f(w)) == t.end())
                return {false, "sup of " + px.ordered().label(i) + " is not preserved"};
    }
    return {};
}

PreservationResult is_inf_preserving(const QOrderMap& f, const Caps& caps) {
    const auto& x = f.source();
    const auto& y = f.target();
    auto pdx = copresheaves(x, caps);
    QRelation gr = graph(f);
    for (std::size_t i = 0; i < pdx.size(); ++i) {
        auto lambda = pdx.copresheaf(i);
        auto s = inf(x, lambda);
        if (s.empty()) continue;
        Copresheaf image{y, lambda.degree, compose(gr, lambda.relation()).entries()};
        auto t = inf(y, image);
        for (std::size_t w : s)
            if (std::find(t.begin(), t.end(), f(w)) == t.end())
                return {false, "inf of " + pdx.ordered().label(i) + " is not preserved"};
    }
    return {};
}

}  // namespace qorder
