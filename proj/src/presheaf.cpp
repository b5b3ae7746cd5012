#include "qorder/presheaf.hpp"

#include "qorder/error.hpp"

namespace qorder {

QRelation Presheaf::relation() const {
    return QRelation::trusted(base.carrier(), QSubset::singleton(base.quantale_ptr(), degree), values);
}

QRelation Copresheaf::relation() const {
    return QRelation::trusted(QSubset::singleton(base.quantale_ptr(), degree), base.carrier(), values);
}

Presheaf as_presheaf(const QOrderedSet& base, const QRelation& mu) {
    if (!mu.source().same_as(base.carrier()) || mu.cols() != 1)
        throw DimensionMismatch("a presheaf is a relation X -|-> 1_q");
    if (!is_presheaf(base, mu.target().degree(0), mu.entries())) throw Error("relation is not a presheaf");
    return Presheaf{base, mu.target().degree(0), mu.entries()};
}

Copresheaf as_copresheaf(const QOrderedSet& base, const QRelation& lambda) {
    if (!lambda.target().same_as(base.carrier()) || lambda.rows() != 1)
        throw DimensionMismatch("a copresheaf is a relation 1_q -|-> X");
    if (!is_copresheaf(base, lambda.source().degree(0), lambda.entries())) throw Error("relation is not a copresheaf");
    return Copresheaf{base, lambda.source().degree(0), lambda.entries()};
}

namespace {

// Checks the closure condition for the pairs among 0..k that involve k.
bool closed_at(const QOrderedSet& x, Variance v, const std::vector<Elem>& w, std::size_t k) {
    const auto& q = x.quantale();
    for (std::size_t i = 0; i <= k; ++i) {
        for (int pass = 0; pass < 2; ++pass) {
            std::size_t a = pass == 0 ? i : k, b = pass == 0 ? k : i;  // need w-closure from b to a
            bool ok = v == Variance::lower
                          ? q.leq(q.mul(q.res_left(w[b], x.degree(b)), x.alpha(a, b)), w[a])
                          : q.leq(q.mul(q.res_left(x.alpha(b, a), x.degree(b)), w[b]), w[a]);
            if (!ok) return false;
        }
    }
    return true;
}

bool is_weight(const QOrderedSet& x, Variance v, Elem degree, const std::vector<Elem>& values) {
    const auto& q = x.quantale();
    if (values.size() != x.size() || degree >= q.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        ElemSet allowed = v == Variance::lower ? q.diagonal(x.degree(i), degree) : q.diagonal(degree, x.degree(i));
        if (values[i] >= q.size() || !allowed.contains(values[i])) return false;
    }
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!closed_at(x, v, values, k)) return false;
    return true;
}

ElemSet candidates(const QOrderedSet& x, Variance v, std::size_t i, Elem degree) {
    const auto& q = x.quantale();
    return v == Variance::lower ? q.diagonal(x.degree(i), degree) : q.diagonal(degree, x.degree(i));
}

}  // namespace

bool is_presheaf(const QOrderedSet& x, Elem degree, const std::vector<Elem>& values) {
    return is_weight(x, Variance::lower, degree, values);
}

bool is_copresheaf(const QOrderedSet& x, Elem degree, const std::vector<Elem>& values) {
    return is_weight(x, Variance::upper, degree, values);
}

Elem presheaf_hom(const Presheaf& mu, const Presheaf& nu) {
    return imp_left_entry(nu.relation(), mu.relation(), 0, 0);
}

Elem copresheaf_hom(const Copresheaf& lambda, const Copresheaf& kappa) {
    return imp_right_entry(kappa.relation(), lambda.relation(), 0, 0);
}

std::string weight_label(const FiniteQuantale& q, Elem degree, const std::vector<Elem>& values) {
    std::string s = q.label(degree) + "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += q.label(values[i]);
    }
    return s + "]";
}

std::size_t powerset_candidates(const QOrderedSet& x, Variance v) {
    const auto& q = x.quantale();
    double total = 0;
    for (std::size_t d = 0; d < q.size(); ++d) {
        double prod = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            prod *= static_cast<double>(candidates(x, v, i, static_cast<Elem>(d)).size());
        total += prod;
    }
    return total > 1e18 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(total);
}

PowersetOrder build_powerset(const QOrderedSet& x, Variance v, const Caps& caps) {
    const auto& q = x.quantale();
    const std::size_t n = x.size();
    if (std::size_t c = powerset_candidates(x, v); c > caps.powerset)
        throw SizeCap("powerset enumeration needs " + std::to_string(c) + " candidates; cap is " +
                      std::to_string(caps.powerset));

    std::vector<std::vector<Elem>> values;
    std::map<std::pair<Elem, std::vector<Elem>>, std::size_t> index;
    std::vector<Elem> degrees;
    for (std::size_t d = 0; d < q.size(); ++d) {
        const auto deg = static_cast<Elem>(d);
        std::vector<std::vector<Elem>> cand(n);
        for (std::size_t i = 0; i < n; ++i) cand[i] = candidates(x, v, i, deg).elements();
        std::vector<Elem> w(n);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == n) {
                index.emplace(std::make_pair(deg, w), values.size());
                values.push_back(w);
                degrees.push_back(deg);
                return;
            }
            for (Elem c : cand[k]) {
                w[k] = c;
                if (closed_at(x, v, w, k)) self(self, k + 1);
            }
        };
        rec(rec, 0);
    }

    const std::size_t m = values.size();
    std::vector<std::string> labels;
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) labels.push_back(weight_label(q, degrees[i], values[i]));
    QSubset carrier(x.quantale_ptr(), std::move(labels), degrees);

    std::vector<QSubset> ones;
    for (std::size_t d = 0; d < q.size(); ++d) ones.push_back(QSubset::singleton(x.quantale_ptr(), static_cast<Elem>(d)));
    std::vector<QRelation> rels;
    rels.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        rels.push_back(v == Variance::lower ? QRelation::trusted(x.carrier(), ones[degrees[i]], values[i])
                                            : QRelation::trusted(ones[degrees[i]], x.carrier(), values[i]));
    std::vector<Elem> order(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            order[i * m + j] = v == Variance::lower ? imp_left_entry(rels[j], rels[i], 0, 0)
                                                    : imp_right_entry(rels[j], rels[i], 0, 0);
    auto ordered = QOrderedSet::trusted(QRelation::trusted(carrier, carrier, std::move(order)));
    return PowersetOrder(std::make_shared<const PowersetOrder::Data>(
        PowersetOrder::Data{v, x, std::move(ordered), std::move(values), std::move(index)}));
}

PowersetOrder presheaves(const QOrderedSet& x, const Caps& caps) {
    return build_powerset(x, Variance::lower, caps);
}

PowersetOrder copresheaves(const QOrderedSet& x, const Caps& caps) {
    return build_powerset(x, Variance::upper, caps);
}

std::optional<std::size_t> PowersetOrder::index_of(Elem degree, const std::vector<Elem>& values) const {
    auto it = d_->index.find(std::make_pair(degree, values));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t PowersetOrder::index_of(const QRelation& r) const {
    std::optional<std::size_t> i;
    if (variance() == Variance::lower) {
        if (!r.source().same_as(base().carrier()) || r.cols() != 1)
            throw DimensionMismatch("expected a relation X -|-> 1_q");
        i = index_of(r.target().degree(0), r.entries());
    } else {
        if (!r.target().same_as(base().carrier()) || r.rows() != 1)
            throw DimensionMismatch("expected a relation 1_q -|-> X");
        i = index_of(r.source().degree(0), r.entries());
    }
    if (!i) throw Error("relation is not an element of the powerset");
    return *i;
}

Presheaf PowersetOrder::presheaf(std::size_t i) const {
    if (variance() != Variance::lower) throw Error("not a presheaf powerset");
    return Presheaf{base(), degree(i), values(i)};
}

Copresheaf PowersetOrder::copresheaf(std::size_t i) const {
    if (variance() != Variance::upper) throw Error("not a copresheaf powerset");
    return Copresheaf{base(), degree(i), values(i)};
}

QRelation PowersetOrder::relation(std::size_t i) const {
    return variance() == Variance::lower ? presheaf(i).relation() : copresheaf(i).relation();
}

Presheaf yoneda(const QOrderedSet& x, std::size_t i) {
    std::vector<Elem> col(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) col[j] = x.alpha(j, i);
    return Presheaf{x, x.degree(i), std::move(col)};
}

Copresheaf co_yoneda(const QOrderedSet& x, std::size_t i) {
    std::vector<Elem> row(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) row[j] = x.alpha(i, j);
    return Copresheaf{x, x.degree(i), std::move(row)};
}

QOrderMap yoneda_map(const PowersetOrder& px) {
    const auto& x = px.base();
    std::vector<std::size_t> f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto y = yoneda(x, i);
        f[i] = *px.index_of(y.degree, y.values);
    }
    return QOrderMap(x, px.ordered(), std::move(f));
}

QOrderMap co_yoneda_map(const PowersetOrder& pdx) {
    const auto& x = pdx.base();
    std::vector<std::size_t> f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto y = co_yoneda(x, i);
        f[i] = *pdx.index_of(y.degree, y.values);
    }
    return QOrderMap(x, pdx.ordered(), std::move(f));
}

QOrderMap powerset_map(const PowersetOrder& from, const PowersetOrder& to,
                       const std::function<QRelation(const QRelation&)>& op) {
    std::vector<std::size_t> f(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) f[i] = to.index_of(op(from.relation(i)));
    return QOrderMap(from.ordered(), to.ordered(), std::move(f));
}

ImageMaps image_maps(const QOrderMap& f, const PowersetOrder& px, const PowersetOrder& py, const PowersetOrder& pdx,
                     const PowersetOrder& pdy) {
    QRelation g = graph(f), c = cograph(f);
    return ImageMaps{
        powerset_map(px, py, [&](const QRelation& mu) { return compose(mu, c); }),
        powerset_map(py, px, [&](const QRelation& mu) { return compose(mu, g); }),
        powerset_map(pdx, pdy, [&](const QRelation& lam) { return compose(g, lam); }),
        powerset_map(pdy, pdx, [&](const QRelation& lam) { return compose(c, lam); }),
    };
}

}  // namespace qorder
