#include "qorder/generate.hpp"

namespace qorder {

std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

QSubset random_subset(const QuantalePtr& q, Rng& rng, std::size_t min_size, std::size_t max_size) {
    std::size_t n = min_size + uniform_index(rng, max_size - min_size + 1);
    std::vector<std::string> labels;
    std::vector<Elem> deg;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i));
        deg.push_back(static_cast<Elem>(uniform_index(rng, q->size())));
    }
    return QSubset(q, std::move(labels), std::move(deg));
}

QRelation random_relation(const QSubset& x, const QSubset& y, Rng& rng, double density) {
    const auto& q = x.quantale();
    std::bernoulli_distribution keep(density);
    std::vector<Elem> e(x.size() * y.size(), q.bottom());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (!keep(rng)) continue;
            auto d = q.diagonal(x.degree(i), y.degree(j)).elements();
            e[i * y.size() + j] = d[uniform_index(rng, d.size())];
        }
    return QRelation::trusted(x, y, std::move(e));
}

QRelation preorder_closure(const QRelation& r) {
    QRelation a = hom_join(identity(r.source()), r);
    for (;;) {
        QRelation next = hom_join(a, compose(a, a));
        if (next == a) return a;
        a = std::move(next);
    }
}

QOrderedSet random_ordered(const QSubset& x, Rng& rng, double density) {
    return make_ordered(x, preorder_closure(random_relation(x, x, rng, density)).entries());
}

QOrderedSet random_ordered(const QuantalePtr& q, Rng& rng, std::size_t min_size, std::size_t max_size) {
    return random_ordered(random_subset(q, rng, min_size, max_size), rng);
}

QRelation random_distributor(const QOrderedSet& x, const QOrderedSet& y, Rng& rng, double density) {
    return compose(y.order(), compose(random_relation(x.carrier(), y.carrier(), rng, density), x.order()));
}

std::optional<QOrderMap> random_map(const QOrderedSet& x, const QOrderedSet& y, Rng& rng, std::size_t tries) {
    std::vector<std::vector<std::size_t>> options(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y.degree(j) == x.degree(i)) options[i].push_back(j);
        if (options[i].empty()) return std::nullopt;
    }
    for (std::size_t t = 0; t < tries; ++t) {
        std::vector<std::size_t> f(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) f[i] = options[i][uniform_index(rng, options[i].size())];
        if (check_map(f, x, y).order_preserving) return QOrderMap(x, y, std::move(f));
    }
    return std::nullopt;
}

}  // namespace qorder
