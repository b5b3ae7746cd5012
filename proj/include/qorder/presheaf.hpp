#pragma once

#include "qorder/caps.hpp"
#include "qorder/qord.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace qorder {

// A distributor mu: X -|-> 1_q, i.e. a potential lower Q-subset of degree q.
struct Presheaf {
    QOrderedSet base;
    Elem degree;
    std::vector<Elem> values;

    QRelation relation() const;
};

// A distributor lambda: 1_q -|-> X, i.e. a potential upper Q-subset.
struct Copresheaf {
    QOrderedSet base;
    Elem degree;
    std::vector<Elem> values;

    QRelation relation() const;
};

Presheaf as_presheaf(const QOrderedSet& base, const QRelation& mu);
Copresheaf as_copresheaf(const QOrderedSet& base, const QRelation& lambda);

// Closure conditions mu o alpha <= mu and alpha o lambda <= lambda, with
// every value in the relevant diagonal set.
bool is_presheaf(const QOrderedSet& x, Elem degree, const std::vector<Elem>& values);
bool is_copresheaf(const QOrderedSet& x, Elem degree, const std::vector<Elem>& values);

// 1_PX(mu,nu) = nu <- mu and 1_P+X(l,m) = m -> l, as single elements.
Elem presheaf_hom(const Presheaf& mu, const Presheaf& nu);
Elem copresheaf_hom(const Copresheaf& lambda, const Copresheaf& kappa);

enum class Variance { lower, upper };

// PX (lower) or P+X (upper): every (co)presheaf on a base, sorted by degree
// and then lexicographically by values, ordered as a separated Q-ordered set.
class PowersetOrder {
public:
    Variance variance() const { return d_->variance; }
    const QOrderedSet& base() const { return d_->base; }
    const QOrderedSet& ordered() const { return d_->ordered; }
    std::size_t size() const { return d_->values.size(); }
    Elem degree(std::size_t i) const { return d_->ordered.degree(i); }
    const std::vector<Elem>& values(std::size_t i) const { return d_->values[i]; }

    std::optional<std::size_t> index_of(Elem degree, const std::vector<Elem>& values) const;
    // Index of a relation X -|-> 1_q (lower) or 1_q -|-> X (upper); throws if absent.
    std::size_t index_of(const QRelation& r) const;
    Presheaf presheaf(std::size_t i) const;
    Copresheaf copresheaf(std::size_t i) const;
    // The element as a relation, in the orientation of the variance.
    QRelation relation(std::size_t i) const;

private:
    friend PowersetOrder build_powerset(const QOrderedSet&, Variance, const Caps&);
    struct Data {
        Variance variance;
        QOrderedSet base;
        QOrderedSet ordered;
        std::vector<std::vector<Elem>> values;
        std::map<std::pair<Elem, std::vector<Elem>>, std::size_t> index;
    };
    explicit PowersetOrder(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

// Label of a (co)presheaf: degree label followed by the bracketed values.
std::string weight_label(const FiniteQuantale& q, Elem degree, const std::vector<Elem>& values);

// Throws SizeCap when the candidate count sum_q prod_x |D(|x|,q)| exceeds
// caps.powerset.
PowersetOrder presheaves(const QOrderedSet& x, const Caps& caps = Caps::from_env());
PowersetOrder copresheaves(const QOrderedSet& x, const Caps& caps = Caps::from_env());
std::size_t powerset_candidates(const QOrderedSet& x, Variance v);

// y x = alpha(-,x) with degree |x|; y+ x = alpha(x,-).
Presheaf yoneda(const QOrderedSet& x, std::size_t i);
Copresheaf co_yoneda(const QOrderedSet& x, std::size_t i);
QOrderMap yoneda_map(const PowersetOrder& px);
QOrderMap co_yoneda_map(const PowersetOrder& pdx);

// The map between powersets sending each element's relation r to op(r).
QOrderMap powerset_map(const PowersetOrder& from, const PowersetOrder& to,
                       const std::function<QRelation(const QRelation&)>& op);

struct ImageMaps {
    QOrderMap forward;        // PX -> PY,   mu  |-> mu o f^nat
    QOrderMap backward;       // PY -> PX,   mu  |-> mu o f_nat
    QOrderMap dual_forward;   // P+X -> P+Y, lam |-> f_nat o lam
    QOrderMap dual_backward;  // P+Y -> P+X, lam |-> f^nat o lam
};

ImageMaps image_maps(const QOrderMap& f, const PowersetOrder& px, const PowersetOrder& py, const PowersetOrder& pdx,
                     const PowersetOrder& pdy);

}  // namespace qorder
