#pragma once

#include "qorder/presheaf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qorder {

// Suprema and infima are determined up to isomorphism in the underlying
// preorder, so each query returns every witness.
std::vector<std::size_t> sup(const QOrderedSet& x, const Presheaf& mu);
std::vector<std::size_t> inf(const QOrderedSet& x, const Copresheaf& lambda);

// ub mu = alpha <- mu, lb lambda = lambda -> alpha.
Copresheaf ub(const QOrderedSet& x, const Presheaf& mu);
Presheaf lb(const QOrderedSet& x, const Copresheaf& lambda);

// u (x) x for u in D(|x|,q): elements t of degree q with alpha(t,-) = alpha(x,-) <- u.
// Throws InvalidScalar when u is outside D(|x|,q).
std::vector<std::size_t> tensor(const QOrderedSet& x, Elem u, std::size_t at, Elem q);
// v -> x for v in D(q,|x|): elements t of degree q with alpha(-,t) = v -> alpha(-,x).
std::vector<std::size_t> cotensor(const QOrderedSet& x, Elem v, std::size_t at, Elem q);

// Every subset of each fibre X_q has a join up to isomorphism in the
// underlying preorder. Throws SizeCap on fibres larger than caps.subset_bits.
bool is_order_complete(const QOrderedSet& x, const Caps& caps = Caps::from_env());

struct CompletenessReport {
    bool complete = false;     // every presheaf has a supremum
    bool cocomplete = false;   // every copresheaf has an infimum
    bool tensored = false;
    bool cotensored = false;
    bool order_complete = false;
    std::optional<std::string> missing_sup;       // first presheaf without a supremum
    std::optional<std::string> missing_tensor;    // first (u, x, q) without a tensor
    std::optional<std::string> missing_cotensor;  // first (v, x, q) without a cotensor

    // complete iff tensored, cotensored and order-complete; complete iff cocomplete.
    bool consistent() const {
        return complete == (tensored && cotensored && order_complete) && complete == cocomplete;
    }
};

CompletenessReport completeness_report(const QOrderedSet& x, const Caps& caps = Caps::from_env());

struct PreservationResult {
    bool holds = true;
    std::optional<std::string> witness;
};

// f(sup mu) is a supremum of f->mu whenever sup mu exists.
PreservationResult is_sup_preserving(const QOrderMap& f, const Caps& caps = Caps::from_env());
// f(inf lambda) is an infimum of f_nat o lambda whenever inf lambda exists.
PreservationResult is_inf_preserving(const QOrderMap& f, const Caps& caps = Caps::from_env());

}  // namespace qorder
