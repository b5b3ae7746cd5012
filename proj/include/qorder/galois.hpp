#pragma once

#include "qorder/completion.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qorder {

// PX and P+X of one ordered set, enumerated once and shared.
struct Powersets {
    PowersetOrder lower;
    PowersetOrder upper;
    const QOrderedSet& base() const { return lower.base(); }
};

Powersets powersets(const QOrderedSet& x, const Caps& caps = Caps::from_env());

struct DistributorCheck {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // first (x,y) where 1_Y o phi o 1_X exceeds phi
};

// phi: X -|-> Y is a distributor when 1_Y o phi o 1_X <= phi.
DistributorCheck is_distributor(const QRelation& phi, const QOrderedSet& x, const QOrderedSet& y);

// Five equivalent formulations of the distributor condition.
struct DistributorForms {
    bool composite = false;     // 1_Y o phi o 1_X <= phi
    bool elementwise = false;   // per-entry inequality over all x,x',y,y'
    bool one_sided = false;     // phi o 1_X <= phi and 1_Y o phi <= phi
    bool weights = false;       // rows are copresheaves on Y, columns presheaves on X
    bool implications = false;  // 1_X <= phi -> phi and 1_Y <= phi <- phi
    bool agree() const {
        return composite == elementwise && composite == one_sided && composite == weights && composite == implications;
    }
};

DistributorForms distributor_forms(const QRelation& phi, const QOrderedSet& x, const QOrderedSet& y);

// The least distributor above r: 1_Y o r o 1_X.
QRelation distributor_closure(const QRelation& r, const QOrderedSet& x, const QOrderedSet& y);

// phi: X -|-> Y left adjoint to psi: Y -|-> X: 1_X <= psi o phi and phi o psi <= 1_Y.
bool is_dist_adjoint(const QRelation& phi, const QRelation& psi, const QOrderedSet& x, const QOrderedSet& y);

// f -| g: 1_X <= g f and f g <= 1_Y.
bool is_galois(const QOrderMap& f, const QOrderMap& g);
// The same adjunction tested through graphs: beta(fx,y) = alpha(x,gy).
bool graph_criterion(const QOrderMap& f, const QOrderMap& g);

// Side::right finds every g with f -| g; Side::left every g with g -| f.
// Throws SizeCap when the number of adjoints exceeds caps.adjoints.
std::vector<QOrderMap> find_adjoint(const QOrderMap& f, Side side, const Caps& caps = Caps::from_env());

// For f: X -> Y with X complete, the three conditions must coincide:
// f is a left adjoint, f preserves suprema, and f is a left adjoint of the
// underlying preorders that also preserves tensors.
struct LeftAdjointReport {
    bool left_adjoint = false;
    bool sup_preserving = false;
    bool underlying_adjoint = false;
    bool tensor_preserving = false;
    bool consistent() const {
        return left_adjoint == sup_preserving && left_adjoint == (underlying_adjoint && tensor_preserving);
    }
};

LeftAdjointReport left_adjoint_report(const QOrderMap& f, const Caps& caps = Caps::from_env());

// Dual: for f with X cocomplete, right adjoint, inf-preserving and
// underlying right adjoint plus cotensor preservation coincide.
struct RightAdjointReport {
    bool right_adjoint = false;
    bool inf_preserving = false;
    bool underlying_adjoint = false;
    bool cotensor_preserving = false;
    bool consistent() const {
        return right_adjoint == inf_preserving && right_adjoint == (underlying_adjoint && cotensor_preserving);
    }
};

RightAdjointReport right_adjoint_report(const QOrderMap& f, const Caps& caps = Caps::from_env());

enum class PairKind { polarity, axiality, dual_axiality };

const char* to_string(PairKind kind);

// A Galois connection left -| right between powersets, left: domain -> codomain.
struct InducedPair {
    PairKind kind;
    PowersetOrder domain;
    PowersetOrder codomain;
    QOrderMap left;
    QOrderMap right;
};

// For a distributor phi: X -|-> Y:
//   isbell:   PX  -> P+Y, mu  |-> phi <- mu;   back lam |-> lam -> phi
//   kan:      PY  -> PX,  mu' |-> mu' o phi;   back mu  |-> mu <- phi
//   dual_kan: P+Y -> P+X, lam'|-> phi -> lam'; back lam |-> phi o lam
InducedPair isbell(const QRelation& phi, const Powersets& x, const Powersets& y);
InducedPair kan(const QRelation& phi, const Powersets& x, const Powersets& y);
InducedPair dual_kan(const QRelation& phi, const Powersets& x, const Powersets& y);

struct LiftedPairs {
    InducedPair polarity;
    InducedPair axiality;
    InducedPair dual_axiality;
};

// Lifts f -| g: X -> Y through the graph f_nat = g^nat.
LiftedPairs lift_galois(const QOrderMap& f, const QOrderMap& g, const Powersets& x, const Powersets& y);

// Recovers the distributor inducing a pair: phi(x,-) = left(y x) for a
// polarity, phi(-,y) = left(y y) for an axiality, phi(x,-) = right(y+ x)
// for a dual axiality. Throws NotAdjoint if the maps are not adjoint.
QRelation dist_from_pair(const InducedPair& pair);

// Elements a of the domain with right(left(a)) = a, or elements b of the
// codomain with left(right(b)) = b, with the inherited order.
struct FixedPoints {
    QOrderedSet ordered;
    std::vector<std::size_t> indices;  // into the powerset they were taken from
};

FixedPoints fixed_points(const InducedPair& pair, bool codomain_side = false);

// Fixed points of the Isbell adjunction of the order itself, inside PX.
FixedPoints macneille(const QOrderedSet& x, const Caps& caps = Caps::from_env());

enum class ConceptMode { fca, rst };

struct Concept {
    Elem degree;
    std::vector<Elem> extent;  // presheaf on the objects
    std::vector<Elem> intent;  // copresheaf (fca) or presheaf (rst) on the attributes
};

struct ConceptLattice {
    QRelation context;
    ConceptMode mode;
    FixedPoints extents;  // inside PX
    std::vector<Concept> concepts;
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) in the underlying order
};

// context: X -|-> Y between discrete ordered sets. FCA uses the Isbell
// adjunction, RST the Kan adjunction; concepts of every degree are kept.
ConceptLattice concept_lattice(const QRelation& context, ConceptMode mode, const Caps& caps = Caps::from_env());

// Covers of the quotient poset of the underlying preorder, as pairs of
// representatives (the least index in each class).
std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const QOrderedSet& x);

// mu: X -|-> 1_q is a right adjoint: some lambda: 1_q -|-> X has lambda -| mu.
std::vector<std::size_t> right_adjoint_witnesses(const Presheaf& mu, const PowersetOrder& pdx);
bool is_right_adjoint_dist(const Presheaf& mu, const Caps& caps = Caps::from_env());

// (PX)_c: the right adjoint presheaves, inside PX.
FixedPoints cauchy_presheaves(const Powersets& x);

struct CauchyReport {
    bool cauchy_complete = false;
    std::size_t right_adjoint_count = 0;
    std::size_t left_adjoint_witnesses = 0;
};

// Whether the corestricted Yoneda map X -> (PX)_c has a left adjoint.
CauchyReport cauchy_report(const QOrderedSet& x, const Caps& caps = Caps::from_env());
bool is_cauchy_complete(const QOrderedSet& x, const Caps& caps = Caps::from_env());

}  // namespace qorder
