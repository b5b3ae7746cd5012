#pragma once

#include "qorder/caps.hpp"
#include "qorder/qrel.hpp"

#include <memory>
#include <vector>

namespace qorder {

// A Q-subset with a Q-preorder alpha: reflexive (|x| <= alpha(x,x)) and
// transitive (alpha o alpha <= alpha). Cheap to copy.
class QOrderedSet {
public:
    const QSubset& carrier() const { return d_->source(); }
    const QRelation& order() const { return *d_; }
    const FiniteQuantale& quantale() const { return d_->quantale(); }
    const QuantalePtr& quantale_ptr() const { return carrier().quantale_ptr(); }
    std::size_t size() const { return d_->rows(); }
    Elem alpha(std::size_t x, std::size_t y) const { return (*d_)(x, y); }
    Elem degree(std::size_t x) const { return carrier().degree(x); }
    const std::string& label(std::size_t x) const { return carrier().label(x); }

    // Identity relation as the order.
    static QOrderedSet discrete(const QSubset& carrier);
    static QOrderedSet from_relation(const QRelation& alpha);
    // Skips the preorder check; for orders the theory guarantees, such as
    // those of powersets, where the cubic transitivity scan is too slow.
    static QOrderedSet trusted(QRelation alpha) { return QOrderedSet(std::move(alpha)); }

private:
    friend QOrderedSet make_ordered(const QSubset& x, std::vector<Elem> alpha);
    explicit QOrderedSet(QRelation alpha) : d_(std::make_shared<const QRelation>(std::move(alpha))) {}
    std::shared_ptr<const QRelation> d_;
};

// Throws PreorderError naming the first failing axiom and its witness.
QOrderedSet make_ordered(const QSubset& x, std::vector<Elem> alpha);

// x <= y iff |x| = |y| and |x| <= alpha(x,y); row-major n*n.
std::vector<bool> underlying_preorder(const QOrderedSet& x);
bool is_separated(const QOrderedSet& x);

struct MapCheck {
    bool membership_preserving = false;
    bool order_preserving = false;
    bool fully_faithful = false;
};

MapCheck check_map(const std::vector<std::size_t>& f, const QOrderedSet& x, const QOrderedSet& y);

// A membership- and order-preserving map.
class QOrderMap {
public:
    // Throws InvalidMap unless f is membership- and order-preserving.
    QOrderMap(QOrderedSet source, QOrderedSet target, std::vector<std::size_t> assignment);

    const QOrderedSet& source() const { return src_; }
    const QOrderedSet& target() const { return tgt_; }
    const std::vector<std::size_t>& assignment() const { return f_; }
    std::size_t operator()(std::size_t x) const { return f_[x]; }

private:
    QOrderedSet src_, tgt_;
    std::vector<std::size_t> f_;
};

QOrderMap identity_map(const QOrderedSet& x);
// g after f.
QOrderMap compose_maps(const QOrderMap& g, const QOrderMap& f);
bool operator==(const QOrderMap& f, const QOrderMap& g);

// f_nat(x,y) = beta(fx,y) : X -|-> Y
QRelation graph(const QOrderMap& f);
// f^nat(y,x) = beta(y,fx) : Y -|-> X
QRelation cograph(const QOrderMap& f);

// f <= g iff |x| <= beta(fx,gx) for every x.
bool map_leq(const QOrderMap& f, const QOrderMap& g);

// The elements whose membership lies in s, with the restricted order.
QOrderedSet coreflect(const QOrderedSet& x, ElemSet s);
QOrderMap coreflect_inclusion(const QOrderedSet& x, ElemSet s);

// alpha is read as a valued preorder on a crisp set in the sense where
// membership is alpha(x,x); the result lives over the conjugate of q.
QOrderedSet from_hoehle(const QuantalePtr& q, std::vector<std::string> labels, std::vector<Elem> alpha);
std::vector<Elem> to_hoehle(const QOrderedSet& x);

// Every membership map making alpha a Q-preorder, in lexicographic order.
// Throws SizeCap when |Q|^n exceeds caps.memberships.
std::vector<std::vector<Elem>> enumerate_memberships(const QuantalePtr& q, std::size_t n, const std::vector<Elem>& alpha,
                                                     const Caps& caps = Caps::from_env());

}  // namespace qorder
