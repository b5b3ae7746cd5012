#pragma once

#include "qorder/quantale.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qorder {

// A finite set with a membership degree in Q for each element. Cheap to copy.
class QSubset {
public:
    QSubset(QuantalePtr q, std::vector<std::string> labels, std::vector<Elem> membership);
    // The singleton 1_q.
    static QSubset singleton(QuantalePtr q, Elem degree, std::string label = "*");

    const FiniteQuantale& quantale() const { return *d_->q; }
    const QuantalePtr& quantale_ptr() const { return d_->q; }
    std::size_t size() const { return d_->labels.size(); }
    const std::string& label(std::size_t i) const { return d_->labels[i]; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    Elem degree(std::size_t i) const { return d_->membership[i]; }
    const std::vector<Elem>& membership() const { return d_->membership; }
    std::optional<std::size_t> find(std::string_view label) const;

    // Same quantale and memberships; labels are ignored.
    bool same_as(const QSubset& other) const;

private:
    struct Data {
        QuantalePtr q;
        std::vector<std::string> labels;
        std::vector<Elem> membership;
    };
    std::shared_ptr<const Data> d_;
};

// A Q-relation X -|-> Y: an |X| x |Y| matrix with (x,y) entry in D(|x|,|y|).
class QRelation {
public:
    // Checks dimensions and diagonal membership of every entry.
    QRelation(QSubset source, QSubset target, std::vector<Elem> entries);

    static QRelation bottom(const QSubset& source, const QSubset& target);
    // The largest relation: each entry is the top of its diagonal set.
    static QRelation top(const QSubset& source, const QSubset& target);
    // Skips the diagonal check; for results the calculus guarantees valid.
    static QRelation trusted(QSubset source, QSubset target, std::vector<Elem> entries);

    const QSubset& source() const { return src_; }
    const QSubset& target() const { return tgt_; }
    const FiniteQuantale& quantale() const { return src_.quantale(); }
    std::size_t rows() const { return src_.size(); }
    std::size_t cols() const { return tgt_.size(); }
    Elem operator()(std::size_t x, std::size_t y) const { return e_[x * tgt_.size() + y]; }
    const std::vector<Elem>& entries() const { return e_; }

    // x-th row as a relation 1_{|x|} -|-> Y, y-th column as X -|-> 1_{|y|}.
    QRelation row(std::size_t x) const;
    QRelation col(std::size_t y) const;

    friend bool operator==(const QRelation& a, const QRelation& b);

private:
    QRelation(QSubset source, QSubset target, std::vector<Elem> entries, bool check);

    QSubset src_, tgt_;
    std::vector<Elem> e_;
};

QRelation validate_relation(const QSubset& x, const QSubset& y, std::vector<Elem> matrix);

// Entrywise order of the hom-lattice; both relations must share carriers.
bool leq(const QRelation& a, const QRelation& b);

QRelation identity(const QSubset& x);
// (psi o phi)(x,z) = join_y (psi(y,z) / |y|) & phi(x,y)
QRelation compose(const QRelation& psi, const QRelation& phi);
QRelation hom_join(std::span<const QRelation> rels, const QSubset& source, const QSubset& target);
QRelation hom_meet(std::span<const QRelation> rels, const QSubset& source, const QSubset& target);
QRelation hom_join(const QRelation& a, const QRelation& b);
QRelation hom_meet(const QRelation& a, const QRelation& b);

// xi: X -|-> Z, phi: X -|-> Y; the largest psi: Y -|-> Z with psi o phi <= xi.
QRelation imp_left(const QRelation& xi, const QRelation& phi);
// psi: Y -|-> Z, xi: X -|-> Z; the largest phi: X -|-> Y with psi o phi <= xi.
QRelation imp_right(const QRelation& psi, const QRelation& xi);

// Single entries of the operations above, for hot loops that avoid
// materialising whole relations.
Elem compose_entry(const QRelation& psi, const QRelation& phi, std::size_t x, std::size_t z);
Elem imp_left_entry(const QRelation& xi, const QRelation& phi, std::size_t y, std::size_t z);
Elem imp_right_entry(const QRelation& psi, const QRelation& xi, std::size_t x, std::size_t y);

}  // namespace qorder
