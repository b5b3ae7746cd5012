#include "qorder/qrel.hpp"

#include "qorder/error.hpp"

#include <set>

namespace qorder {

QSubset::QSubset(QuantalePtr q, std::vector<std::string> labels, std::vector<Elem> membership) {
    if (!q) throw Error("QSubset needs a quantale");
    if (labels.size() != membership.size()) throw DimensionMismatch("labels and memberships differ in length");
    std::set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw Error("duplicate label '" + l + "'");
    for (Elem m : membership)
        if (m >= q->size()) throw Error("membership degree out of range");
    d_ = std::make_shared<const Data>(Data{std::move(q), std::move(labels), std::move(membership)});
}

QSubset QSubset::singleton(QuantalePtr q, Elem degree, std::string label) {
    return QSubset(std::move(q), {std::move(label)}, {degree});
}

std::optional<std::size_t> QSubset::find(std::string_view label) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (d_->labels[i] == label) return i;
    return std::nullopt;
}

bool QSubset::same_as(const QSubset& other) const {
    return d_ == other.d_ || (same_quantale(d_->q, other.d_->q) && d_->membership == other.d_->membership);
}

QRelation::QRelation(QSubset source, QSubset target, std::vector<Elem> entries)
    : QRelation(std::move(source), std::move(target), std::move(entries), true) {}

QRelation::QRelation(QSubset source, QSubset target, std::vector<Elem> entries, bool check)
    : src_(std::move(source)), tgt_(std::move(target)), e_(std::move(entries)) {
    if (!same_quantale(src_.quantale_ptr(), tgt_.quantale_ptr()))
        throw DimensionMismatch("source and target live over different quantales");
    if (e_.size() != src_.size() * tgt_.size())
        throw DimensionMismatch("relation needs " + std::to_string(src_.size()) + "x" + std::to_string(tgt_.size()) +
                                " entries, got " + std::to_string(e_.size()));
    if (!check) return;
    const auto& q = quantale();
    for (std::size_t x = 0; x < src_.size(); ++x)
        for (std::size_t y = 0; y < tgt_.size(); ++y) {
            Elem v = e_[x * tgt_.size() + y];
            if (v >= q.size()) throw EntryOutOfDiagonal(x, y, "entry out of range at (" + src_.label(x) + "," + tgt_.label(y) + ")");
            if (!q.diagonal(src_.degree(x), tgt_.degree(y)).contains(v))
                throw EntryOutOfDiagonal(x, y,
                                         "entry " + q.label(v) + " at (" + src_.label(x) + "," + tgt_.label(y) +
                                             ") is not in D(" + q.label(src_.degree(x)) + "," +
                                             q.label(tgt_.degree(y)) + ")");
        }
}

QRelation QRelation::trusted(QSubset source, QSubset target, std::vector<Elem> entries) {
    return QRelation(std::move(source), std::move(target), std::move(entries), false);
}

QRelation QRelation::bottom(const QSubset& source, const QSubset& target) {
    return trusted(source, target, std::vector<Elem>(source.size() * target.size(), source.quantale().bottom()));
}

QRelation QRelation::top(const QSubset& source, const QSubset& target) {
    const auto& q = source.quantale();
    std::vector<Elem> e(source.size() * target.size());
    for (std::size_t x = 0; x < source.size(); ++x)
        for (std::size_t y = 0; y < target.size(); ++y)
            e[x * target.size() + y] = q.diagonal_top(source.degree(x), target.degree(y));
    return trusted(source, target, std::move(e));
}

QRelation QRelation::row(std::size_t x) const {
    std::vector<Elem> e(e_.begin() + static_cast<std::ptrdiff_t>(x * cols()),
                        e_.begin() + static_cast<std::ptrdiff_t>((x + 1) * cols()));
    return trusted(QSubset::singleton(src_.quantale_ptr(), src_.degree(x), src_.label(x)), tgt_, std::move(e));
}

QRelation QRelation::col(std::size_t y) const {
    std::vector<Elem> e(rows());
    for (std::size_t x = 0; x < rows(); ++x) e[x] = (*this)(x, y);
    return trusted(src_, QSubset::singleton(src_.quantale_ptr(), tgt_.degree(y), tgt_.label(y)), std::move(e));
}

bool operator==(const QRelation& a, const QRelation& b) {
    return a.src_.same_as(b.src_) && a.tgt_.same_as(b.tgt_) && a.e_ == b.e_;
}

QRelation validate_relation(const QSubset& x, const QSubset& y, std::vector<Elem> matrix) {
    return QRelation(x, y, std::move(matrix));
}

namespace {

void require_same(const QSubset& a, const QSubset& b, const char* what) {
    if (!a.same_as(b)) throw DimensionMismatch(std::string(what) + ": carriers do not match");
}

}  // namespace

bool leq(const QRelation& a, const QRelation& b) {
    require_same(a.source(), b.source(), "leq");
    require_same(a.target(), b.target(), "leq");
    const auto& q = a.quantale();
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (!q.leq(a.entries()[i], b.entries()[i])) return false;
    return true;
}

QRelation identity(const QSubset& x) {
    const auto& q = x.quantale();
    std::vector<Elem> e(x.size() * x.size(), q.bottom());
    for (std::size_t i = 0; i < x.size(); ++i) e[i * x.size() + i] = x.degree(i);
    return QRelation::trusted(x, x, std::move(e));
}

Elem compose_entry(const QRelation& psi, const QRelation& phi, std::size_t x, std::size_t z) {
    const auto& q = phi.quantale();
    const auto& mid = phi.target();
    Elem acc = q.bottom();
    for (std::size_t y = 0; y < mid.size(); ++y)
        acc = q.join(acc, q.mul(q.res_left(psi(y, z), mid.degree(y)), phi(x, y)));
    return acc;
}

QRelation compose(const QRelation& psi, const QRelation& phi) {
    require_same(psi.source(), phi.target(), "compose");
    const std::size_t nx = phi.rows(), nz = psi.cols();
    std::vector<Elem> e(nx * nz);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t z = 0; z < nz; ++z) e[x * nz + z] = compose_entry(psi, phi, x, z);
    return QRelation::trusted(phi.source(), psi.target(), std::move(e));
}

QRelation hom_join(std::span<const QRelation> rels, const QSubset& source, const QSubset& target) {
    QRelation out = QRelation::bottom(source, target);
    std::vector<Elem> e = out.entries();
    const auto& q = source.quantale();
    for (const auto& r : rels) {
        require_same(r.source(), source, "hom_join");
        require_same(r.target(), target, "hom_join");
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = q.join(e[i], r.entries()[i]);
    }
    return QRelation::trusted(source, target, std::move(e));
}

QRelation hom_meet(std::span<const QRelation> rels, const QSubset& source, const QSubset& target) {
    const auto& q = source.quantale();
    std::vector<Elem> m(source.size() * target.size(), q.top());
    for (const auto& r : rels) {
        require_same(r.source(), source, "hom_meet");
        require_same(r.target(), target, "hom_meet");
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = q.meet(m[i], r.entries()[i]);
    }
    for (std::size_t x = 0; x < source.size(); ++x)
        for (std::size_t y = 0; y < target.size(); ++y) {
            Elem& v = m[x * target.size() + y];
            v = q.diagonal_floor(source.degree(x), target.degree(y), v);
        }
    return QRelation::trusted(source, target, std::move(m));
}

QRelation hom_join(const QRelation& a, const QRelation& b) {
    const QRelation both[] = {a, b};
    return hom_join(both, a.source(), a.target());
}

QRelation hom_meet(const QRelation& a, const QRelation& b) {
    const QRelation both[] = {a, b};
    return hom_meet(both, a.source(), a.target());
}

Elem imp_left_entry(const QRelation& xi, const QRelation& phi, std::size_t y, std::size_t z) {
    const auto& q = xi.quantale();
    Elem dy = phi.target().degree(y);
    Elem bound = q.top();
    for (std::size_t x = 0; x < phi.rows(); ++x)
        bound = q.meet(bound, q.res_left(xi(x, z), q.res_right(dy, phi(x, y))));
    return q.diagonal_floor(dy, xi.target().degree(z), bound);
}

QRelation imp_left(const QRelation& xi, const QRelation& phi) {
    require_same(xi.source(), phi.source(), "imp_left");
    const std::size_t ny = phi.cols(), nz = xi.cols();
    std::vector<Elem> e(ny * nz);
    for (std::size_t y = 0; y < ny; ++y)
        for (std::size_t z = 0; z < nz; ++z) e[y * nz + z] = imp_left_entry(xi, phi, y, z);
    return QRelation::trusted(phi.target(), xi.target(), std::move(e));
}

Elem imp_right_entry(const QRelation& psi, const QRelation& xi, std::size_t x, std::size_t y) {
    const auto& q = xi.quantale();
    Elem dy = psi.source().degree(y);
    Elem bound = q.top();
    for (std::size_t z = 0; z < psi.cols(); ++z)
        bound = q.meet(bound, q.res_right(q.res_left(psi(y, z), dy), xi(x, z)));
    return q.diagonal_floor(xi.source().degree(x), dy, bound);
}

QRelation imp_right(const QRelation& psi, const QRelation& xi) {
    require_same(psi.target(), xi.target(), "imp_right");
    const std::size_t nx = xi.rows(), ny = psi.rows();
    std::vector<Elem> e(nx * ny);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) e[x * ny + y] = imp_right_entry(psi, xi, x, y);
    return QRelation::trusted(xi.source(), psi.source(), std::move(e));
}

}  // namespace qorder
