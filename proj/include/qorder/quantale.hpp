#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qorder {

using Elem = std::uint16_t;

// A set of quantale elements; quantales are limited to 64 elements.
class ElemSet {
public:
    ElemSet() = default;
    static ElemSet from_bits(std::uint64_t bits) { ElemSet s; s.bits_ = bits; return s; }

    bool contains(Elem x) const { return (bits_ >> x) & 1u; }
    void insert(Elem x) { bits_ |= std::uint64_t{1} << x; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }
    std::vector<Elem> elements() const;

    friend bool operator==(ElemSet, ElemSet) = default;

private:
    std::uint64_t bits_ = 0;
};

enum class Side { left, right };

struct Classification {
    bool integral = false;
    bool divisible = false;
    bool commutative = false;
    ElemSet idempotents_above_unit;
};

class FiniteQuantale;
using QuantalePtr = std::shared_ptr<const FiniteQuantale>;

// A finite unital quantale given by its order, multiplication and unit.
// Construction validates every axiom and precomputes joins, meets,
// residuations and diagonal sets.
class FiniteQuantale {
public:
    static constexpr std::size_t max_size = 64;

    // leq is row-major n*n and must already be reflexive and transitive.
    FiniteQuantale(std::string name, std::vector<std::string> labels, std::vector<bool> leq,
                   std::vector<Elem> mul, Elem unit);

    const std::string& name() const { return name_; }
    std::size_t size() const { return n_; }
    const std::string& label(Elem x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Elem> find(std::string_view label) const;
    // Like find, but also accepts the aliases "e", "bot" and "top".
    std::optional<Elem> resolve(std::string_view token) const;

    Elem unit() const { return unit_; }
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }

    bool leq(Elem a, Elem b) const { return leq_[a * n_ + b]; }
    Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
    Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }

    // r/q: the largest p with p & q <= r.
    Elem res_left(Elem r, Elem q) const { return res_left_[r * n_ + q]; }
    // p\r: the largest q with p & q <= r.
    Elem res_right(Elem p, Elem r) const { return res_right_[p * n_ + r]; }
    // Side::left gives q/p, Side::right gives p\q.
    Elem residuate(Elem p, Elem q, Side side) const;

    ElemSet diagonal(Elem p, Elem q) const { return diag_[p * n_ + q]; }
    // Join of the members of D(p,q) below b; D(p,q) is join-closed so this
    // is the largest such member.
    Elem diagonal_floor(Elem p, Elem q, Elem b) const { return floor_[(p * n_ + q) * n_ + b]; }
    Elem diagonal_top(Elem p, Elem q) const { return diagonal_floor(p, q, top_); }

    Elem join_all(ElemSet s) const;
    Elem meet_all(ElemSet s) const;
    ElemSet down_set(Elem x) const;

    Classification classify() const;
    FiniteQuantale conjugate() const;

    friend bool operator==(const FiniteQuantale& a, const FiniteQuantale& b);

private:
    void validate_and_derive();

    std::string name_;
    std::size_t n_;
    std::vector<std::string> labels_;
    std::vector<bool> leq_;
    std::vector<Elem> mul_;
    Elem unit_;
    Elem bottom_ = 0, top_ = 0;
    std::vector<Elem> join_, meet_, res_left_, res_right_, floor_;
    std::vector<ElemSet> diag_;
};

bool same_quantale(const QuantalePtr& a, const QuantalePtr& b);

// Parses the quantale text format:
//   quantale <name>
//   elements <l1> ... <ln>
//   unit <label>
//   order a<b [b<c ...]        cover pairs; chains a<b<c are allowed
//   mul <p> <q> <r>            one line for each of the n^2 pairs
// '#' starts a comment.
FiniteQuantale load_quantale(std::string_view text);
std::string to_text(const FiniteQuantale& q);

// Builtins: bool2, c3, c4, lukasiewicz(n), sup_endo(m), rel(k), free(<table>).
FiniteQuantale builtin(std::string_view name);
FiniteQuantale make_bool2();
FiniteQuantale make_c3();
FiniteQuantale make_c4();
FiniteQuantale make_lukasiewicz(int n);
// Sup-preserving self-maps of the m-element chain under composition.
FiniteQuantale make_sup_endo(int m);
// Binary relations on a k-element set under composition.
FiniteQuantale make_rel(int k);
// Powerset of a finite monoid; table[a][b] = a*b.
FiniteQuantale make_free(const std::vector<std::vector<int>>& table);

std::vector<std::string> builtin_names();

}  // namespace qorder
