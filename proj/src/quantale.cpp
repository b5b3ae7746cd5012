#include "qorder/quantale.hpp"

#include "qorder/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace qorder {

const char* to_string(AxiomKind kind) {
    switch (kind) {
    case AxiomKind::not_a_lattice: return "not-a-lattice";
    case AxiomKind::non_associative: return "non-associative";
    case AxiomKind::unit_failure: return "unit-failure";
    case AxiomKind::non_distributive: return "non-distributive";
    case AxiomKind::trivial: return "trivial";
    }
    return "?";
}

std::vector<Elem> ElemSet::elements() const {
    std::vector<Elem> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(static_cast<Elem>(std::countr_zero(b)));
    return out;
}

FiniteQuantale::FiniteQuantale(std::string name, std::vector<std::string> labels, std::vector<bool> leq,
                               std::vector<Elem> mul, Elem unit)
    : name_(std::move(name)), n_(labels.size()), labels_(std::move(labels)), leq_(std::move(leq)),
      mul_(std::move(mul)), unit_(unit) {
    validate_and_derive();
}

void FiniteQuantale::validate_and_derive() {
    const std::size_t n = n_;
    if (n > max_size)
        throw UnsupportedSize("quantale has " + std::to_string(n) + " elements; at most 64 are supported");
    if (n == 0)
        throw AxiomError(AxiomKind::not_a_lattice, "empty carrier");
    if (leq_.size() != n * n || mul_.size() != n * n)
        throw Error("quantale tables must be " + std::to_string(n) + "x" + std::to_string(n));
    if (unit_ >= n)
        throw Error("unit index out of range");
    for (Elem v : mul_)
        if (v >= n) throw Error("multiplication table entry out of range");
    {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != n) throw Error("duplicate element label");
    }

    auto L = [&](std::size_t a, std::size_t b) { return static_cast<bool>(leq_[a * n + b]); };
    for (std::size_t a = 0; a < n; ++a) {
        if (!L(a, a)) throw AxiomError(AxiomKind::not_a_lattice, "order is not reflexive at " + labels_[a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && L(a, b) && L(b, a))
                throw AxiomError(AxiomKind::not_a_lattice,
                                 "order is not antisymmetric: " + labels_[a] + ", " + labels_[b]);
            for (std::size_t c = 0; c < n; ++c)
                if (L(a, b) && L(b, c) && !L(a, c))
                    throw AxiomError(AxiomKind::not_a_lattice, "order is not transitive");
        }
    }

    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::optional<std::size_t> lub, glb;
            for (std::size_t c = 0; c < n; ++c) {
                if (L(a, c) && L(b, c)) {
                    bool least = true;
                    for (std::size_t d = 0; d < n && least; ++d)
                        if (L(a, d) && L(b, d) && !L(c, d)) least = false;
                    if (least) lub = c;
                }
                if (L(c, a) && L(c, b)) {
                    bool greatest = true;
                    for (std::size_t d = 0; d < n && greatest; ++d)
                        if (L(d, a) && L(d, b) && !L(d, c)) greatest = false;
                    if (greatest) glb = c;
                }
            }
            if (!lub || !glb)
                throw AxiomError(AxiomKind::not_a_lattice,
                                 "no " + std::string(lub ? "meet" : "join") + " for " + labels_[a] + ", " + labels_[b]);
            join_[a * n + b] = static_cast<Elem>(*lub);
            meet_[a * n + b] = static_cast<Elem>(*glb);
        }
    }
    Elem bot = 0, top = 0;
    for (std::size_t a = 1; a < n; ++a) {
        bot = meet_[bot * n + a];
        top = join_[top * n + a];
    }
    bottom_ = bot;
    top_ = top;

    auto M = [&](std::size_t a, std::size_t b) { return mul_[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a)
        if (M(unit_, a) != a || M(a, unit_) != a)
            throw AxiomError(AxiomKind::unit_failure, labels_[unit_] + " is not a two-sided unit at " + labels_[a]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (M(M(a, b), c) != M(a, M(b, c)))
                    throw AxiomError(AxiomKind::non_associative,
                                     "(" + labels_[a] + "*" + labels_[b] + ")*" + labels_[c] + " != " + labels_[a] +
                                         "*(" + labels_[b] + "*" + labels_[c] + ")");
    for (std::size_t a = 0; a < n; ++a) {
        if (M(a, bot) != bot || M(bot, a) != bot)
            throw AxiomError(AxiomKind::non_distributive, "bottom is not absorbing at " + labels_[a]);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Elem j = join_[b * n + c];
                if (M(a, j) != join_[M(a, b) * n + M(a, c)] || M(j, a) != join_[M(b, a) * n + M(c, a)])
                    throw AxiomError(AxiomKind::non_distributive, "multiplication by " + labels_[a] +
                                                                      " does not preserve the join of " + labels_[b] +
                                                                      ", " + labels_[c]);
            }
    }
    if (unit_ == bot)
        throw AxiomError(AxiomKind::trivial, "unit equals bottom");

    res_left_.assign(n * n, bot);
    res_right_.assign(n * n, bot);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t q = 0; q < n; ++q) {
            Elem left = bot, right = bot;
            for (std::size_t p = 0; p < n; ++p) {
                if (L(M(p, q), r)) left = join_[left * n + p];
                if (L(M(q, p), r)) right = join_[right * n + p];
            }
            res_left_[r * n + q] = left;   // r/q
            res_right_[q * n + r] = right; // q\r
        }

    diag_.assign(n * n, ElemSet{});
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            ElemSet s;
            for (std::size_t u = 0; u < n; ++u)
                if (M(res_left_[u * n + p], p) == u && M(q, res_right_[q * n + u]) == u) s.insert(static_cast<Elem>(u));
            diag_[p * n + q] = s;
        }

    floor_.assign(n * n * n, bot);
    for (std::size_t pq = 0; pq < n * n; ++pq)
        for (std::size_t b = 0; b < n; ++b) {
            Elem acc = bot;
            for (Elem u : diag_[pq].elements())
                if (L(u, b)) acc = join_[acc * n + u];
            floor_[pq * n + b] = acc;
        }
}

std::optional<Elem> FiniteQuantale::find(std::string_view label) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (labels_[i] == label) return static_cast<Elem>(i);
    return std::nullopt;
}

std::optional<Elem> FiniteQuantale::resolve(std::string_view token) const {
    if (auto x = find(token)) return x;
    if (token == "e") return unit_;
    if (token == "bot") return bottom_;
    if (token == "top") return top_;
    return std::nullopt;
}

Elem FiniteQuantale::residuate(Elem p, Elem q, Side side) const {
    return side == Side::left ? res_left(q, p) : res_right(p, q);
}

Elem FiniteQuantale::join_all(ElemSet s) const {
    Elem acc = bottom_;
    for (Elem x : s.elements()) acc = join(acc, x);
    return acc;
}

Elem FiniteQuantale::meet_all(ElemSet s) const {
    Elem acc = top_;
    for (Elem x : s.elements()) acc = meet(acc, x);
    return acc;
}

ElemSet FiniteQuantale::down_set(Elem x) const {
    ElemSet s;
    for (std::size_t y = 0; y < n_; ++y)
        if (leq(static_cast<Elem>(y), x)) s.insert(static_cast<Elem>(y));
    return s;
}

Classification FiniteQuantale::classify() const {
    Classification c;
    c.integral = unit_ == top_;
    c.divisible = true;
    c.commutative = true;
    for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t q = 0; q < n_; ++q) {
            auto a = static_cast<Elem>(p), b = static_cast<Elem>(q);
            if (diagonal(a, b) != down_set(meet(a, b))) c.divisible = false;
            if (mul(a, b) != mul(b, a)) c.commutative = false;
        }
    for (std::size_t q = 0; q < n_; ++q) {
        auto x = static_cast<Elem>(q);
        if (mul(x, x) == x && leq(unit_, x)) c.idempotents_above_unit.insert(x);
    }
    return c;
}

FiniteQuantale FiniteQuantale::conjugate() const {
    std::vector<Elem> t(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) t[a * n_ + b] = mul_[b * n_ + a];
    std::string name = name_;
    if (name.size() > 2 && name.ends_with("^t"))
        name.resize(name.size() - 2);
    else
        name += "^t";
    return FiniteQuantale(std::move(name), labels_, leq_, std::move(t), unit_);
}

bool operator==(const FiniteQuantale& a, const FiniteQuantale& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_ && a.mul_ == b.mul_ && a.unit_ == b.unit_;
}

bool same_quantale(const QuantalePtr& a, const QuantalePtr& b) {
    return a == b || (a && b && *a == *b);
}

namespace {

std::vector<bool> closure(std::size_t n, std::vector<bool> rel) {
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel[k * n + j]) rel[i * n + j] = true;
    return rel;
}

FiniteQuantale from_tables(std::string name, std::vector<std::string> labels, const std::vector<bool>& strict,
                           std::vector<Elem> mul, Elem unit) {
    std::size_t n = labels.size();
    return FiniteQuantale(std::move(name), std::move(labels), closure(n, strict), std::move(mul), unit);
}

int parse_int(std::string_view s, const std::string& what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error("bad integer in " + what + ": " + std::string(s));
    return v;
}

}  // namespace

FiniteQuantale load_quantale(std::string_view text) {
    std::optional<std::string> name;
    std::vector<std::string> labels;
    std::map<std::string, Elem, std::less<>> index;
    std::optional<std::string> unit_label;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> order_lines, mul_lines;
    std::size_t unit_line = 0;

    std::size_t lineno = 0;
    for (const auto& raw : detail::split_lines(text)) {
        ++lineno;
        auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "quantale") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'quantale <name>'");
            if (name) throw ParseError(lineno, "duplicate 'quantale' line");
            name = toks[1];
        } else if (kw == "elements") {
            if (!labels.empty()) throw ParseError(lineno, "duplicate 'elements' line");
            if (toks.size() < 2) throw ParseError(lineno, "no elements listed");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].find_first_of("<:") != std::string::npos)
                    throw ParseError(lineno, "element label may not contain '<' or ':': " + toks[i]);
                if (!index.emplace(toks[i], static_cast<Elem>(labels.size())).second)
                    throw ParseError(lineno, "duplicate element " + toks[i]);
                labels.push_back(toks[i]);
            }
        } else if (kw == "unit") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'unit <label>'");
            unit_label = toks[1];
            unit_line = lineno;
        } else if (kw == "order") {
            order_lines.emplace_back(lineno, std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else if (kw == "mul") {
            if (toks.size() != 4) throw ParseError(lineno, "expected 'mul <p> <q> <r>'");
            mul_lines.emplace_back(lineno, std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!name) throw ParseError(lineno, "missing 'quantale <name>' line");
    if (labels.empty()) throw ParseError(lineno, "missing 'elements' line");
    if (labels.size() > FiniteQuantale::max_size)
        throw UnsupportedSize("quantale has " + std::to_string(labels.size()) + " elements; at most 64 are supported");
    if (!unit_label) throw ParseError(lineno, "missing 'unit' line");

    auto lookup = [&](std::size_t line, const std::string& l) {
        auto it = index.find(l);
        if (it == index.end()) throw ParseError(line, "unknown element '" + l + "'");
        return it->second;
    };
    const std::size_t n = labels.size();
    Elem unit = lookup(unit_line, *unit_label);

    std::vector<bool> strict(n * n, false);
    for (const auto& [line, toks] : order_lines)
        for (const auto& tok : toks) {
            auto chain = detail::split(tok, '<');
            if (chain.size() < 2) throw ParseError(line, "expected a<b, got '" + tok + "'");
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                strict[lookup(line, chain[i]) * n + lookup(line, chain[i + 1])] = true;
        }

    std::vector<Elem> mul(n * n, 0);
    std::vector<bool> seen(n * n, false);
    for (const auto& [line, toks] : mul_lines) {
        Elem p = lookup(line, toks[0]), q = lookup(line, toks[1]), r = lookup(line, toks[2]);
        if (seen[p * n + q] && mul[p * n + q] != r)
            throw ParseError(line, "conflicting product for " + toks[0] + " " + toks[1]);
        seen[p * n + q] = true;
        mul[p * n + q] = r;
    }
    for (std::size_t i = 0; i < n * n; ++i)
        if (!seen[i])
            throw ParseError(lineno, "missing product for " + labels[i / n] + " " + labels[i % n]);

    return from_tables(*name, std::move(labels), strict, std::move(mul), unit);
}

std::string to_text(const FiniteQuantale& q) {
    std::ostringstream out;
    const auto n = static_cast<Elem>(q.size());
    out << "quantale " << q.name() << "\n";
    out << "elements";
    for (Elem a = 0; a < n; ++a) out << ' ' << q.label(a);
    out << "\nunit " << q.label(q.unit()) << "\n";
    std::vector<std::string> covers;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (a == b || !q.leq(a, b)) continue;
            bool cover = true;
            for (Elem c = 0; c < n && cover; ++c)
                if (c != a && c != b && q.leq(a, c) && q.leq(c, b)) cover = false;
            if (cover) covers.push_back(q.label(a) + "<" + q.label(b));
        }
    if (!covers.empty()) {
        out << "order";
        for (const auto& c : covers) out << ' ' << c;
        out << "\n";
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            out << "mul " << q.label(a) << ' ' << q.label(b) << ' ' << q.label(q.mul(a, b)) << "\n";
    return out.str();
}

FiniteQuantale make_bool2() {
    return from_tables("bool2", {"0", "1"}, {false, true, false, false}, {0, 0, 0, 1}, 1);
}

FiniteQuantale make_c3() {
    // bot < e < top; bot absorbs, e is the unit, top*top = top.
    std::vector<bool> strict(9, false);
    strict[0 * 3 + 1] = strict[1 * 3 + 2] = true;
    std::vector<Elem> mul = {0, 0, 0,
                             0, 1, 2,
                             0, 2, 2};
    return from_tables("c3", {"bot", "e", "top"}, strict, std::move(mul), 1);
}

FiniteQuantale make_c4() {
    // bot < a < b < top with unit top; a*a = b*a = bot, a*b = a, b*b = b.
    std::vector<bool> strict(16, false);
    strict[0 * 4 + 1] = strict[1 * 4 + 2] = strict[2 * 4 + 3] = true;
    std::vector<Elem> mul = {0, 0, 0, 0,
                             0, 0, 1, 1,
                             0, 0, 2, 2,
                             0, 1, 2, 3};
    return from_tables("c4", {"bot", "a", "b", "top"}, strict, std::move(mul), 3);
}

FiniteQuantale make_lukasiewicz(int n) {
    if (n < 1) throw Error("lukasiewicz(n) needs n >= 1");
    if (n + 1 > static_cast<int>(FiniteQuantale::max_size))
        throw UnsupportedSize("lukasiewicz(" + std::to_string(n) + ") exceeds 64 elements");
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    std::vector<std::string> labels;
    for (int k = 0; k <= n; ++k)
        labels.push_back(k == 0 ? "0" : k == n ? "1" : std::to_string(k) + "/" + std::to_string(n));
    std::vector<bool> strict(m * m, false);
    for (std::size_t k = 0; k + 1 < m; ++k) strict[k * m + k + 1] = true;
    std::vector<Elem> mul(m * m);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) mul[a * m + b] = static_cast<Elem>(std::max(0, a + b - n));
    return from_tables("lukasiewicz(" + std::to_string(n) + ")", std::move(labels), strict, std::move(mul),
                       static_cast<Elem>(n));
}

FiniteQuantale make_sup_endo(int m) {
    if (m < 2) throw Error("sup_endo(m) needs m >= 2");
    if (m > 4) throw UnsupportedSize("sup_endo(" + std::to_string(m) + ") has more than 64 elements; m <= 4");
    // Monotone maps on 0..m-1 fixing 0, as value vectors.
    std::vector<std::vector<int>> maps;
    std::vector<int> f(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            maps.push_back(f);
            return;
        }
        for (int v = f[i - 1]; v < m; ++v) {
            f[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    const std::size_t n = maps.size();
    std::vector<std::string> labels;
    std::size_t unit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::string l = "f";
        bool ident = true;
        for (int x = 0; x < m; ++x) {
            l += static_cast<char>('0' + maps[i][x]);
            ident = ident && maps[i][x] == x;
        }
        if (ident) unit = i;
        labels.push_back(l);
    }
    auto index_of = [&](const std::vector<int>& g) {
        return static_cast<Elem>(std::find(maps.begin(), maps.end(), g) - maps.begin());
    };
    std::vector<bool> leq(n * n, false);
    std::vector<Elem> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool le = true;
            std::vector<int> comp(static_cast<std::size_t>(m));
            for (int x = 0; x < m; ++x) {
                le = le && maps[a][x] <= maps[b][x];
                comp[x] = maps[a][maps[b][x]];
            }
            leq[a * n + b] = le;
            mul[a * n + b] = index_of(comp);
        }
    return from_tables("sup_endo(" + std::to_string(m) + ")", std::move(labels), leq, std::move(mul),
                       static_cast<Elem>(unit));
}

FiniteQuantale make_rel(int k) {
    if (k < 1) throw Error("rel(k) needs k >= 1");
    if (k > 2) throw UnsupportedSize("rel(" + std::to_string(k) + ") has 2^" + std::to_string(k * k) + " elements; k <= 2");
    const int cells = k * k;
    const std::size_t n = std::size_t{1} << cells;
    auto has = [&](std::size_t r, int x, int y) { return (r >> (x * k + y)) & 1u; };
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < n; ++r) {
        std::string l = "r";
        for (int c = 0; c < cells; ++c) l += ((r >> c) & 1u) ? '1' : '0';
        labels.push_back(l);
    }
    std::size_t ident = 0;
    for (int x = 0; x < k; ++x) ident |= std::size_t{1} << (x * k + x);
    std::vector<bool> leq(n * n, false);
    std::vector<Elem> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            leq[a * n + b] = (a & ~b) == 0;
            std::size_t c = 0;
            for (int x = 0; x < k; ++x)
                for (int z = 0; z < k; ++z)
                    for (int y = 0; y < k; ++y)
                        if (has(a, x, y) && has(b, y, z)) c |= std::size_t{1} << (x * k + z);
            mul[a * n + b] = static_cast<Elem>(c);
        }
    return from_tables("rel(" + std::to_string(k) + ")", std::move(labels), leq, std::move(mul),
                       static_cast<Elem>(ident));
}

FiniteQuantale make_free(const std::vector<std::vector<int>>& table) {
    const std::size_t m = table.size();
    if (m == 0) throw Error("free(M) needs a non-empty monoid");
    if (m > 4) throw UnsupportedSize("free(M) supports monoids with at most 4 elements");
    for (const auto& row : table) {
        if (row.size() != m) throw Error("monoid table must be square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= m) throw Error("monoid table entry out of range");
    }
    std::optional<std::size_t> e;
    for (std::size_t c = 0; c < m && !e; ++c) {
        bool ok = true;
        for (std::size_t a = 0; a < m; ++a)
            ok = ok && table[c][a] == static_cast<int>(a) && table[a][c] == static_cast<int>(a);
        if (ok) e = c;
    }
    if (!e) throw AxiomError(AxiomKind::unit_failure, "monoid table has no identity");
    const std::size_t n = std::size_t{1} << m;
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < n; ++s) {
        std::string l = "{";
        bool first = true;
        for (std::size_t a = 0; a < m; ++a)
            if ((s >> a) & 1u) {
                if (!first) l += ',';
                l += std::to_string(a);
                first = false;
            }
        labels.push_back(l + "}");
    }
    std::vector<bool> leq(n * n, false);
    std::vector<Elem> mul(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            leq[s * n + t] = (s & ~t) == 0;
            std::size_t prod = 0;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (((s >> a) & 1u) && ((t >> b) & 1u)) prod |= std::size_t{1} << table[a][b];
            mul[s * n + t] = static_cast<Elem>(prod);
        }
    std::string name = "free(";
    for (std::size_t a = 0; a < m; ++a) {
        if (a) name += ';';
        for (std::size_t b = 0; b < m; ++b) {
            if (b) name += ',';
            name += std::to_string(table[a][b]);
        }
    }
    return from_tables(name + ")", std::move(labels), leq, std::move(mul), static_cast<Elem>(std::size_t{1} << *e));
}

FiniteQuantale builtin(std::string_view name) {
    std::string s(name);
    if (s == "bool2") return make_bool2();
    if (s == "c3") return make_c3();
    if (s == "c4") return make_c4();
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') throw Error("unknown quantale '" + s + "'");
    std::string head = s.substr(0, open), arg = s.substr(open + 1, s.size() - open - 2);
    if (head == "lukasiewicz") return make_lukasiewicz(parse_int(arg, s));
    if (head == "sup_endo") return make_sup_endo(parse_int(arg, s));
    if (head == "rel") return make_rel(parse_int(arg, s));
    if (head == "free") {
        std::vector<std::vector<int>> table;
        if (!arg.empty() && arg[0] == 'z') {
            int k = parse_int(std::string_view(arg).substr(1), s);
            if (k < 1) throw Error("free(z<k>) needs k >= 1");
            table.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) table[a][b] = (a + b) % k;
        } else {
            for (const auto& row : detail::split(arg, ';')) {
                table.emplace_back();
                for (const auto& cell : detail::split(row, ',')) table.back().push_back(parse_int(cell, s));
            }
        }
        return make_free(table);
    }
    throw Error("unknown quantale '" + s + "'");
}

std::vector<std::string> builtin_names() {
    return {"bool2", "c3", "c4", "lukasiewicz(n)", "sup_endo(m)", "rel(k)", "free(z<k>)", "free(<row;row;...>)"};
}

}  // namespace qorder
