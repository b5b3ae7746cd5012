#include "qorder/io.hpp"

#include "qorder/error.hpp"
#include "text.hpp"

#include <map>
#include <optional>

namespace qorder {

namespace fs = std::filesystem;

QuantalePtr resolve_quantale(std::string_view ref, const fs::path& base_dir) {
    fs::path p(ref);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    std::error_code ec;
    if (fs::is_regular_file(p, ec))
        return std::make_shared<const FiniteQuantale>(load_quantale(detail::read_file(p.string())));
    return std::make_shared<const FiniteQuantale>(builtin(ref));
}

namespace {

Elem degree_of(const FiniteQuantale& q, std::size_t line, const std::string& tok) {
    auto d = q.resolve(tok);
    if (!d) throw ParseError(line, "unknown quantale element '" + tok + "'");
    return *d;
}

struct Carrier {
    std::vector<std::string> labels;
    std::vector<Elem> degrees;
    std::map<std::string, std::size_t, std::less<>> index;
};

void add_members(Carrier& c, const FiniteQuantale& q, std::size_t line, const std::vector<std::string>& toks,
                 bool bare) {
    for (std::size_t i = 1; i < toks.size(); ++i) {
        auto colon = toks[i].rfind(':');
        if (bare && colon == std::string::npos) {
            if (!c.index.emplace(toks[i], c.labels.size()).second) throw ParseError(line, "duplicate label " + toks[i]);
            c.labels.push_back(toks[i]);
            c.degrees.push_back(q.top());
            continue;
        }
        if (colon == std::string::npos || colon == 0 || colon + 1 == toks[i].size())
            throw ParseError(line, "expected <label>:<degree>, got '" + toks[i] + "'");
        std::string label = toks[i].substr(0, colon);
        if (!c.index.emplace(label, c.labels.size()).second) throw ParseError(line, "duplicate label " + label);
        c.labels.push_back(label);
        c.degrees.push_back(degree_of(q, line, toks[i].substr(colon + 1)));
    }
}

std::string member_list(const QSubset& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += " " + s.label(i) + ":" + s.quantale().label(s.degree(i));
    return out;
}

struct RawContext {
    std::string name, over;
    QuantalePtr q;
    Carrier source, target;
    bool has_target = false;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rels;
    std::size_t last_line = 0;
};

RawContext parse_raw(std::string_view text, const fs::path& base_dir, bool bare = false) {
    RawContext c;
    std::size_t lineno = 0;
    for (const auto& raw : detail::split_lines(text)) {
        ++lineno;
        auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        const auto& kw = toks[0];
        if (kw == "context") {
            if (toks.size() != 4 || toks[2] != "over") throw ParseError(lineno, "expected 'context <name> over <quantale>'");
            if (c.q) throw ParseError(lineno, "duplicate 'context' line");
            c.name = toks[1];
            c.over = toks[3];
            try {
                c.q = resolve_quantale(c.over, base_dir);
            } catch (const ParseError&) {
                throw;
            } catch (const AxiomError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (kw == "source" || kw == "target") {
            if (!c.q) throw ParseError(lineno, "'" + kw + "' before the 'context' line");
            if (kw == "target") c.has_target = true;
            add_members(kw == "source" ? c.source : c.target, *c.q, lineno, toks, bare);
        } else if (kw == "rel") {
            if (toks.size() != 4) throw ParseError(lineno, "expected 'rel <x> <y> <degree>'");
            c.rels.emplace_back(lineno, std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    c.last_line = lineno;
    if (!c.q) throw ParseError(lineno, "missing 'context' line");
    return c;
}

QRelation build_relation(const RawContext& c, const Carrier& target) {
    QSubset src(c.q, c.source.labels, c.source.degrees);
    QSubset tgt(c.q, target.labels, target.degrees);
    std::vector<Elem> e(src.size() * tgt.size(), c.q->bottom());
    std::vector<bool> seen(e.size(), false);
    for (const auto& [line, toks] : c.rels) {
        auto x = c.source.index.find(toks[0]);
        if (x == c.source.index.end()) throw ParseError(line, "unknown source label '" + toks[0] + "'");
        auto y = target.index.find(toks[1]);
        if (y == target.index.end()) throw ParseError(line, "unknown target label '" + toks[1] + "'");
        std::size_t k = x->second * tgt.size() + y->second;
        Elem d = degree_of(*c.q, line, toks[2]);
        if (seen[k] && e[k] != d) throw ParseError(line, "conflicting entries for " + toks[0] + " " + toks[1]);
        seen[k] = true;
        e[k] = d;
    }
    return QRelation(std::move(src), std::move(tgt), std::move(e));
}

std::string relation_lines(const QRelation& r) {
    std::string out;
    const auto& q = r.quantale();
    for (std::size_t x = 0; x < r.rows(); ++x)
        for (std::size_t y = 0; y < r.cols(); ++y)
            if (r(x, y) != q.bottom())
                out += "rel " + r.source().label(x) + " " + r.target().label(y) + " " + q.label(r(x, y)) + "\n";
    return out;
}

}  // namespace

ContextFile parse_context(std::string_view text, const fs::path& base_dir) {
    auto c = parse_raw(text, base_dir);
    const Carrier& target = c.has_target ? c.target : c.source;
    return ContextFile{c.name, c.over, build_relation(c, target)};
}

ContextFile load_context(const fs::path& path) {
    return parse_context(detail::read_file(path.string()), path.parent_path());
}

std::string context_to_text(const std::string& name, const std::string& over, const QRelation& r) {
    return "context " + name + " over " + over + "\nsource" + member_list(r.source()) + "\ntarget" +
           member_list(r.target()) + "\n" + relation_lines(r);
}

QOrderedSet parse_ordered(std::string_view text, const fs::path& base_dir) {
    auto c = parse_raw(text, base_dir);
    if (c.has_target && (c.target.labels != c.source.labels || c.target.degrees != c.source.degrees))
        throw ParseError(c.last_line, "an ordered set needs target equal to source");
    QRelation r = build_relation(c, c.source);
    return make_ordered(r.source(), r.entries());
}

MatrixFile parse_matrix(std::string_view text, const fs::path& base_dir) {
    auto c = parse_raw(text, base_dir, true);
    if (c.has_target && c.target.labels != c.source.labels)
        throw ParseError(c.last_line, "a square matrix needs target equal to source");
    const std::size_t n = c.source.labels.size();
    std::vector<Elem> alpha(n * n, c.q->bottom());
    for (const auto& [line, toks] : c.rels) {
        auto x = c.source.index.find(toks[0]);
        if (x == c.source.index.end()) throw ParseError(line, "unknown label '" + toks[0] + "'");
        auto y = c.source.index.find(toks[1]);
        if (y == c.source.index.end()) throw ParseError(line, "unknown label '" + toks[1] + "'");
        alpha[x->second * n + y->second] = degree_of(*c.q, line, toks[2]);
    }
    return MatrixFile{c.name, c.over, c.q, c.source.labels, std::move(alpha)};
}

MatrixFile load_matrix(const fs::path& path) {
    return parse_matrix(detail::read_file(path.string()), path.parent_path());
}

QOrderedSet load_ordered(const fs::path& path) {
    return parse_ordered(detail::read_file(path.string()), path.parent_path());
}

std::string ordered_to_text(const std::string& name, const std::string& over, const QOrderedSet& x) {
    return "context " + name + " over " + over + "\nsource" + member_list(x.carrier()) + "\n" +
           relation_lines(x.order());
}

QOrderMap parse_map(std::string_view text, const fs::path& base_dir) {
    std::optional<QOrderedSet> from, to;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> sends;
    std::size_t lineno = 0;
    for (const auto& raw : detail::split_lines(text)) {
        ++lineno;
        auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        if (toks[0] == "map") {
            if (toks.size() != 6 || toks[2] != "from" || toks[4] != "to")
                throw ParseError(lineno, "expected 'map <name> from <file> to <file>'");
            if (from) throw ParseError(lineno, "duplicate 'map' line");
            from = load_ordered(base_dir / toks[3]);
            to = load_ordered(base_dir / toks[5]);
        } else if (toks[0] == "send") {
            if (toks.size() != 3) throw ParseError(lineno, "expected 'send <x> <y>'");
            sends.emplace_back(lineno, toks);
        } else {
            throw ParseError(lineno, "unknown keyword '" + toks[0] + "'");
        }
    }
    if (!from) throw ParseError(lineno, "missing 'map' line");
    if (!same_quantale(from->quantale_ptr(), to->quantale_ptr()))
        throw ParseError(lineno, "source and target use different quantales");
    std::vector<std::optional<std::size_t>> f(from->size());
    for (const auto& [line, toks] : sends) {
        auto x = from->carrier().find(toks[1]);
        if (!x) throw ParseError(line, "unknown source label '" + toks[1] + "'");
        auto y = to->carrier().find(toks[2]);
        if (!y) throw ParseError(line, "unknown target label '" + toks[2] + "'");
        if (f[*x] && *f[*x] != *y) throw ParseError(line, toks[1] + " is sent twice");
        f[*x] = *y;
    }
    std::vector<std::size_t> assignment;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) throw ParseError(lineno, "no image for " + from->label(i));
        assignment.push_back(*f[i]);
    }
    return QOrderMap(*from, *to, std::move(assignment));
}

QOrderMap load_map(const fs::path& path) {
    return parse_map(detail::read_file(path.string()), path.parent_path());
}

std::string map_to_text(const std::string& name, const std::string& from, const std::string& to, const QOrderMap& f) {
    std::string out = "map " + name + " from " + from + " to " + to + "\n";
    for (std::size_t i = 0; i < f.source().size(); ++i)
        out += "send " + f.source().label(i) + " " + f.target().label(f(i)) + "\n";
    return out;
}

}  // namespace qorder
