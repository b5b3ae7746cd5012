#include "qorder/export.hpp"

#include "qorder/error.hpp"

#include <algorithm>

namespace qorder {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string hasse_dot(const QOrderedSet& x, const std::string& name) {
    const std::size_t n = x.size();
    const auto& q = x.quantale();
    auto le = underlying_preorder(x);
    std::vector<std::size_t> rep(n);
    for (std::size_t i = 0; i < n; ++i) {
        rep[i] = i;
        for (std::size_t j = 0; j < i; ++j)
            if (le[i * n + j] && le[j * n + i]) {
                rep[i] = rep[j];
                break;
            }
    }
    std::string out = "digraph " + quote(name) + " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < n; ++i) {
        if (rep[i] != i) continue;
        std::string label;
        for (std::size_t j = i; j < n; ++j)
            if (rep[j] == i) label += (label.empty() ? "" : "\\n") + x.label(j) + " : " + q.label(x.degree(j));
        out += "  n" + std::to_string(i) + " [label=" + quote(label) + "];\n";
    }
    for (auto [a, b] : hasse_covers(x)) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    return out + "}\n";
}

std::string relation_table(const QRelation& r) {
    const auto& q = r.quantale();
    std::vector<std::vector<std::string>> cells(r.rows() + 1, std::vector<std::string>(r.cols() + 1));
    for (std::size_t y = 0; y < r.cols(); ++y)
        cells[0][y + 1] = r.target().label(y) + ":" + q.label(r.target().degree(y));
    for (std::size_t x = 0; x < r.rows(); ++x) {
        cells[x + 1][0] = r.source().label(x) + ":" + q.label(r.source().degree(x));
        for (std::size_t y = 0; y < r.cols(); ++y) cells[x + 1][y + 1] = q.label(r(x, y));
    }
    std::vector<std::size_t> width(r.cols() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c] + std::string(width[c] - row[c].size(), ' ');
            if (c + 1 < row.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

ConceptExport export_concepts(const ConceptLattice& cl) {
    const auto& q = cl.context.quantale();
    const auto& objects = cl.context.source();
    const auto& attributes = cl.context.target();
    ConceptExport e;
    e.mode = cl.mode == ConceptMode::fca ? "fca" : "rst";
    e.quantale = q.name();
    for (const auto& c : cl.concepts) {
        ConceptRecord r;
        r.degree = q.label(c.degree);
        for (std::size_t i = 0; i < objects.size(); ++i) r.extent[objects.label(i)] = q.label(c.extent[i]);
        for (std::size_t j = 0; j < attributes.size(); ++j) r.intent[attributes.label(j)] = q.label(c.intent[j]);
        e.concepts.push_back(std::move(r));
    }
    e.covers = cl.covers;
    return e;
}

nlohmann::json to_json(const ConceptExport& e) {
    nlohmann::json j;
    j["mode"] = e.mode;
    j["quantale"] = e.quantale;
    j["concepts"] = nlohmann::json::array();
    for (const auto& c : e.concepts)
        j["concepts"].push_back({{"degree", c.degree}, {"extent", c.extent}, {"intent", c.intent}});
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : e.covers) j["covers"].push_back({{"lower", a}, {"upper", b}});
    return j;
}

ConceptExport parse_concepts_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        ConceptExport e;
        e.mode = j.at("mode").get<std::string>();
        e.quantale = j.at("quantale").get<std::string>();
        for (const auto& c : j.at("concepts"))
            e.concepts.push_back(ConceptRecord{c.at("degree").get<std::string>(),
                                               c.at("extent").get<std::map<std::string, std::string>>(),
                                               c.at("intent").get<std::map<std::string, std::string>>()});
        for (const auto& c : j.at("covers")) {
            auto a = c.at("lower").get<std::size_t>(), b = c.at("upper").get<std::size_t>();
            if (a >= e.concepts.size() || b >= e.concepts.size()) throw ParseError(0, "cover index out of range");
            e.covers.emplace_back(a, b);
        }
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(0, std::string("concept JSON: ") + ex.what());
    }
}

std::string concepts_dot(const ConceptExport& e) {
    auto weights = [](const std::map<std::string, std::string>& m) {
        std::string s;
        for (const auto& [k, v] : m) s += (s.empty() ? "" : ",") + k + ":" + v;
        return "{" + s + "}";
    };
    std::string out = "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < e.concepts.size(); ++i) {
        const auto& c = e.concepts[i];
        out += "  c" + std::to_string(i) + " [label=" +
               quote(c.degree + "\\n" + weights(c.extent) + "\\n" + weights(c.intent)) + "];\n";
    }
    for (auto [a, b] : e.covers) out += "  c" + std::to_string(a) + " -> c" + std::to_string(b) + ";\n";
    return out + "}\n";
}

}  // namespace qorder
