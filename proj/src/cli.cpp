#include "qorder/cli.hpp"

#include "qorder/completion.hpp"
#include "qorder/error.hpp"
#include "qorder/export.hpp"
#include "qorder/galois.hpp"
#include "qorder/io.hpp"
#include "qorder/verify.hpp"
#include "text.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

namespace qorder::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Io {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;

    void emit(const json& j, const std::string& text) const {
        if (as_json)
            out << j.dump(2) << "\n";
        else
            out << text;
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << content;
}

std::string set_text(const FiniteQuantale& q, ElemSet s) {
    std::string out = "{";
    for (Elem e : s.elements()) out += (out.size() > 1 ? "," : "") + q.label(e);
    return out + "}";
}

json set_json(const FiniteQuantale& q, ElemSet s) {
    json j = json::array();
    for (Elem e : s.elements()) j.push_back(q.label(e));
    return j;
}

json subset_json(const QSubset& s) {
    json j = json::array();
    for (std::size_t i = 0; i < s.size(); ++i)
        j.push_back({{"label", s.label(i)}, {"degree", s.quantale().label(s.degree(i))}});
    return j;
}

json relation_json(const QRelation& r) {
    json m = json::array();
    for (std::size_t x = 0; x < r.rows(); ++x) {
        json row = json::array();
        for (std::size_t y = 0; y < r.cols(); ++y) row.push_back(r.quantale().label(r(x, y)));
        m.push_back(row);
    }
    return {{"quantale", r.quantale().name()},
            {"source", subset_json(r.source())},
            {"target", subset_json(r.target())},
            {"matrix", m}};
}

json ordered_json(const QOrderedSet& x) {
    json j = relation_json(x.order());
    j.erase("target");
    j["separated"] = is_separated(x);
    return j;
}

json covers_json(const QOrderedSet& x) {
    json j = json::array();
    for (auto [a, b] : hasse_covers(x)) j.push_back({{"lower", x.label(a)}, {"upper", x.label(b)}});
    return j;
}

std::string covers_text(const QOrderedSet& x) {
    std::string out;
    for (auto [a, b] : hasse_covers(x)) out += x.label(a) + " < " + x.label(b) + "\n";
    return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Elem element(const FiniteQuantale& q, const std::string& tok) {
    auto e = q.resolve(tok);
    if (!e) throw Error("unknown quantale element '" + tok + "'");
    return *e;
}

std::size_t member(const QOrderedSet& x, const std::string& label) {
    auto i = x.carrier().find(label);
    if (!i) throw Error("unknown element '" + label + "'");
    return *i;
}

std::string witnesses_text(const QOrderedSet& x, const std::vector<std::size_t>& w) {
    if (w.empty()) return "none\n";
    std::string out;
    for (std::size_t i : w) out += (out.empty() ? "" : " ") + x.label(i);
    return out + "\n";
}

json witnesses_json(const QOrderedSet& x, const std::vector<std::size_t>& w) {
    json j = json::array();
    for (std::size_t i : w) j.push_back(x.label(i));
    return j;
}

// The "from" and "to" file references written in a map file.
std::pair<std::string, std::string> map_header(const std::string& path) {
    for (const auto& line : detail::split_lines(detail::read_file(path))) {
        auto toks = detail::tokenize(line);
        if (toks.size() == 6 && toks[0] == "map") return {toks[3], toks[5]};
    }
    throw ParseError(0, "missing 'map' line in " + path);
}

json map_json(const QOrderMap& f) {
    json j = json::object();
    for (std::size_t i = 0; i < f.source().size(); ++i) j[f.source().label(i)] = f.target().label(f(i));
    return j;
}

json report_json(const CompletenessReport& r) {
    json j = {{"complete", r.complete},       {"cocomplete", r.cocomplete},
              {"tensored", r.tensored},       {"cotensored", r.cotensored},
              {"order_complete", r.order_complete}};
    if (r.missing_sup) j["missing_sup"] = *r.missing_sup;
    if (r.missing_tensor) j["missing_tensor"] = *r.missing_tensor;
    if (r.missing_cotensor) j["missing_cotensor"] = *r.missing_cotensor;
    return j;
}

// A presheaf file is a context from X to a single target of degree q.
Presheaf load_presheaf(const QOrderedSet& x, const std::string& path) {
    auto c = load_context(path);
    const auto& r = c.relation;
    if (r.cols() != 1) throw Error("a presheaf file needs exactly one target element");
    if (!r.source().same_as(x.carrier()) || r.source().labels() != x.carrier().labels())
        throw Error("presheaf source does not match the ordered set");
    Elem d = r.target().degree(0);
    if (!is_presheaf(x, d, r.entries())) throw Error("the relation is not a presheaf on the ordered set");
    return Presheaf{x, d, r.entries()};
}

std::string quantale_summary(const FiniteQuantale& q) {
    std::string out = "quantale " + q.name() + ": " + std::to_string(q.size()) + " elements, unit " +
                      q.label(q.unit()) + ", bottom " + q.label(q.bottom()) + ", top " + q.label(q.top()) + "\n";
    return out;
}

void add_quantale(CLI::App& app, Io& io, std::function<int()>& action) {
    auto* cmd = app.add_subcommand("quantale", "validate and inspect finite quantales");
    cmd->require_subcommand(1);
    auto ref = std::make_shared<std::string>();
    auto pair = std::make_shared<std::vector<std::string>>();

    auto* validate = cmd->add_subcommand("validate", "check every quantale axiom");
    validate->add_option("quantale", *ref, "builtin name or quantale file")->required();
    validate->callback([&, ref] {
        action = [&, ref] {
            auto q = resolve_quantale(*ref);
            io.emit({{"name", q->name()}, {"valid", true}, {"elements", q->labels()}, {"unit", q->label(q->unit())}},
                    "valid " + quantale_summary(*q));
            return 0;
        };
    });

    auto* classify = cmd->add_subcommand("classify", "integral, divisible, commutative and idempotents");
    classify->add_option("quantale", *ref, "builtin name or quantale file")->required();
    classify->callback([&, ref] {
        action = [&, ref] {
            auto q = resolve_quantale(*ref);
            auto c = q->classify();
            io.emit({{"name", q->name()},
                     {"integral", c.integral},
                     {"divisible", c.divisible},
                     {"commutative", c.commutative},
                     {"idempotents_above_unit", set_json(*q, c.idempotents_above_unit)}},
                    quantale_summary(*q) + "integral: " + yes(c.integral) + "\ndivisible: " + yes(c.divisible) +
                        "\ncommutative: " + yes(c.commutative) +
                        "\nidempotents above unit: " + set_text(*q, c.idempotents_above_unit) + "\n");
            return 0;
        };
    });

    auto* dq = cmd->add_subcommand("dq", "diagonal sets D(p,q)");
    dq->add_option("quantale", *ref, "builtin name or quantale file")->required();
    dq->add_option("--pair", *pair, "only D(p,q)")->expected(2);
    dq->callback([&, ref, pair] {
        action = [&, ref, pair] {
            auto q = resolve_quantale(*ref);
            const auto n = static_cast<Elem>(q->size());
            if (!pair->empty()) {
                Elem p = element(*q, (*pair)[0]), r = element(*q, (*pair)[1]);
                io.emit({{"p", q->label(p)}, {"q", q->label(r)}, {"diagonal", set_json(*q, q->diagonal(p, r))}},
                        set_text(*q, q->diagonal(p, r)) + "\n");
                return 0;
            }
            json j = json::array();
            std::string text;
            for (Elem p = 0; p < n; ++p)
                for (Elem r = 0; r < n; ++r) {
                    j.push_back({{"p", q->label(p)}, {"q", q->label(r)}, {"diagonal", set_json(*q, q->diagonal(p, r))}});
                    text += "D(" + q->label(p) + "," + q->label(r) + ") = " + set_text(*q, q->diagonal(p, r)) + "\n";
                }
            io.emit(j, text);
            return 0;
        };
    });
}

void add_rel(CLI::App& app, Io& io, std::function<int()>& action) {
    auto* cmd = app.add_subcommand("rel", "Q-relations between Q-subsets");
    cmd->require_subcommand(1);
    auto files = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    auto side = std::make_shared<std::string>();

    auto print = [&io, out](const ContextFile& base, const QRelation& r, const std::string& name) {
        if (!out->empty()) write_file(*out, context_to_text(name, base.over, r));
        io.emit(relation_json(r), relation_table(r));
    };

    auto* validate = cmd->add_subcommand("validate", "parse a relation and check its entries");
    validate->add_option("file", *files, "context file")->required()->expected(1);
    validate->callback([&, files, print] {
        action = [&, files, print] {
            auto c = load_context((*files)[0]);
            print(c, c.relation, c.name);
            return 0;
        };
    });

    auto* compose_cmd = cmd->add_subcommand("compose", "composite of phi: X -|-> Y and psi: Y -|-> Z");
    compose_cmd->add_option("files", *files, "phi then psi")->required()->expected(2);
    compose_cmd->add_option("--out", *out, "write the result as a context file");
    compose_cmd->callback([&, files, print] {
        action = [&, files, print] {
            auto phi = load_context((*files)[0]);
            auto psi = load_context((*files)[1]);
            print(phi, compose(psi.relation, phi.relation), psi.name + "_o_" + phi.name);
            return 0;
        };
    });

    auto* imp = cmd->add_subcommand("imp", "left implication xi <- phi or right implication psi -> xi");
    imp->add_option("--side", *side, "left or right")->required()->check(CLI::IsMember({"left", "right"}));
    imp->add_option("files", *files, "xi phi (left) or psi xi (right)")->required()->expected(2);
    imp->add_option("--out", *out, "write the result as a context file");
    imp->callback([&, files, side, print] {
        action = [&, files, side, print] {
            auto a = load_context((*files)[0]);
            auto b = load_context((*files)[1]);
            if (*side == "left")
                print(a, imp_left(a.relation, b.relation), a.name + "_lt_" + b.name);
            else
                print(a, imp_right(a.relation, b.relation), a.name + "_rt_" + b.name);
            return 0;
        };
    });
}

void add_ord(CLI::App& app, Io& io, std::function<int()>& action) {
    auto* cmd = app.add_subcommand("ord", "Q-ordered sets");
    cmd->require_subcommand(1);
    auto file = std::make_shared<std::string>();
    auto dot = std::make_shared<bool>(false);
    auto keep = std::make_shared<std::string>();

    auto* check = cmd->add_subcommand("check", "check that the relation is a Q-preorder");
    check->add_option("file", *file, "ordered-set file")->required();
    check->callback([&, file] {
        action = [&, file] {
            auto x = load_ordered(*file);
            io.emit(ordered_json(x), "Q-preorder on " + std::to_string(x.size()) + " elements over " +
                                         x.quantale().name() + "\nseparated: " + yes(is_separated(x)) + "\n");
            return 0;
        };
    });

    auto* under = cmd->add_subcommand("underlying", "underlying preorder within each degree");
    under->add_option("file", *file, "ordered-set file")->required();
    under->add_flag("--dot", *dot, "Hasse diagram of the quotient poset in DOT");
    under->callback([&, file, dot] {
        action = [&, file, dot] {
            auto x = load_ordered(*file);
            if (*dot) {
                io.out << hasse_dot(x, fs::path(*file).stem().string());
                return 0;
            }
            const std::size_t n = x.size();
            auto le = underlying_preorder(x);
            json pairs = json::array();
            std::string text;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (le[a * n + b]) {
                        pairs.push_back({x.label(a), x.label(b)});
                        text += x.label(a) + " <= " + x.label(b) + "\n";
                    }
            io.emit({{"leq", pairs}, {"covers", covers_json(x)}}, text);
            return 0;
        };
    });

    auto* core = cmd->add_subcommand("coreflect", "restrict to elements whose membership is kept");
    core->add_option("file", *file, "ordered-set file")->required();
    core->add_option("--keep", *keep, "comma-separated quantale elements")->required();
    core->callback([&, file, keep] {
        action = [&, file, keep] {
            auto x = load_ordered(*file);
            ElemSet s;
            for (const auto& tok : detail::split(*keep, ','))
                if (!tok.empty()) s.insert(element(x.quantale(), tok));
            auto c = coreflect(x, s);
            std::string over = load_context(*file).over;
            io.emit(ordered_json(c), ordered_to_text(fs::path(*file).stem().string() + "_kept", over, c));
            return 0;
        };
    });

    auto* enm = cmd->add_subcommand("enumerate-memberships", "every membership map making the matrix a Q-preorder");
    enm->add_option("file", *file, "matrix in the context format; memberships may be omitted")->required();
    enm->callback([&, file] {
        action = [&, file] {
            auto m = load_matrix(*file);
            auto all = enumerate_memberships(m.q, m.labels.size(), m.alpha);
            json j = json::array();
            std::string text;
            for (const auto& mem : all) {
                QOrderedSet x = make_ordered(QSubset(m.q, m.labels, mem), m.alpha);
                json entry = {{"membership", json::object()}, {"underlying", json::array()}};
                std::string line;
                for (std::size_t i = 0; i < mem.size(); ++i) {
                    entry["membership"][m.labels[i]] = m.q->label(mem[i]);
                    line += (i ? " " : "") + m.labels[i] + ":" + m.q->label(mem[i]);
                }
                const std::size_t n = x.size();
                auto le = underlying_preorder(x);
                std::string order;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (a != b && le[a * n + b]) {
                            entry["underlying"].push_back({m.labels[a], m.labels[b]});
                            order += " " + m.labels[a] + "<=" + m.labels[b];
                        }
                j.push_back(entry);
                text += line + "  |" + (order.empty() ? " discrete" : order) + "\n";
            }
            io.emit(j, text + std::to_string(all.size()) + " memberships\n");
            return 0;
        };
    });
}

void add_powerset(CLI::App& app, Io& io, std::function<int()>& action) {
    auto* cmd = app.add_subcommand("powerset", "PX, or P+X with --dual");
    auto file = std::make_shared<std::string>();
    auto dual = std::make_shared<bool>(false);
    auto mode = std::make_shared<std::string>("list");
    cmd->add_option("file", *file, "ordered-set file")->required();
    cmd->add_flag("--dual", *dual, "upper powerset P+X");
    auto* g = cmd->add_option_group("output")->require_option(0, 1);
    g->add_flag_callback("--list", [mode] { *mode = "list"; }, "every element (default)");
    g->add_flag_callback("--count", [mode] { *mode = "count"; }, "number of elements");
    g->add_flag_callback("--order-dot", [mode] { *mode = "dot"; }, "Hasse diagram in DOT");
    cmd->callback([&, file, dual, mode] {
        action = [&, file, dual, mode] {
            auto x = load_ordered(*file);
            auto p = *dual ? copresheaves(x) : presheaves(x);
            const auto& P = p.ordered();
            if (*mode == "count") {
                io.emit({{"count", p.size()}}, std::to_string(p.size()) + "\n");
            } else if (*mode == "dot") {
                io.out << hasse_dot(P, *dual ? "P+X" : "PX");
            } else {
                json j = json::array();
                std::string text;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    json values = json::object();
                    for (std::size_t k = 0; k < x.size(); ++k) values[x.label(k)] = x.quantale().label(p.values(i)[k]);
                    j.push_back({{"label", P.label(i)}, {"degree", x.quantale().label(p.degree(i))}, {"values", values}});
                    text += P.label(i) + "\n";
                }
                io.emit(j, text);
            }
            return 0;
        };
    });
}

void add_complete(CLI::App& app, Io& io, std::function<int()>& action) {
    auto* cmd = app.add_subcommand("complete", "suprema, tensors and completeness");
    cmd->require_subcommand(1);
    auto file = std::make_shared<std::string>();
    auto pre = std::make_shared<std::string>();
    auto u = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    auto deg = std::make_shared<std::string>();

    auto* report = cmd->add_subcommand("report", "completeness, tensors, cotensors and order-completeness");
    report->add_option("file", *file, "ordered-set file")->required();
    report->callback([&, file] {
        action = [&, file] {
            auto r = completeness_report(load_ordered(*file));
            std::string text = "complete: " + yes(r.complete) + "\ncocomplete: " + yes(r.cocomplete) +
                               "\ntensored: " + yes(r.tensored) + "\ncotensored: " + yes(r.cotensored) +
                               "\norder-complete: " + yes(r.order_complete) + "\n";
            if (r.missing_sup) text += "missing sup: " + *r.missing_sup + "\n";
            if (r.missing_tensor) text += "missing tensor: " + *r.missing_tensor + "\n";
            if (r.missing_cotensor) text += "missing cotensor: " + *r.missing_cotensor + "\n";
            io.emit(report_json(r), text);
            return 0;
        };
    });

    auto* sup_cmd = cmd->add_subcommand("sup", "suprema of a presheaf");
    sup_cmd->add_option("file", *file, "ordered-set file")->required();
    sup_cmd->add_option("--presheaf", *pre, "context file X -|-> a single element of degree q")->required();
    sup_cmd->callback([&, file, pre] {
        action = [&, file, pre] {
            auto x = load_ordered(*file);
            auto s = sup(x, load_presheaf(x, *pre));
            io.emit({{"sup", witnesses_json(x, s)}}, witnesses_text(x, s));
            return 0;
        };
    });

    auto* tensor_cmd = cmd->add_subcommand("tensor", "tensors u (x) x of degree q");
    tensor_cmd->add_option("file", *file, "ordered-set file")->required();
    tensor_cmd->add_option("--u", *u, "scalar in D(|x|,q)")->required();
    tensor_cmd->add_option("--x", *at, "element label")->required();
    tensor_cmd->add_option("--q", *deg, "degree of the tensor")->required();
    tensor_cmd->callback([&, file, u, at, deg] {
        action = [&, file, u, at, deg] {
            auto x = load_ordered(*file);
            const auto& q = x.quantale();
            auto t = tensor(x, element(q, *u), member(x, *at), element(q, *deg));
            io.emit({{"tensor", witnesses_json(x, t)}}, witnesses_text(x, t));
            return 0;
        };
    });
}

void add_galois(CLI::App& app, Io& io, std::function<int()>& action) {
    auto* cmd = app.add_subcommand("galois", "adjunctions between order-preserving maps");
    cmd->require_subcommand(1);
    auto f = std::make_shared<std::string>();
    auto g = std::make_shared<std::string>();
    auto side = std::make_shared<std::string>();

    auto* check = cmd->add_subcommand("check", "whether f -| g");
    check->add_option("--f", *f, "map file X -> Y")->required();
    check->add_option("--g", *g, "map file Y -> X")->required();
    check->callback([&, f, g] {
        action = [&, f, g] {
            auto fm = load_map(*f), gm = load_map(*g);
            bool gal = is_galois(fm, gm);
            bool crit = graph_criterion(fm, gm);
            io.emit({{"adjoint", gal}, {"graph_criterion", crit}},
                    "adjoint: " + yes(gal) + "\ngraph criterion: " + yes(crit) + "\n");
            return 0;
        };
    });

    auto* find = cmd->add_subcommand("find", "every adjoint of a map");
    find->add_option("--map", *f, "map file")->required();
    find->add_option("--side", *side, "right finds g with f -| g, left finds g with g -| f")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    find->callback([&, f, side] {
        action = [&, f, side] {
            auto fm = load_map(*f);
            auto [from, to] = map_header(*f);
            auto all = find_adjoint(fm, *side == "left" ? Side::left : Side::right);
            json j = json::array();
            std::string text;
            for (std::size_t i = 0; i < all.size(); ++i) {
                j.push_back(map_json(all[i]));
                text += map_to_text(*side + "_adjoint_" + std::to_string(i + 1), to, from, all[i]);
            }
            io.emit(j, all.empty() ? "no adjoint\n" : text);
            return 0;
        };
    });
}

std::string fixed_points_text(const FixedPoints& fp) {
    std::string out;
    for (std::size_t i = 0; i < fp.ordered.size(); ++i) out += fp.ordered.label(i) + "\n";
    return out;
}

json fixed_points_json(const FixedPoints& fp) {
    json elems = json::array();
    for (std::size_t i = 0; i < fp.ordered.size(); ++i) elems.push_back(fp.ordered.label(i));
    return {{"elements", elems}, {"covers", covers_json(fp.ordered)}};
}

void add_lattices(CLI::App& app, Io& io, std::function<int()>& action) {
    auto file = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>();
    auto dot = std::make_shared<std::string>();
    auto json_out = std::make_shared<std::string>();

    auto* concepts = app.add_subcommand("concepts", "concept lattice of a context");
    concepts->add_option("file", *file, "context file")->required();
    concepts->add_option("--mode", *mode, "fca or rst")->required()->check(CLI::IsMember({"fca", "rst"}));
    concepts->add_option("--dot", *dot, "write the lattice in DOT");
    concepts->add_option("--json", *json_out, "write the concepts as JSON ('-' for stdout)");
    concepts->callback([&, file, mode, dot, json_out] {
        action = [&, file, mode, dot, json_out] {
            auto c = load_context(*file);
            auto cl = concept_lattice(c.relation, *mode == "fca" ? ConceptMode::fca : ConceptMode::rst);
            auto e = export_concepts(cl);
            if (!dot->empty()) write_file(*dot, concepts_dot(e));
            auto j = to_json(e);
            if (*json_out == "-" || io.as_json) {
                io.out << j.dump(2) << "\n";
                return 0;
            }
            if (!json_out->empty()) write_file(*json_out, j.dump(2) + "\n");
            std::string text;
            for (std::size_t i = 0; i < e.concepts.size(); ++i) {
                const auto& r = e.concepts[i];
                text += std::to_string(i) + " [" + r.degree + "] extent {";
                std::string sep;
                for (const auto& [k, v] : r.extent) text += sep + k + ":" + v, sep = ", ";
                text += "} intent {";
                sep.clear();
                for (const auto& [k, v] : r.intent) text += sep + k + ":" + v, sep = ", ";
                text += "}\n";
            }
            for (auto [a, b] : e.covers) text += std::to_string(a) + " < " + std::to_string(b) + "\n";
            io.out << text;
            return 0;
        };
    });

    auto* mac = app.add_subcommand("macneille", "MacNeille completion inside PX");
    mac->add_option("file", *file, "ordered-set file")->required();
    mac->callback([&, file] {
        action = [&, file] {
            auto m = macneille(load_ordered(*file));
            io.emit(fixed_points_json(m), fixed_points_text(m) + covers_text(m.ordered));
            return 0;
        };
    });

    auto* cau = app.add_subcommand("cauchy", "Cauchy completeness");
    cau->add_option("file", *file, "ordered-set file")->required();
    cau->callback([&, file] {
        action = [&, file] {
            auto r = cauchy_report(load_ordered(*file));
            io.emit({{"cauchy_complete", r.cauchy_complete},
                     {"right_adjoint_presheaves", r.right_adjoint_count},
                     {"left_adjoint_witnesses", r.left_adjoint_witnesses}},
                    "Cauchy complete: " + yes(r.cauchy_complete) +
                        "\nright adjoint presheaves: " + std::to_string(r.right_adjoint_count) +
                        "\nleft adjoint witnesses: " + std::to_string(r.left_adjoint_witnesses) + "\n");
            return 0;
        };
    });
}

void add_verify(CLI::App& app, Io& io, std::function<int()>& action) {
    auto* cmd = app.add_subcommand("verify", "run the law suite");
    auto quantales = std::make_shared<std::vector<std::string>>();
    auto opts = std::make_shared<VerifyOptions>();
    auto report = std::make_shared<std::string>();
    cmd->add_option("--quantale", *quantales, "builtin name or quantale file (repeatable)");
    cmd->add_option("--seed", opts->seed, "random seed");
    cmd->add_option("--samples", opts->samples, "base sample count");
    cmd->add_option("--filter", opts->filter, "only laws whose id starts with this prefix");
    cmd->add_option("--report", *report, "write the JSON report here");
    cmd->callback([&, quantales, opts, report] {
        action = [&, quantales, opts, report] {
            if (!quantales->empty()) opts->quantales = *quantales;
            auto r = run_verify(*opts);
            auto j = to_json(r);
            if (!report->empty()) write_file(*report, j.dump(2) + "\n");
            io.emit(j, to_text(r));
            return r.exit_code();
        };
    });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantale-valued preorders on fuzzy sets", "qorder"};
    app.require_subcommand(1);
    app.fallthrough();
    Io io{out, err};
    app.add_flag("--json", io.as_json, "print JSON instead of text");
    std::function<int()> action;
    add_quantale(app, io, action);
    add_rel(app, io, action);
    add_ord(app, io, action);
    add_powerset(app, io, action);
    add_complete(app, io, action);
    add_galois(app, io, action);
    add_lattices(app, io, action);
    add_verify(app, io, action);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "qorder: " << e.what() << "\n";
        return 2;
    }
    if (!action) {
        err << "qorder: missing subcommand\n";
        return 2;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "qorder: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qorder::cli
