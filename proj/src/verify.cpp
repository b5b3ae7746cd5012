#include "qorder/verify.hpp"

#include "laws.hpp"
#include "qorder/error.hpp"
#include "qorder/io.hpp"
#include "qorder/presheaf.hpp"

#include <algorithm>

namespace qorder {

const char* to_string(LawStatus s) {
    switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::skip: return "skip";
    }
    return "?";
}

namespace laws {

std::string show(const QSubset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + s.label(i) + ":" + s.quantale().label(s.degree(i));
    return out + "}";
}

std::string show(const QRelation& r) {
    const auto& q = r.quantale();
    std::string out = show(r.source()) + "->" + show(r.target()) + " [";
    for (std::size_t x = 0; x < r.rows(); ++x) {
        out += x ? "; " : "";
        for (std::size_t y = 0; y < r.cols(); ++y) out += (y ? " " : "") + q.label(r(x, y));
    }
    return out + "]";
}

std::string show(const QOrderedSet& x) { return show(x.order()); }

QOrderedSet small_ordered(LawContext& c, std::size_t max_size, std::size_t powerset_limit) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        auto x = random_ordered(c.q, c.rng, 1, max_size);
        if (powerset_candidates(x, Variance::lower) <= powerset_limit &&
            powerset_candidates(x, Variance::upper) <= powerset_limit)
            return x;
        max_size = std::max<std::size_t>(1, max_size - (attempt % 5 == 4));
    }
    return random_ordered(c.q, c.rng, 1, 1);
}

}  // namespace laws

const std::vector<Law>& law_registry() {
    static const std::vector<Law> registry = [] {
        std::vector<Law> out;
        laws::add_quantale_laws(out);
        laws::add_qrel_laws(out);
        laws::add_qord_laws(out);
        laws::add_presheaf_laws(out);
        laws::add_completion_laws(out);
        laws::add_galois_laws(out);
        std::sort(out.begin(), out.end(), [](const Law& a, const Law& b) { return a.id < b.id; });
        return out;
    }();
    return registry;
}

std::size_t VerificationReport::count(LawStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const LawEntry& e) { return e.outcome.status == s; }));
}

namespace {

// FNV-1a, so that seeds do not depend on the standard library's hash.
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

VerificationReport run_verify(const VerifyOptions& opts) {
    std::vector<QuantalePtr> qs;
    for (const auto& ref : opts.quantales) qs.push_back(resolve_quantale(ref));
    VerificationReport report;
    report.seed = opts.seed;
    report.samples = opts.samples;
    for (const auto& law : law_registry()) {
        if (law.id.rfind(opts.filter, 0) != 0) continue;
        for (std::size_t k = 0; k < qs.size(); ++k) {
            std::uint64_t h = fnv1a(law.id + "|" + opts.quantales[k]);
            std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                              static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
            Rng rng(seq);
            LawContext ctx{qs[k], rng, opts.samples, opts.caps};
            LawOutcome out;
            try {
                out = law.run(ctx);
            } catch (const SizeCap& e) {
                out = laws::skipped(std::string("size cap: ") + e.what());
            } catch (const std::exception& e) {
                out.status = LawStatus::fail;
                out.witness = std::string("exception: ") + e.what();
            }
            report.entries.push_back(LawEntry{law.id, opts.quantales[k], std::move(out)});
        }
    }
    return report;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["summary"] = {{"pass", r.count(LawStatus::pass)},
                    {"fail", r.count(LawStatus::fail)},
                    {"skip", r.count(LawStatus::skip)}};
    j["laws"] = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json item = {{"law", e.law},
                               {"quantale", e.quantale},
                               {"status", to_string(e.outcome.status)},
                               {"instances", e.outcome.instances}};
        if (!e.outcome.witness.empty()) item["witness"] = e.outcome.witness;
        if (!e.outcome.note.empty()) item["note"] = e.outcome.note;
        j["laws"].push_back(std::move(item));
    }
    j["exit_code"] = r.exit_code();
    return j;
}

std::string to_text(const VerificationReport& r) {
    std::string out;
    for (const auto& e : r.entries) {
        out += std::string(to_string(e.outcome.status)) + "  " + e.law + "  [" + e.quantale + "]  " +
               std::to_string(e.outcome.instances) + " instances";
        if (!e.outcome.witness.empty()) out += "\n      witness: " + e.outcome.witness;
        if (!e.outcome.note.empty()) out += "\n      note: " + e.outcome.note;
        out += "\n";
    }
    out += "summary: " + std::to_string(r.count(LawStatus::pass)) + " pass, " +
           std::to_string(r.count(LawStatus::fail)) + " fail, " + std::to_string(r.count(LawStatus::skip)) +
           " skip (seed " + std::to_string(r.seed) + ", samples " + std::to_string(r.samples) + ")\n";
    return out;
}

}  // namespace qorder
