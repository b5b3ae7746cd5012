#pragma once

#include "qorder/caps.hpp"
#include "qorder/generate.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qorder {

enum class LawStatus { pass, fail, skip };

const char* to_string(LawStatus s);

struct LawOutcome {
    LawStatus status = LawStatus::pass;
    std::size_t instances = 0;
    std::string witness;  // the first failing instance
    std::string note;     // extra findings, such as a skip reason
};

struct LawContext {
    QuantalePtr q;
    Rng& rng;
    std::size_t samples;
    Caps caps;
};

// Sample budgets: cheap laws draw light() instances, powerset-based laws
// medium(), and laws that enumerate powersets of powersets heavy().
inline std::size_t light(const LawContext& c) { return 5 * c.samples; }
inline std::size_t medium(const LawContext& c) { return c.samples; }
inline std::size_t heavy(const LawContext& c) { return (c.samples + 9) / 10; }

struct Law {
    std::string id;
    std::string description;
    std::function<LawOutcome(LawContext&)> run;
};

// Every registered law, sorted by id.
const std::vector<Law>& law_registry();

struct VerifyOptions {
    std::vector<std::string> quantales{"bool2", "c3", "c4", "lukasiewicz(4)"};
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::string filter;  // only laws whose id starts with this prefix
    Caps caps = Caps::from_env();
};

struct LawEntry {
    std::string law;
    std::string quantale;
    LawOutcome outcome;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<LawEntry> entries;  // by law id, then quantale in the given order

    std::size_t count(LawStatus s) const;
    int exit_code() const { return count(LawStatus::fail) == 0 ? 0 : 1; }
};

// Quantale references are resolved with resolve_quantale, so validation
// errors surface before any law runs.
VerificationReport run_verify(const VerifyOptions& opts);

nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace qorder
