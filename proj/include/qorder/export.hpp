#pragma once

#include "qorder/galois.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qorder {

// Hasse diagram of the quotient poset of the underlying preorder. Each node
// lists the members of one class with their memberships.
std::string hasse_dot(const QOrderedSet& x, const std::string& name = "X");

// A relation as a labelled matrix, one row per line.
std::string relation_table(const QRelation& r);

// Concepts with labels resolved, as stored in the JSON export.
struct ConceptRecord {
    std::string degree;
    std::map<std::string, std::string> extent;
    std::map<std::string, std::string> intent;
    friend bool operator==(const ConceptRecord&, const ConceptRecord&) = default;
};

struct ConceptExport {
    std::string mode;
    std::string quantale;
    std::vector<ConceptRecord> concepts;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    friend bool operator==(const ConceptExport&, const ConceptExport&) = default;
};

ConceptExport export_concepts(const ConceptLattice& cl);
nlohmann::json to_json(const ConceptExport& e);
// Throws ParseError on malformed input.
ConceptExport parse_concepts_json(std::string_view text);
std::string concepts_dot(const ConceptExport& e);

}  // namespace qorder
