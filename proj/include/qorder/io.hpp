#pragma once

#include "qorder/qord.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qorder {

// A builtin name such as "c3" or "lukasiewicz(4)", or a path to a quantale
// file (relative paths are resolved against base_dir).
QuantalePtr resolve_quantale(std::string_view ref, const std::filesystem::path& base_dir = {});

// Context file:
//   context <name> over <quantale>
//   source <label>:<degree> ...
//   target <label>:<degree> ...      omitted for an ordered set
//   rel <x> <y> <degree>             missing entries are bottom
struct ContextFile {
    std::string name;
    std::string over;  // the quantale reference as written
    QRelation relation;
};

ContextFile parse_context(std::string_view text, const std::filesystem::path& base_dir = {});
ContextFile load_context(const std::filesystem::path& path);
std::string context_to_text(const std::string& name, const std::string& over, const QRelation& r);

// An ordered set is a context whose target is omitted or equals the source.
// Throws PreorderError if the relation is not a Q-preorder.
QOrderedSet parse_ordered(std::string_view text, const std::filesystem::path& base_dir = {});
QOrderedSet load_ordered(const std::filesystem::path& path);
std::string ordered_to_text(const std::string& name, const std::string& over, const QOrderedSet& x);

// A square matrix in the context format where memberships may be omitted
// (bare labels); entries are not checked against diagonal sets.
struct MatrixFile {
    std::string name;
    std::string over;
    QuantalePtr q;
    std::vector<std::string> labels;
    std::vector<Elem> alpha;  // row-major n*n
};

MatrixFile parse_matrix(std::string_view text, const std::filesystem::path& base_dir = {});
MatrixFile load_matrix(const std::filesystem::path& path);

// Map file:
//   map <name> from <ordered-set file> to <ordered-set file>
//   send <x> <y>
// File paths are relative to the map file.
QOrderMap parse_map(std::string_view text, const std::filesystem::path& base_dir = {});
QOrderMap load_map(const std::filesystem::path& path);
std::string map_to_text(const std::string& name, const std::string& from, const std::string& to, const QOrderMap& f);

}  // namespace qorder
