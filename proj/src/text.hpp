#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qorder::detail {

std::vector<std::string> split_lines(std::string_view text);
// Whitespace tokens of a line, ignoring everything after '#'.
std::vector<std::string> tokenize(std::string_view line);
std::vector<std::string> split(std::string_view s, char sep);
std::string read_file(const std::string& path);

}  // namespace qorder::detail
