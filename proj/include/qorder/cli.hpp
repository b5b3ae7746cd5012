#pragma once

#include <ostream>

namespace qorder::cli {

// Exit codes: 0 success, 1 a verified law failed, 2 usage, parse or
// validation errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qorder::cli
