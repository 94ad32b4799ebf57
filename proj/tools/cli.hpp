// Command-line surface: construct | measure | verify | qkd. Kept as a
// library function so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
#pragma once

#include <iosfwd>

namespace mubkit::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mubkit::cli
