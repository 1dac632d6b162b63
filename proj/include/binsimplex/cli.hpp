#pragma once

#include <iosfwd>

namespace binsimplex::cli {

// Exit codes: 0 success, 1 analysis error or failed verification, 2 usage
// error (bad arguments, unreadable or malformed matrix file).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace binsimplex::cli
