#pragma once

#include <iosfwd>

namespace qvar::cli {

/// Parses argv, runs one subcommand and writes a JSON document to `out`.
/// Returns 0 on success, 1 on input/parse errors, 2 on domain errors and
/// failed verification suites.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qvar::cli
