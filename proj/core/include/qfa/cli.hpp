#pragma once

#include <iosfwd>

namespace qfa {

/// Runs the command-line interface. Exit codes: 0 success or accept,
/// 1 reject or failed check, 2 usage or validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfa
