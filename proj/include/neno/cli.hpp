#pragma once

#include <iosfwd>

#include "neno/picture.hpp"

namespace neno {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFails = 1, kExitUsage = 2, kExitWorkLimit = 3 };

/// Runs one CLI invocation, writing to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The 5x5 picture claimed to lie in X(5,5) \ M(5,5) without overlapping any
/// member of X(5,5).
Picture counterexample_picture();

/// Checks every clause of that claim, printing a transcript. True iff all
/// clauses hold.
bool repro_counterexample(std::ostream& out, unsigned workers = 1);

}  // namespace neno
