#pragma once

#include <iosfwd>

namespace cosserat_plate {

/// Command-line entry point. Exit codes: 0 success, 1 runtime or solver
/// failure (including failed verify checks), 2 configuration or validation failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace cosserat_plate
