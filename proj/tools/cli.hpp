#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace konum::cli {

/// Exit status of `predict` when the text looks like it shares a location.
inline constexpr int kExitLocationShared = 2;

/// Runs the konum-guard command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace konum::cli
