#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "urisense/record.hpp"

namespace urisense::cli {

/// Parses argv (without the program name) and dispatches to a subcommand.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Clock& clock);

}  // namespace urisense::cli
