#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sheet_atlas {

/// Runs the sheet-atlas command line on `args` (program name excluded).
/// Data goes to `out`, diagnostics to `err`. Returns 0 on success, 1 on a
/// domain error or failed verification, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheet_atlas
