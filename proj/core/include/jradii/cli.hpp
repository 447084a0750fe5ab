#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jradii {

/// Exit codes: 0 success, 1 existence-negative/unknown or verification
/// failure, 2 usage or schema error, 3 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The existence grid for 1 <= j <= d <= max_d, cells {+, -, (-), ?},
/// blank above the diagonal. Plain text unless `color` is set.
std::string render_table(int max_d, bool color = false);

}  // namespace jradii
