#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sring {

/// Runs one `sring` command. args excludes the program name. Returns the
/// exit status: 0 success or property holds, 1 property violated, 2 invalid
/// input or bound exceeded.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sring
