#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adet::cli {

// Exit codes: 0 success, 2 input error, 3 oracle inconsistency or internal
// error, 4 resource limit, 5 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adet::cli
