#pragma once

#include <string>
#include <vector>

namespace adet {

// Bundled configurations, addressable as "builtin:<name>". The same files
// ship under configs/.
std::vector<std::string> builtin_config_names();
const char* builtin_config_json(const std::string& name);  // nullptr if unknown

}  // namespace adet
