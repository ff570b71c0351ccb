#include "adet/builtin_configs.hpp"

namespace adet {

namespace {

struct BuiltinConfig {
  const char* name;
  const char* json;
};

constexpr BuiltinConfig kBuiltins[] = {
    {"segment2", R"({"name":"segment2","aprime":[[0],[1]]})"},
    {"quadratic", R"({"name":"quadratic","aprime":[[0],[1],[2]]})"},
    {"twisted-cubic", R"({"name":"twisted-cubic","aprime":[[0],[1],[2],[3]]})"},
    {"square", R"({"name":"square","aprime":[[0,0],[1,0],[0,1],[1,1]]})"},
};

}  // namespace

std::vector<std::string> builtin_config_names() {
  std::vector<std::string> out;
  for (const BuiltinConfig& b : kBuiltins) out.push_back(b.name);
  return out;
}

const char* builtin_config_json(const std::string& name) {
  for (const BuiltinConfig& b : kBuiltins)
    if (name == b.name) return b.json;
  return nullptr;
}

}  // namespace adet
