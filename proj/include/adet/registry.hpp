#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adet/errors.hpp"

namespace adet {

// Ordered list of variable names. The order is fixed for the lifetime of a
// computation and determines the meaning of exponent-vector positions.
class VariableRegistry {
 public:
  VariableRegistry() = default;
  explicit VariableRegistry(std::vector<std::string> names)
      : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i)
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw Error(ErrorCode::InvalidInput,
                      "duplicate variable name: " + names_[i]);
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<size_t> index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool contains(const std::string& name) const { return index(name).has_value(); }

  // Appends a variable whose name starts from `stem` and is made fresh by
  // suffixing if needed. Returns the new variable's index.
  size_t add_fresh(const std::string& stem) {
    std::string candidate = stem;
    int suffix = 0;
    while (contains(candidate)) candidate = stem + "_" + std::to_string(suffix++);
    names_.push_back(candidate);
    return names_.size() - 1;
  }

  friend bool operator==(const VariableRegistry& a, const VariableRegistry& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

}  // namespace adet
