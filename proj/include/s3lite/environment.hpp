#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s3lite/value.hpp"

namespace s3lite {

/// One lexical frame. Lookup walks the parent chain; definition always
/// writes to this frame.
class Environment {
 public:
  explicit Environment(std::shared_ptr<Environment> parent = nullptr)
      : parent_(std::move(parent)) {}

  const std::shared_ptr<Environment>& parent() const { return parent_; }

  /// Innermost binding on the chain. Throws RuntimeError
  /// "object 'name' not found", or a missing-argument error when the
  /// binding is a parameter the caller did not supply.
  const Value& lookup(std::string_view name) const;

  void define(std::string name, Value value);

  /// Binds a parameter with no supplied argument; lookup of it errors.
  void define_missing(std::string name);

  /// Binding in this frame only. nullptr if unbound or missing.
  const Value* find_local(std::string_view name) const;
  Value* find_local(std::string_view name);
  bool has_local(std::string_view name) const;

  /// Names bound (and not missing) in this frame, sorted.
  std::vector<std::string> local_names() const;

 private:
  std::shared_ptr<Environment> parent_;
  std::map<std::string, std::optional<Value>, std::less<>> bindings_;
};

}  // namespace s3lite
