#include "s3lite/environment.hpp"

#include "s3lite/errors.hpp"

namespace s3lite {

const Value& Environment::lookup(std::string_view name) const {
  for (const Environment* env = this; env != nullptr; env = env->parent_.get()) {
    auto it = env->bindings_.find(name);
    if (it == env->bindings_.end()) continue;
    if (!it->second) {
      throw RuntimeError("argument \"" + std::string(name) + "\" is missing, with no default");
    }
    return *it->second;
  }
  throw RuntimeError("object '" + std::string(name) + "' not found");
}

void Environment::define(std::string name, Value value) {
  bindings_.insert_or_assign(std::move(name), std::optional<Value>(std::move(value)));
}

void Environment::define_missing(std::string name) {
  bindings_.insert_or_assign(std::move(name), std::nullopt);
}

const Value* Environment::find_local(std::string_view name) const {
  auto it = bindings_.find(name);
  if (it == bindings_.end() || !it->second) return nullptr;
  return &*it->second;
}

Value* Environment::find_local(std::string_view name) {
  auto it = bindings_.find(name);
  if (it == bindings_.end() || !it->second) return nullptr;
  return &*it->second;
}

bool Environment::has_local(std::string_view name) const { return find_local(name) != nullptr; }

std::vector<std::string> Environment::local_names() const {
  std::vector<std::string> out;
  out.reserve(bindings_.size());
  for (const auto& [name, slot] : bindings_) {
    if (slot) out.push_back(name);
  }
  return out;
}

}  // namespace s3lite
