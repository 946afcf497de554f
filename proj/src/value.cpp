#include "s3lite/value.hpp"

#include <algorithm>
#include <utility>

#include "s3lite/errors.hpp"

namespace s3lite {

NamedList::NamedList() = default;
NamedList::NamedList(const NamedList&) = default;
NamedList::NamedList(NamedList&&) noexcept = default;
NamedList& NamedList::operator=(const NamedList&) = default;
NamedList& NamedList::operator=(NamedList&&) noexcept = default;
NamedList::~NamedList() = default;

const Value& NamedList::value_at(std::size_t i) const { return values_[i]; }
Value& NamedList::value_at(std::size_t i) { return values_[i]; }

bool NamedList::contains(std::string_view name) const { return find(name) != nullptr; }

const Value* NamedList::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return nullptr;
  return &values_[static_cast<std::size_t>(it - names_.begin())];
}

Value* NamedList::find(std::string_view name) {
  return const_cast<Value*>(std::as_const(*this).find(name));
}

void NamedList::set(std::string name, Value value) {
  if (Value* slot = find(name)) {
    *slot = std::move(value);
    return;
  }
  names_.push_back(std::move(name));
  values_.push_back(std::move(value));
}

bool NamedList::erase(std::string_view name) {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return false;
  auto idx = it - names_.begin();
  names_.erase(it);
  values_.erase(values_.begin() + idx);
  return true;
}

bool ClassVector::contains(std::string_view cls) const {
  return std::find(names.begin(), names.end(), cls) != names.end();
}

std::string_view implicit_class(const Value& v) {
  struct Visitor {
    std::string_view operator()(const Null&) const { return "NULL"; }
    std::string_view operator()(const NumericVector&) const { return "numeric"; }
    std::string_view operator()(const StringVector&) const { return "character"; }
    std::string_view operator()(const LogicalVector&) const { return "logical"; }
    std::string_view operator()(const Record&) const { return "list"; }
    std::string_view operator()(const Closure&) const { return "function"; }
    std::string_view operator()(const Builtin&) const { return "function"; }
  };
  return std::visit(Visitor{}, v.payload);
}

std::string_view type_name(const Value& v) {
  struct Visitor {
    std::string_view operator()(const Null&) const { return "NULL"; }
    std::string_view operator()(const NumericVector&) const { return "double"; }
    std::string_view operator()(const StringVector&) const { return "character"; }
    std::string_view operator()(const LogicalVector&) const { return "logical"; }
    std::string_view operator()(const Record&) const { return "list"; }
    std::string_view operator()(const Closure&) const { return "closure"; }
    std::string_view operator()(const Builtin&) const { return "builtin"; }
  };
  return std::visit(Visitor{}, v.payload);
}

ClassVector get_class(const Value& v) {
  if (const Value* cls = v.attributes.find("class")) {
    if (const auto* sv = cls->get_if<StringVector>(); sv && !sv->items.empty()) {
      return ClassVector{sv->items};
    }
  }
  return ClassVector{std::string(implicit_class(v))};
}

Value set_class(Value v, const ClassVector& classes) {
  if (classes.empty()) throw RuntimeError("class must be a nonempty character vector");
  for (const auto& name : classes.names) {
    if (name.empty()) throw RuntimeError("class names must be nonempty strings");
  }
  v.attributes.set("class", Value::strings(classes.names));
  return v;
}

std::size_t length_of(const Value& v) {
  struct Visitor {
    std::size_t operator()(const Null&) const { return 0; }
    std::size_t operator()(const NumericVector& x) const { return x.items.size(); }
    std::size_t operator()(const StringVector& x) const { return x.items.size(); }
    std::size_t operator()(const LogicalVector& x) const { return x.items.size(); }
    std::size_t operator()(const Record& x) const { return x.fields.size(); }
    std::size_t operator()(const Closure&) const { return 1; }
    std::size_t operator()(const Builtin&) const { return 1; }
  };
  return std::visit(Visitor{}, v.payload);
}

}  // namespace s3lite
