#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace s3lite {

class Environment;
struct Value;

namespace ast {
struct Node;
using NodePtr = std::shared_ptr<const Node>;
}  // namespace ast

/// Ordered name -> Value map. Backs both record payloads and attribute lists.
/// Names are unique and nonempty; insertion order is preserved.
class NamedList {
 public:
  NamedList();
  NamedList(const NamedList&);
  NamedList(NamedList&&) noexcept;
  NamedList& operator=(const NamedList&);
  NamedList& operator=(NamedList&&) noexcept;
  ~NamedList();

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name_at(std::size_t i) const { return names_[i]; }
  const Value& value_at(std::size_t i) const;
  Value& value_at(std::size_t i);

  bool contains(std::string_view name) const;
  const Value* find(std::string_view name) const;
  Value* find(std::string_view name);

  /// Overwrites in place if `name` exists, otherwise appends.
  void set(std::string name, Value value);
  bool erase(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::vector<Value> values_;
};

struct Null {};

struct NumericVector {
  std::vector<double> items;
};

struct StringVector {
  std::vector<std::string> items;
};

struct LogicalVector {
  std::vector<bool> items;
};

struct Record {
  NamedList fields;
};

struct Closure {
  std::vector<std::string> params;
  ast::NodePtr body;
  std::shared_ptr<Environment> env;
};

/// Reference to a native function, resolved by name in the interpreter's
/// builtin registry.
struct Builtin {
  std::string name;
};

using Payload =
    std::variant<Null, NumericVector, StringVector, LogicalVector, Record, Closure, Builtin>;

/// A runtime value: a payload plus an attribute list. Values are plain data
/// and copy on assignment, so mutation through one binding is never visible
/// through another.
struct Value {
  Payload payload;
  NamedList attributes;

  Value() = default;
  Value(Payload p) : payload(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  static Value null() { return Value{}; }
  static Value number(double d) { return Value{NumericVector{{d}}}; }
  static Value numbers(std::vector<double> ds) { return Value{NumericVector{std::move(ds)}}; }
  static Value string(std::string s) { return Value{StringVector{{std::move(s)}}}; }
  static Value strings(std::vector<std::string> ss) { return Value{StringVector{std::move(ss)}}; }
  static Value logical(bool b) { return Value{LogicalVector{{b}}}; }
  static Value record() { return Value{Record{}}; }

  template <typename T>
  bool is() const { return std::holds_alternative<T>(payload); }
  template <typename T>
  const T& as() const { return std::get<T>(payload); }
  template <typename T>
  T& as() { return std::get<T>(payload); }
  template <typename T>
  const T* get_if() const { return std::get_if<T>(&payload); }
  template <typename T>
  T* get_if() { return std::get_if<T>(&payload); }

  bool is_function() const { return is<Closure>() || is<Builtin>(); }
};

/// Ordered class names attached to a value; dispatch scans it left to right.
struct ClassVector {
  std::vector<std::string> names;

  ClassVector() = default;
  ClassVector(std::initializer_list<std::string> init) : names(init) {}
  explicit ClassVector(std::vector<std::string> n) : names(std::move(n)) {}

  bool contains(std::string_view cls) const;
  std::size_t size() const { return names.size(); }
  bool empty() const { return names.empty(); }
  const std::string& front() const { return names.front(); }

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// The explicit "class" attribute if present, else the implicit class of
/// the payload kind. Never empty.
ClassVector get_class(const Value& v);

/// Copy of `v` with its class attribute replaced. Throws RuntimeError if
/// `classes` is empty or has an empty element.
Value set_class(Value v, const ClassVector& classes);

/// Implicit class name for the payload kind ("numeric", "list", ...).
std::string_view implicit_class(const Value& v);

/// Short kind name used in error messages ("character", "closure", ...).
std::string_view type_name(const Value& v);

/// Number of elements for vectors, fields for records; 1 for functions,
/// 0 for NULL.
std::size_t length_of(const Value& v);

}  // namespace s3lite
