#include "s3lite/stdlib.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "s3lite/dispatch.hpp"
#include "s3lite/errors.hpp"
#include "s3lite/format.hpp"
#include "s3lite/stats.hpp"
#include "s3lite/table.hpp"

namespace s3lite {

namespace {

bool numbers_equal(const std::vector<double>& a, const std::vector<double>& b, double tolerance) {
  if (a.size() != b.size()) return false;
  double diff = 0;
  double mag_a = 0;
  double mag_b = 0;
  std::size_t finite = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool fa = std::isfinite(a[i]);
    bool fb = std::isfinite(b[i]);
    if (!fa || !fb) {
      if (fa != fb) return false;
      if (std::isnan(a[i]) != std::isnan(b[i])) return false;
      if (!std::isnan(a[i]) && a[i] != b[i]) return false;
      continue;
    }
    diff += std::fabs(a[i] - b[i]);
    mag_a += std::fabs(a[i]);
    mag_b += std::fabs(b[i]);
    ++finite;
  }
  if (finite == 0) return true;
  double n = static_cast<double>(finite);
  double mean_diff = diff / n;
  double scale = std::max(mag_a, mag_b) / n;
  if (std::isfinite(scale) && scale > tolerance) mean_diff /= scale;
  return mean_diff <= tolerance;
}

bool attributes_equal(const NamedList& a, const NamedList& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Value* other = b.find(a.name_at(i));
    if (other == nullptr || !all_equal(a.value_at(i), *other, tolerance)) return false;
  }
  return true;
}

const std::vector<double>& numeric_arg(const BuiltinCall& call, std::size_t i) {
  const Value& v = call.arg(i);
  const auto* n = v.get_if<NumericVector>();
  if (n == nullptr) {
    throw RuntimeError("invalid '" + std::string(type_name(v)) + "' argument to " +
                       std::string(call.name) + "()");
  }
  return n->items;
}

const std::string& string_arg(const BuiltinCall& call, std::size_t i) {
  const auto* s = call.arg(i).get_if<StringVector>();
  if (s == nullptr || s->items.size() != 1) {
    throw RuntimeError("argument " + std::to_string(i + 1) + " to " + std::string(call.name) +
                       "() must be a single string");
  }
  return s->items[0];
}

bool looks_like_identifier(const std::string& text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_';
  });
}

Value strings_value(std::vector<std::string> items) { return Value::strings(std::move(items)); }

Value combine(const BuiltinCall& call) {
  bool any_string = false;
  bool any_number = false;
  for (const auto& arg : call.args) {
    if (arg.is<StringVector>()) any_string = true;
    else if (arg.is<NumericVector>()) any_number = true;
    else if (!arg.is<LogicalVector>() && !arg.is<Null>()) {
      throw RuntimeError("c() cannot combine values of type '" + std::string(type_name(arg)) + "'");
    }
  }
  if (any_string) {
    std::vector<std::string> out;
    for (const auto& arg : call.args) {
      auto items = as_character(arg);
      out.insert(out.end(), items.begin(), items.end());
    }
    return Value::strings(std::move(out));
  }
  if (any_number) {
    std::vector<double> out;
    for (const auto& arg : call.args) {
      if (const auto* n = arg.get_if<NumericVector>()) {
        out.insert(out.end(), n->items.begin(), n->items.end());
      } else if (const auto* l = arg.get_if<LogicalVector>()) {
        for (bool b : l->items) out.push_back(b ? 1.0 : 0.0);
      }
    }
    return Value::numbers(std::move(out));
  }
  LogicalVector out;
  for (const auto& arg : call.args) {
    if (const auto* l = arg.get_if<LogicalVector>()) {
      out.items.insert(out.items.end(), l->items.begin(), l->items.end());
    }
  }
  if (out.items.empty() && call.args.empty()) return Value::null();
  return Value{std::move(out)};
}

Value sum_values(const BuiltinCall& call) {
  double total = 0;
  for (const auto& arg : call.args) {
    if (const auto* n = arg.get_if<NumericVector>()) {
      for (double x : n->items) total += x;
    } else if (const auto* l = arg.get_if<LogicalVector>()) {
      for (bool b : l->items) total += b ? 1.0 : 0.0;
    } else if (!arg.is<Null>()) {
      throw RuntimeError("invalid 'type' (" + std::string(type_name(arg)) + ") of argument");
    }
  }
  return Value::number(total);
}

Value paste_values(const BuiltinCall& call) {
  std::vector<std::string> parts;
  for (const auto& arg : call.args) {
    auto items = as_character(arg);
    if (items.empty()) continue;
    std::string joined = items[0];
    for (std::size_t i = 1; i < items.size(); ++i) joined += " " + items[i];
    parts.push_back(std::move(joined));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " ";
    out += parts[i];
  }
  return Value::string(std::move(out));
}

Value dispatch_trace(BuiltinCall& call) {
  call.expect_args(2, 2);
  const std::string& generic = string_arg(call, 0);
  DispatchOutcome outcome = resolve_method(generic, get_class(call.arg(1)), *call.env);
  call.interp.notify_dispatch(outcome);
  Value out = Value::record();
  auto& fields = out.as<Record>().fields;
  fields.set("generic", Value::string(outcome.generic));
  fields.set("classes", strings_value(outcome.receiver_classes.names));
  fields.set("tried", strings_value(outcome.candidates_tried));
  fields.set("chosen", outcome.chosen ? Value::string(*outcome.chosen) : Value::null());
  return out;
}

Value methods_builtin(BuiltinCall& call) {
  call.expect_args(1, 1);
  std::string generic;
  if (const auto* s = call.arg(0).get_if<StringVector>(); s && s->items.size() == 1) {
    generic = s->items[0];
  } else if (call.arg(0).is_function() && looks_like_identifier(call.arg_sources[0])) {
    generic = call.arg_sources[0];
  } else {
    throw RuntimeError("methods() needs a generic name or a generic function");
  }
  return strings_value(methods_of(generic, *call.env));
}

}  // namespace

bool all_equal(const Value& a, const Value& b, double tolerance) {
  if (a.payload.index() != b.payload.index()) return false;
  if (!attributes_equal(a.attributes, b.attributes, tolerance)) return false;
  struct Visitor {
    const Value& other;
    double tolerance;

    bool operator()(const Null&) const { return true; }
    bool operator()(const NumericVector& x) const {
      return numbers_equal(x.items, other.as<NumericVector>().items, tolerance);
    }
    bool operator()(const StringVector& x) const { return x.items == other.as<StringVector>().items; }
    bool operator()(const LogicalVector& x) const {
      return x.items == other.as<LogicalVector>().items;
    }
    bool operator()(const Record& x) const {
      const auto& y = other.as<Record>();
      if (x.fields.names() != y.fields.names()) return false;
      for (std::size_t i = 0; i < x.fields.size(); ++i) {
        if (!all_equal(x.fields.value_at(i), y.fields.value_at(i), tolerance)) return false;
      }
      return true;
    }
    bool operator()(const Closure& x) const {
      const auto& y = other.as<Closure>();
      return x.params == y.params && x.body == y.body && x.env == y.env;
    }
    bool operator()(const Builtin& x) const { return x.name == other.as<Builtin>().name; }
  };
  return std::visit(Visitor{b, tolerance}, a.payload);
}

void install_builtins(Interpreter& interp, const std::filesystem::path& asset_dir) {
  interp.global()->define("NULL", Value::null());
  interp.global()->define("TRUE", Value::logical(true));
  interp.global()->define("FALSE", Value::logical(false));

  interp.define_builtin("c", [](BuiltinCall& call) { return combine(call); });

  interp.define_builtin("list", [](BuiltinCall& call) {
    call.expect_args(0, 0);
    return Value::record();
  });

  interp.define_builtin("numeric", [](BuiltinCall& call) {
    call.expect_args(0, 1);
    double n = call.args.empty() ? 0.0 : numeric_arg(call, 0).at(0);
    if (!(n >= 0) || n > 1e8) throw RuntimeError("invalid length for numeric()");
    return Value::numbers(std::vector<double>(static_cast<std::size_t>(n), 0.0));
  });

  interp.define_builtin("length", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    return Value::number(static_cast<double>(length_of(call.arg(0))));
  });

  interp.define_builtin("names", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    if (const auto* rec = call.arg(0).get_if<Record>()) return strings_value(rec->fields.names());
    return Value::null();
  });

  interp.define_builtin("sum", [](BuiltinCall& call) { return sum_values(call); });

  interp.define_builtin("mean", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    const auto& xs = numeric_arg(call, 0);
    if (xs.empty()) return Value::number(std::nan(""));
    return Value::number(std::accumulate(xs.begin(), xs.end(), 0.0) /
                         static_cast<double>(xs.size()));
  });

  interp.define_builtin("min", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    const auto& xs = numeric_arg(call, 0);
    if (xs.empty()) throw RuntimeError("min() of an empty vector");
    return Value::number(*std::min_element(xs.begin(), xs.end()));
  });

  interp.define_builtin("max", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    const auto& xs = numeric_arg(call, 0);
    if (xs.empty()) throw RuntimeError("max() of an empty vector");
    return Value::number(*std::max_element(xs.begin(), xs.end()));
  });

  interp.define_builtin("quantile", [](BuiltinCall& call) {
    call.expect_args(2, 2);
    const auto& xs = numeric_arg(call, 0);
    std::vector<double> out;
    for (double p : numeric_arg(call, 1)) out.push_back(quantile_type7(xs, p));
    return Value::numbers(std::move(out));
  });

  interp.define_builtin("paste", [](BuiltinCall& call) { return paste_values(call); });

  interp.define_builtin("warning", [](BuiltinCall& call) {
    std::string message;
    for (const auto& arg : call.args) {
      for (const auto& s : as_character(arg)) message += s;
    }
    call.interp.warn(message);
    call.interp.set_visible(false);
    return Value::null();
  });

  interp.define_builtin("class", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    return strings_value(get_class(call.arg(0)).names);
  });

  interp.define_builtin("attr", [](BuiltinCall& call) {
    call.expect_args(2, 2);
    const Value* v = call.arg(0).attributes.find(string_arg(call, 1));
    return v ? *v : Value::null();
  });

  interp.define_builtin("inherits", [](BuiltinCall& call) {
    call.expect_args(2, 2);
    return Value::logical(inherits(call.arg(0), string_arg(call, 1)));
  });

  interp.define_builtin("UseMethod", [](BuiltinCall& call) -> Value {
    call.expect_args(1, 2);
    use_method(call.interp, string_arg(call, 0), *call.env);
  });

  interp.define_builtin("methods", methods_builtin);
  interp.define_builtin("dispatch_trace", dispatch_trace);

  interp.define_builtin("all.equal", [](BuiltinCall& call) {
    call.expect_args(2, 2);
    return Value::logical(all_equal(call.arg(0), call.arg(1)));
  });

  auto print_default = [](BuiltinCall& call) {
    call.expect_args(1, 1);
    print_value(call.interp.out(), call.arg(0));
    call.interp.set_visible(false);
    return call.arg(0);
  };
  interp.define_builtin("print_default", print_default);
  interp.define_builtin("print", print_default);

  interp.define_builtin("print_table", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    call.interp.out() << render_summary_table(summary_table_columns(call.arg(0)));
    call.interp.set_visible(false);
    return call.arg(0);
  });

  interp.define_builtin("print_summary_default", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    call.interp.out() << render_summary_default(call.arg(0));
    call.interp.set_visible(false);
    return call.arg(0);
  });

  interp.define_builtin("summarize_data_frame", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    return summary_table_value(summarize_data_frame(call.arg(0)));
  });

  interp.define_builtin("summarize_numeric", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    const Value& x = call.arg(0);
    if (!x.is<NumericVector>()) {
      throw RuntimeError("no summary available for an object of class \"" +
                         get_class(x).front() + "\"");
    }
    return summary_default_value(x.as<NumericVector>().items);
  });

  interp.define_builtin("load_table", [](BuiltinCall& call) {
    call.expect_args(1, 1);
    return load_table(string_arg(call, 0));
  });

  interp.define_builtin("asset_path", [asset_dir](BuiltinCall& call) {
    call.expect_args(1, 1);
    return Value::string((asset_dir / string_arg(call, 0)).string());
  });

  interp.define_builtin("return", [](BuiltinCall& call) {
    call.expect_args(0, 1);
    return call.args.empty() ? Value::null() : call.arg(0);
  });

  interp.define_builtin("invisible", [](BuiltinCall& call) {
    call.expect_args(0, 1);
    call.interp.set_visible(false);
    return call.args.empty() ? Value::null() : call.arg(0);
  });

  // Stands in for the host language's model-fitting routine so that
  // `rss(lm.fit)` receives a plain function value.
  interp.define_builtin("lm.fit", [](BuiltinCall&) -> Value {
    throw RuntimeError("model fitting is not supported");
  });
}

}  // namespace s3lite
