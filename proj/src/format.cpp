#include "s3lite/format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "s3lite/ast.hpp"
#include "s3lite/errors.hpp"
#include "s3lite/printer.hpp"

namespace s3lite {

namespace {

constexpr std::size_t kLineWidth = 80;

// Decimal exponent and count of significant digits of |x| once rounded to
// `digits` significant digits.
struct Magnitude {
  int exponent = 0;
  int sig = 1;
};

Magnitude magnitude(double x, int digits) {
  if (x == 0) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, std::fabs(x));
  std::string text(buf);
  auto e = text.find('e');
  Magnitude m;
  m.exponent = std::atoi(text.c_str() + e + 1);
  std::string mantissa;
  for (std::size_t i = 0; i < e; ++i) {
    if (text[i] != '.') mantissa += text[i];
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  m.sig = static_cast<int>(mantissa.size());
  return m;
}

std::string non_finite(double x) {
  if (std::isnan(x)) return "NaN";
  return x > 0 ? "Inf" : "-Inf";
}

bool is_syntactic_name(const std::string& name) {
  if (name.empty()) return false;
  char c = name.front();
  if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '.')) return false;
  if (c == '.' && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1]))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '_';
  });
}

void print_vector_items(std::ostream& out, const std::vector<std::string>& items, bool left_align) {
  std::size_t width = 0;
  for (const auto& s : items) width = std::max(width, s.size());
  std::string last_label = "[" + std::to_string(items.size()) + "]";
  std::size_t label_width = last_label.size();
  std::size_t per_line = std::max<std::size_t>(1, (kLineWidth - label_width) / (width + 1));
  for (std::size_t i = 0; i < items.size(); i += per_line) {
    out << pad_left("[" + std::to_string(i + 1) + "]", label_width);
    for (std::size_t j = i; j < std::min(items.size(), i + per_line); ++j) {
      out << ' ' << (left_align ? pad_right(items[j], width) : pad_left(items[j], width));
    }
    out << '\n';
  }
}

void print_attributes(std::ostream& out, const NamedList& attributes);

void print_with_prefix(std::ostream& out, const Value& v, const std::string& prefix) {
  struct Visitor {
    std::ostream& out;
    const std::string& prefix;

    void operator()(const Null&) const { out << "NULL\n"; }
    void operator()(const NumericVector& x) const {
      if (x.items.empty()) {
        out << "numeric(0)\n";
        return;
      }
      print_vector_items(out, format_numbers(x.items), false);
    }
    void operator()(const StringVector& x) const {
      if (x.items.empty()) {
        out << "character(0)\n";
        return;
      }
      std::vector<std::string> quoted;
      quoted.reserve(x.items.size());
      for (const auto& s : x.items) quoted.push_back(quote_string(s));
      print_vector_items(out, quoted, true);
    }
    void operator()(const LogicalVector& x) const {
      if (x.items.empty()) {
        out << "logical(0)\n";
        return;
      }
      std::vector<std::string> items;
      for (bool b : x.items) items.emplace_back(b ? "TRUE" : "FALSE");
      print_vector_items(out, items, false);
    }
    void operator()(const Record& r) const {
      if (r.fields.empty()) {
        out << "list()\n";
        return;
      }
      for (std::size_t i = 0; i < r.fields.size(); ++i) {
        const std::string& name = r.fields.name_at(i);
        std::string tag = prefix + "$" + (is_syntactic_name(name) ? name : "`" + name + "`");
        out << tag << '\n';
        print_with_prefix(out, r.fields.value_at(i), tag);
        out << '\n';
      }
    }
    void operator()(const Closure& c) const {
      std::string head = "function(";
      for (std::size_t i = 0; i < c.params.size(); ++i) {
        if (i > 0) head += ", ";
        head += c.params[i];
      }
      out << head << ") " << pretty_print(*c.body) << '\n';
    }
    void operator()(const Builtin& b) const { out << "<builtin: " << b.name << ">\n"; }
  };
  std::visit(Visitor{out, prefix}, v.payload);
  print_attributes(out, v.attributes);
}

void print_attributes(std::ostream& out, const NamedList& attributes) {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    out << "attr(,\"" << attributes.name_at(i) << "\")\n";
    print_with_prefix(out, attributes.value_at(i), "");
  }
}

}  // namespace

std::vector<std::string> format_numbers(std::span<const double> values, int digits) {
  bool any_finite = false;
  bool negative = false;
  int max_left = 1;
  int max_right = 0;
  int max_sig = 1;
  bool wide_exponent = false;
  for (double x : values) {
    if (!std::isfinite(x)) continue;
    any_finite = true;
    if (x < 0) negative = true;
    Magnitude m = magnitude(x, digits);
    max_left = std::max(max_left, m.exponent >= 0 ? m.exponent + 1 : 1);
    max_right = std::max(max_right, std::max(0, m.sig - m.exponent - 1));
    max_sig = std::max(max_sig, m.sig);
    if (std::abs(m.exponent) >= 100) wide_exponent = true;
  }

  bool fixed = true;
  if (any_finite) {
    int fixed_width = (negative ? 1 : 0) + max_left + (max_right > 0 ? max_right + 1 : 0);
    int sci_width =
        (negative ? 1 : 0) + (max_sig > 1 ? max_sig + 1 : 1) + 2 + (wide_exponent ? 3 : 2);
    fixed = fixed_width <= sci_width;
  }

  std::vector<std::string> out;
  out.reserve(values.size());
  char buf[512];
  for (double x : values) {
    if (!std::isfinite(x)) {
      out.push_back(non_finite(x));
      continue;
    }
    if (x == 0) x = 0;  // drop the sign of -0
    if (fixed) {
      std::snprintf(buf, sizeof buf, "%.*f", max_right, x);
    } else {
      std::snprintf(buf, sizeof buf, "%.*e", max_sig - 1, x);
    }
    std::string s(buf);
    if (s.size() > 1 && s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
      s.erase(0, 1);  // "-0.00" after rounding
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_number(double value, int digits) {
  return format_numbers(std::span<const double>(&value, 1), digits).front();
}

std::string pad_left(const std::string& text, std::size_t width) {
  if (text.size() >= width) return text;
  return std::string(width - text.size(), ' ') + text;
}

std::string pad_right(const std::string& text, std::size_t width) {
  if (text.size() >= width) return text;
  return text + std::string(width - text.size(), ' ');
}

std::vector<std::string> as_character(const Value& v) {
  if (const auto* s = v.get_if<StringVector>()) return s->items;
  std::vector<std::string> out;
  if (const auto* n = v.get_if<NumericVector>()) {
    for (double x : n->items) out.push_back(format_number(x, 15));
    return out;
  }
  if (const auto* l = v.get_if<LogicalVector>()) {
    for (bool b : l->items) out.emplace_back(b ? "TRUE" : "FALSE");
    return out;
  }
  if (v.is<Null>()) return out;
  throw RuntimeError("cannot coerce type '" + std::string(type_name(v)) +
                     "' to vector of type 'character'");
}

void print_value(std::ostream& out, const Value& v) { print_with_prefix(out, v, ""); }

std::string format_value(const Value& v) {
  std::ostringstream out;
  print_value(out, v);
  return out.str();
}

}  // namespace s3lite
