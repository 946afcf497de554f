#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "s3lite/ast.hpp"
#include "s3lite/dispatch.hpp"
#include "s3lite/errors.hpp"
#include "s3lite/lexer.hpp"
#include "s3lite/parser.hpp"
#include "s3lite/printer.hpp"
#include "s3lite/stats.hpp"
#include "s3lite/stdlib.hpp"
#include "test_support.hpp"

using namespace s3lite;
using namespace s3lite::ast;
using s3lite::testing::Harness;

namespace {

constexpr unsigned kSeed = 20161017;

class AstGen {
 public:
  explicit AstGen(std::mt19937& rng) : rng_(rng) {}

  NodePtr program() {
    Block block;
    int n = pick(1, 4);
    for (int i = 0; i < n; ++i) block.statements.push_back(statement(3));
    return make(std::move(block));
  }

  NodePtr statement(int depth) {
    switch (pick(0, 5)) {
      case 0: return make(Assign{assign_target(), expr(depth)});
      case 1: return replacement(depth);
      default: return expr(depth);
    }
  }

  NodePtr expr(int depth) {
    if (depth <= 0) return leaf();
    switch (pick(0, 11)) {
      case 0: return leaf();
      case 1: return make(Binary{binary_op(), expr(depth - 1), expr(depth - 1)});
      case 2: return make(Binary{binary_op(), expr(depth - 1), expr(depth - 1)});
      case 3: return make(Negate{expr(depth - 1)});
      case 4: return make(FieldAccess{expr(depth - 1), name()});
      case 5: {
        Call call{pick(0, 3) == 0 ? expr(depth - 1) : ident(), {}};
        int n = pick(0, 3);
        for (int i = 0; i < n; ++i) call.args.push_back(expr(depth - 1));
        return make(std::move(call));
      }
      case 6: {
        FunctionDef def;
        int n = pick(0, 3);
        for (int i = 0; i < n; ++i) {
          std::string p = name();
          if (std::find(def.params.begin(), def.params.end(), p) == def.params.end()) {
            def.params.push_back(p);
          }
        }
        def.body = pick(0, 1) == 0 ? block(depth - 1) : expr(depth - 1);
        return make(std::move(def));
      }
      case 7: return block(depth - 1);
      case 8: {
        NodePtr else_branch = pick(0, 1) == 0 ? nullptr : expr(depth - 1);
        return make(If{expr(depth - 1), expr(depth - 1), else_branch});
      }
      case 9: return make(Assign{assign_target(), expr(depth - 1)});
      default: return leaf();
    }
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string name() {
    static const char* names[] = {"x", "y", "rss", "rss.default", "fit.rf", ".hidden", "a_b",
                                  "summary.data_frame", "x1", "NULL"};
    return names[pick(0, 9)];
  }

  NodePtr ident() { return make(Ident{name()}); }

  NodePtr leaf() {
    switch (pick(0, 3)) {
      case 0: {
        static const double numbers[] = {0, 1, 2.5, 10.17245, 1e-10, 1e+20, 123456789, 0.1};
        return make(NumberLit{numbers[pick(0, 7)]});
      }
      case 1: {
        static const char* strings[] = {"", "rss", "a\"b", "back\\slash", "tab\tnew\nline",
                                        "# not a comment", "%in%"};
        return make(StringLit{strings[pick(0, 6)]});
      }
      default: return ident();
    }
  }

  NodePtr assign_target() {
    NodePtr target = ident();
    int fields = pick(0, 3) == 0 ? pick(1, 2) : 0;
    for (int i = 0; i < fields; ++i) target = make(FieldAccess{target, name()});
    return target;
  }

  NodePtr replacement(int depth) {
    ReplacementAssign r;
    r.target = name();
    if (pick(0, 1) == 0) {
      r.function = "class";
    } else {
      r.function = "attr";
      r.extra.push_back(make(StringLit{"note"}));
    }
    r.value = expr(depth - 1);
    return make(std::move(r));
  }

  NodePtr block(int depth) {
    Block b;
    int n = pick(0, 3);
    for (int i = 0; i < n; ++i) b.statements.push_back(statement(depth));
    return make(std::move(b));
  }

  BinaryOp binary_op() {
    static const BinaryOp ops[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div,
                                   BinaryOp::Pow, BinaryOp::Range, BinaryOp::In};
    return ops[pick(0, 6)];
  }

  std::mt19937& rng_;
};

// Independent statement of the resolution rule.
std::vector<std::string> expected_candidates(const std::string& generic,
                                             const std::vector<std::string>& classes,
                                             const std::vector<std::shared_ptr<Environment>>& chain,
                                             std::optional<std::string>& chosen) {
  auto bound_to_function = [&chain](const std::string& name) {
    for (const auto& frame : chain) {
      const Value* v = frame->find_local(name);
      if (v != nullptr && v->is_function()) return true;
    }
    return false;
  };
  std::vector<std::string> names;
  for (const auto& c : classes) names.push_back(generic + "." + c);
  names.push_back(generic + ".default");
  std::vector<std::string> tried;
  chosen.reset();
  for (const auto& n : names) {
    tried.push_back(n);
    if (bound_to_function(n)) {
      chosen = n;
      break;
    }
  }
  return tried;
}

Value random_value(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 5 : 3);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_real_distribution<double> num(-100, 100);
  Value v;
  switch (kind(rng)) {
    case 0: {
      std::vector<double> xs(len(rng));
      for (auto& x : xs) x = num(rng);
      v = Value::numbers(std::move(xs));
      break;
    }
    case 1: {
      std::vector<std::string> ss(len(rng));
      for (auto& s : ss) s = std::string(1, static_cast<char>('a' + len(rng)));
      v = Value::strings(std::move(ss));
      break;
    }
    case 2: v = Value::logical(len(rng) % 2 == 0); break;
    case 3: v = Value::null(); break;
    default: {
      v = Value::record();
      int n = len(rng);
      for (int i = 0; i < n; ++i) {
        v.as<Record>().fields.set("f" + std::to_string(i), random_value(rng, depth - 1));
      }
    }
  }
  if (!v.is<Null>() && len(rng) == 0) v = set_class(v, ClassVector{"k" + std::to_string(len(rng))});
  return v;
}

}  // namespace

TEST_CASE("parser round-trip on 500 random trees") {
  std::mt19937 rng(kSeed);
  AstGen gen(rng);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    NodePtr tree = gen.program();
    std::string printed = pretty_print_program(*tree);
    CAPTURE(i);
    CAPTURE(printed);
    NodePtr reparsed;
    try {
      reparsed = parse_source(printed);
    } catch (const std::exception& e) {
      FAIL_CHECK("reparse failed: " << e.what());
      continue;
    }
    bool same = structurally_equal(tree, reparsed);
    CHECK(same);
    if (same) {
      CHECK(pretty_print_program(*reparsed) == printed);
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("every parse error position lies within the source") {
  std::mt19937 rng(kSeed + 1);
  AstGen gen(rng);
  const std::string noise = "(){}$<-+*/:;,\"#%\n x1if else";
  int errors = 0;
  for (int i = 0; i < 500; ++i) {
    std::string source = pretty_print_program(*gen.program());
    int edits = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int e = 0; e < edits; ++e) {
      std::size_t at = std::uniform_int_distribution<std::size_t>(0, source.size())(rng);
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0 && at < source.size()) {
        source.erase(at, 1);
      } else {
        source.insert(at, 1, noise[std::uniform_int_distribution<std::size_t>(0, noise.size() - 1)(rng)]);
      }
    }
    std::vector<std::size_t> line_lengths{0};
    for (char c : source) {
      if (c == '\n') line_lengths.push_back(0);
      else ++line_lengths.back();
    }
    SourcePos pos;
    try {
      parse_source(source);
      continue;
    } catch (const SyntaxError& e) {
      pos = e.pos();
    } catch (const LexError& e) {
      pos = e.pos();
    }
    ++errors;
    CAPTURE(source);
    REQUIRE(pos.line >= 1);
    REQUIRE(static_cast<std::size_t>(pos.line) <= line_lengths.size());
    CHECK(pos.col >= 1);
    CHECK(static_cast<std::size_t>(pos.col) <= line_lengths[pos.line - 1] + 1);
  }
  CHECK(errors > 100);
}

TEST_CASE("candidate-order law on random class vectors and method tables") {
  std::mt19937 rng(kSeed + 2);
  const std::vector<std::string> classes_pool{"a", "b", "gbm", "rpart", "data_frame", "x.y"};
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    int frames = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::shared_ptr<Environment>> chain;
    std::shared_ptr<Environment> env;
    for (int f = 0; f < frames; ++f) {
      env = std::make_shared<Environment>(env);
      chain.insert(chain.begin(), env);
      for (const auto& c : classes_pool) {
        int roll = coin(rng);
        if (roll == 0) env->define("g." + c, Value{Builtin{"g." + c}});
        if (roll == 1) env->define("g." + c, Value::number(1));
      }
      int roll = coin(rng);
      if (roll == 0) env->define("g.default", Value{Builtin{"g.default"}});
      if (roll == 1) env->define("g.default", Value::string("not a function"));
    }
    std::vector<std::string> classes;
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) {
      classes.push_back(classes_pool[std::uniform_int_distribution<std::size_t>(
          0, classes_pool.size() - 1)(rng)]);
    }

    DispatchOutcome out = resolve_method("g", ClassVector(classes), *env);
    std::optional<std::string> chosen;
    std::vector<std::string> tried = expected_candidates("g", classes, chain, chosen);
    CAPTURE(trial);
    REQUIRE(out.candidates_tried == tried);
    REQUIRE(out.chosen == chosen);
    if (out.chosen) REQUIRE(*out.chosen == out.candidates_tried.back());
    REQUIRE(out.receiver_classes == ClassVector(classes));
    DispatchOutcome again = resolve_method("g", ClassVector(classes), *env);
    REQUIRE(again.candidates_tried == out.candidates_tried);
  }
}

TEST_CASE("candidate-order law holds for every UseMethod in running programs") {
  Harness h;
  std::vector<DispatchOutcome> seen;
  h.session.interpreter().set_dispatch_observer(
      [&seen](const DispatchOutcome& o) { seen.push_back(o); });
  std::mt19937 rng(kSeed + 3);
  const std::vector<std::string> pool{"rpart", "gbm", "randomForest", "lm", "a"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string cls;
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < n; ++i) {
      if (i > 0) cls += ", ";
      cls += "\"" + pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)] +
             "\"";
    }
    h.run("v <- fixtures$gbm\nclass(v) <- c(" + cls + ")\nr <- residuals(v)\nq <- rss(v)");
  }
  REQUIRE(seen.size() >= 400);
  for (const auto& o : seen) {
    std::vector<std::string> expected;
    for (const auto& c : o.receiver_classes.names) expected.push_back(o.generic + "." + c);
    expected.push_back(o.generic + ".default");
    REQUIRE(o.candidates_tried.size() <= expected.size());
    CHECK(std::equal(o.candidates_tried.begin(), o.candidates_tried.end(), expected.begin()));
    REQUIRE(o.chosen.has_value());
    CHECK(*o.chosen == o.candidates_tried.back());
    for (std::size_t i = 0; i + 1 < o.candidates_tried.size(); ++i) {
      CHECK(find_function(*h.session.global(), o.candidates_tried[i]) == nullptr);
    }
  }
}

TEST_CASE("default reachability") {
  std::mt19937 rng(kSeed + 4);
  Environment env;
  env.define("g.default", Value{Builtin{"g.default"}});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> classes;
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < n; ++i) classes.push_back("c" + std::to_string(rng() % 100));
    CHECK(resolve_method("g", ClassVector(classes), env).chosen ==
          std::optional<std::string>("g.default"));
  }
}

TEST_CASE("quantile_type7 boundaries and monotonicity") {
  std::mt19937 rng(kSeed + 5);
  std::uniform_real_distribution<double> value(-1e3, 1e3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(std::uniform_int_distribution<int>(1, 40)(rng));
    for (auto& x : v) x = value(rng);
    double lo = *std::min_element(v.begin(), v.end());
    double hi = *std::max_element(v.begin(), v.end());
    CHECK(quantile_type7(v, 0) == lo);
    CHECK(quantile_type7(v, 1) == hi);
    double previous = lo;
    for (int k = 1; k <= 50; ++k) {
      double q = quantile_type7(v, k / 50.0);
      CHECK(q >= previous);
      CHECK(q <= hi);
      previous = q;
    }
  }
}

TEST_CASE("constant columns summarize to six equal statistics") {
  std::mt19937 rng(kSeed + 6);
  for (int trial = 0; trial < 100; ++trial) {
    double c = std::uniform_real_distribution<double>(-50, 50)(rng);
    std::vector<double> v(std::uniform_int_distribution<int>(1, 30)(rng), c);
    NumericSummary s = summarize_numeric(v);
    for (double stat : {s.min, s.first_quartile, s.median, s.third_quartile, s.max}) {
      CHECK(stat == c);
    }
    CHECK(s.mean == doctest::Approx(c));
  }
}

TEST_CASE("copy semantics probe") {
  Harness h;
  std::mt19937 rng(kSeed + 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::string field = "f" + std::to_string(rng() % 5);
    std::string original = std::to_string(rng() % 1000);
    std::string replacement = std::to_string(1000 + rng() % 1000);
    h.run("x <- list()\nx$" + field + " <- " + original + "\ny <- x\ny$" + field + " <- " +
          replacement + "\nclass(y) <- \"other\"");
    Value x = h.eval("x");
    CHECK(testing::numbers_of(*x.as<Record>().fields.find(field))[0] == std::stod(original));
    CHECK(get_class(x) == ClassVector{"list"});
  }
}

TEST_CASE("class vector properties") {
  std::mt19937 rng(kSeed + 8);
  for (int trial = 0; trial < 300; ++trial) {
    Value v = random_value(rng, 2);
    CHECK_FALSE(get_class(v).empty());
    std::vector<std::string> names;
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < n; ++i) names.push_back("cls" + std::to_string(rng() % 7));
    Value classed = set_class(v, ClassVector(names));
    CHECK(get_class(classed) == ClassVector(names));
    CHECK(classed.payload.index() == v.payload.index());
    Value stripped = classed;
    stripped.attributes = v.attributes;
    CHECK(all_equal(stripped, v));
  }
}

TEST_CASE("all.equal is reflexive and symmetric") {
  std::mt19937 rng(kSeed + 9);
  std::uniform_real_distribution<double> jitter(-1e-6, 1e-6);
  for (int trial = 0; trial < 500; ++trial) {
    Value a = random_value(rng, 2);
    Value b = random_value(rng, 2);
    CHECK(all_equal(a, a));
    CHECK(all_equal(a, b) == all_equal(b, a));
    if (auto* n = a.get_if<NumericVector>(); n != nullptr && !n->items.empty()) {
      Value near = a;
      for (auto& x : near.as<NumericVector>().items) x *= 1 + jitter(rng);
      CHECK(all_equal(a, near) == all_equal(near, a));
    }
  }
}
