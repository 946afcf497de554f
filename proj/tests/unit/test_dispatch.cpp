#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "s3lite/dispatch.hpp"
#include "s3lite/stdlib.hpp"
#include "s3lite/errors.hpp"
#include "test_support.hpp"

using namespace s3lite;
using s3lite::testing::Harness;
using s3lite::testing::numbers_of;
using s3lite::testing::strings_of;

namespace {

using Names = std::vector<std::string>;

std::shared_ptr<Environment> rss_table() {
  auto env = std::make_shared<Environment>();
  for (const char* name : {"rss.rpart", "rss.gbm", "rss.randomForest", "rss.default"}) {
    env->define(name, Value{Builtin{name}});
  }
  return env;
}

}  // namespace

TEST_CASE("resolve_method over the rss table") {
  auto env = rss_table();

  DispatchOutcome rf = resolve_method("rss", ClassVector{"randomForest"}, *env);
  CHECK(rf.chosen == std::optional<std::string>("rss.randomForest"));
  CHECK(rf.candidates_tried == Names{"rss.randomForest"});

  DispatchOutcome fn = resolve_method("rss", ClassVector{"function"}, *env);
  CHECK(fn.chosen == std::optional<std::string>("rss.default"));
  CHECK(fn.candidates_tried == Names{"rss.function", "rss.default"});

  DispatchOutcome multi = resolve_method("rss", ClassVector{"a", "gbm"}, *env);
  CHECK(multi.chosen == std::optional<std::string>("rss.gbm"));
  CHECK(multi.candidates_tried == Names{"rss.a", "rss.gbm"});
  CHECK(multi.generic == "rss");
  CHECK(multi.receiver_classes == ClassVector{"a", "gbm"});
}

TEST_CASE("resolve_method with nothing bound") {
  Environment env;
  DispatchOutcome out = resolve_method("g", ClassVector{"x", "y"}, env);
  CHECK_FALSE(out.chosen.has_value());
  CHECK(out.candidates_tried == Names{"g.x", "g.y", "g.default"});
}

TEST_CASE("non-function bindings are skipped") {
  auto global = std::make_shared<Environment>();
  global->define("g.a", Value{Builtin{"outer"}});
  auto inner = std::make_shared<Environment>(global);
  inner->define("g.a", Value::number(1));
  inner->define("g.b", Value::string("data"));

  DispatchOutcome out = resolve_method("g", ClassVector{"b", "a"}, *inner);
  CHECK(out.chosen == std::optional<std::string>("g.a"));
  CHECK(out.candidates_tried == Names{"g.b", "g.a"});
  const Value* fn = find_function(*inner, "g.a");
  REQUIRE(fn != nullptr);
  CHECK(fn->as<Builtin>().name == "outer");
  CHECK(find_function(*inner, "g.b") == nullptr);
}

TEST_CASE("methods_of scans the whole chain") {
  auto global = rss_table();
  global->define("rss", Value{Builtin{"rss"}});
  global->define("rss.data", Value::number(3));
  auto inner = std::make_shared<Environment>(global);
  inner->define("rss.zzz", Value{Builtin{"z"}});
  inner->define("rss.gbm", Value{Builtin{"shadow"}});
  CHECK(methods_of("rss", *inner) ==
        Names{"rss.default", "rss.gbm", "rss.randomForest", "rss.rpart", "rss.zzz"});
  CHECK(methods_of("nosuch", *inner).empty());
  CHECK(methods_of("rss.r", *inner).empty());
}

TEST_CASE("methods() in the prelude") {
  Harness h;
  CHECK(strings_of(h.eval("methods(\"summary\")")) ==
        Names{"summary.data_frame", "summary.default"});
  CHECK(strings_of(h.eval("methods(\"rss\")")) ==
        Names{"rss.default", "rss.gbm", "rss.randomForest", "rss.rpart"});
  CHECK(strings_of(h.eval("methods(rss)")) ==
        Names{"rss.default", "rss.gbm", "rss.randomForest", "rss.rpart"});
  CHECK(strings_of(h.eval("methods(\"nosuch\")")).empty());
}

TEST_CASE("inherits") {
  Harness h;
  CHECK(inherits(h.eval("fixtures$rpart"), "rpart"));
  CHECK_FALSE(inherits(Value::numbers({1, 2}), "rpart"));
  CHECK(inherits(set_class(Value::record(), ClassVector{"a", "b"}), "b"));
  CHECK(h.eval("inherits(fixtures$gbm, \"gbm\")").as<LogicalVector>().items ==
        std::vector<bool>{true});
}

TEST_CASE("UseMethod transfers to the resolved method") {
  Harness h;
  CHECK(numbers_of(h.eval("rss(fixtures$randomForest)")) == std::vector<double>{5});
  CHECK(numbers_of(h.eval("rss(fixtures$gbm)")) == std::vector<double>{0.5});

  SUBCASE("the rest of the generic's body is abandoned") {
    h.eval("g <- function(x) { UseMethod(\"g\")\n stop_marker <- 1\n 999 }\n"
           "g.default <- function(x) 7");
    CHECK(numbers_of(h.eval("g(1)")) == std::vector<double>{7});
  }
  SUBCASE("the method receives the original arguments") {
    h.eval("h2 <- function(x, y) UseMethod(\"h2\")\nh2.numeric <- function(x, y) x + y");
    CHECK(numbers_of(h.eval("h2(1, 2)")) == std::vector<double>{3});
  }
  SUBCASE("methods can dispatch again") {
    h.eval("outer <- function(x) UseMethod(\"outer\")\n"
           "outer.gbm <- function(x) rss(x) * 10");
    CHECK(numbers_of(h.eval("outer(fixtures$gbm)")) == std::vector<double>{5});
  }
}

TEST_CASE("UseMethod errors") {
  Harness h;
  CHECK_THROWS_WITH_AS(h.eval("UseMethod(\"rss\")"), "UseMethod called from outside a function",
                       RuntimeError);
  h.eval("k <- function(x) UseMethod(\"k\")");
  CHECK_THROWS_WITH_AS(h.eval("k(1)"),
                       "no applicable method for 'k' applied to an object of class \"numeric\"",
                       RuntimeError);
}

TEST_CASE("dispatch_trace reports the resolution") {
  Harness h;
  Value trace = h.eval("x <- list()\nclass(x) <- c(\"a\", \"gbm\")\ndispatch_trace(\"rss\", x)");
  const auto& f = trace.as<Record>().fields;
  CHECK(strings_of(*f.find("generic")) == Names{"rss"});
  CHECK(strings_of(*f.find("classes")) == Names{"a", "gbm"});
  CHECK(strings_of(*f.find("tried")) == Names{"rss.a", "rss.gbm"});
  CHECK(strings_of(*f.find("chosen")) == Names{"rss.gbm"});

  Value none = h.eval("dispatch_trace(\"nosuch\", 1)");
  REQUIRE(none.as<Record>().fields.find("chosen") != nullptr);
  CHECK(none.as<Record>().fields.find("chosen")->is<Null>());
}

TEST_CASE("the dispatch observer sees every resolution") {
  Harness h;
  std::vector<DispatchOutcome> seen;
  h.session.interpreter().set_dispatch_observer(
      [&seen](const DispatchOutcome& o) { seen.push_back(o); });
  h.eval("rss(fixtures$rpart)");
  REQUIRE(seen.size() == 2);
  CHECK(seen[0].generic == "rss");
  CHECK(seen[0].chosen == std::optional<std::string>("rss.rpart"));
  CHECK(seen[1].generic == "residuals");
  CHECK(seen[1].chosen == std::optional<std::string>("residuals.rpart"));
}

TEST_CASE("dispatch equivalence for every prelude generic and fixture") {
  Harness h;
  const char* receivers[] = {"fixtures$rpart", "fixtures$gbm", "fixtures$randomForest", "iris",
                             "c(1, 2, 3)"};
  for (const char* generic : {"rss", "residuals", "summary"}) {
    for (const char* receiver : receivers) {
      std::string src = std::string("dispatch_trace(\"") + generic + "\", " + receiver + ")$chosen";
      Value chosen = h.eval(src);
      if (chosen.is<Null>()) continue;
      std::string method = strings_of(chosen)[0];
      CAPTURE(method);
      CAPTURE(receiver);
      auto outcome = [&h](const std::string& src) {
        h.sink.clear();
        std::pair<Value, std::string> result;
        try {
          result.first = h.eval(src);
        } catch (const RuntimeError& e) {
          result.second = e.what();
        }
        return result;
      };
      auto via_generic = outcome(std::string(generic) + "(" + receiver + ")");
      auto generic_warnings = h.sink.warnings().size();
      auto direct = outcome(method + "(" + receiver + ")");
      CHECK(generic_warnings == h.sink.warnings().size());
      CHECK(via_generic.second == direct.second);
      CHECK(all_equal(via_generic.first, direct.first));
    }
  }
}
