#include <memory>

#include "doctest.h"
#include "s3lite/environment.hpp"
#include "s3lite/errors.hpp"
#include "s3lite/table.hpp"
#include "s3lite/value.hpp"
#include "test_support.hpp"

using namespace s3lite;
using s3lite::testing::Harness;

TEST_CASE("get_class returns the implicit class of each payload kind") {
  CHECK(get_class(Value::numbers({1, 2, 3})) == ClassVector{"numeric"});
  CHECK(get_class(Value::string("a")) == ClassVector{"character"});
  CHECK(get_class(Value::logical(true)) == ClassVector{"logical"});
  CHECK(get_class(Value::record()) == ClassVector{"list"});
  CHECK(get_class(Value{Builtin{"sum"}}) == ClassVector{"function"});
  CHECK(get_class(Value{Closure{}}) == ClassVector{"function"});
  CHECK(get_class(Value::null()) == ClassVector{"NULL"});
}

TEST_CASE("get_class returns an explicit class attribute verbatim") {
  Value v = set_class(Value::record(), ClassVector{"data_frame"});
  CHECK(get_class(v) == ClassVector{"data_frame"});

  Harness h;
  CHECK(get_class(h.eval("iris")) == ClassVector{"data_frame"});
}

TEST_CASE("set_class replaces the class and keeps the payload") {
  Value v = Value::numbers({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  Value c = set_class(v, ClassVector{"myclass"});
  CHECK(get_class(c) == ClassVector{"myclass"});
  CHECK(c.as<NumericVector>().items == v.as<NumericVector>().items);

  Value ab = set_class(Value::record(), ClassVector{"a", "b"});
  CHECK(get_class(ab) == ClassVector{"a", "b"});

  Value again = set_class(ab, get_class(ab));
  CHECK(get_class(again) == get_class(ab));
}

TEST_CASE("set_class rejects an empty vector or an empty name") {
  CHECK_THROWS_AS(set_class(Value::number(1), ClassVector{}), RuntimeError);
  CHECK_THROWS_AS(set_class(Value::number(1), ClassVector{"a", ""}), RuntimeError);
}

TEST_CASE("copying a value does not share its fields") {
  Value x = Value::record();
  x.as<Record>().fields.set("f", Value::number(1));
  Value y = x;
  y.as<Record>().fields.set("f", Value::number(2));
  CHECK(x.as<Record>().fields.find("f")->as<NumericVector>().items[0] == 1);
}

TEST_CASE("NamedList keeps insertion order and overwrites in place") {
  NamedList l;
  l.set("b", Value::number(1));
  l.set("a", Value::number(2));
  l.set("b", Value::number(3));
  CHECK(l.names() == std::vector<std::string>{"b", "a"});
  CHECK(l.find("b")->as<NumericVector>().items[0] == 3);
  CHECK(l.erase("b"));
  CHECK_FALSE(l.contains("b"));
  CHECK(l.find("zzz") == nullptr);
}

TEST_CASE("env_lookup walks the parent chain") {
  auto global = std::make_shared<Environment>();
  auto child = std::make_shared<Environment>(global);
  global->define("x", Value::number(1));
  CHECK(child->lookup("x").as<NumericVector>().items[0] == 1);

  child->define("x", Value::number(2));
  CHECK(child->lookup("x").as<NumericVector>().items[0] == 2);
  CHECK(global->lookup("x").as<NumericVector>().items[0] == 1);

  try {
    (void)global->lookup("zzz");
    FAIL("lookup of an unbound name succeeded");
  } catch (const RuntimeError& e) {
    CHECK(std::string(e.what()) == "object 'zzz' not found");
  }
  CHECK(global->parent() == nullptr);
}

TEST_CASE("env_define writes the innermost frame only") {
  auto global = std::make_shared<Environment>();
  auto child = std::make_shared<Environment>(global);
  child->define("v", Value::string("a"));
  CHECK(child->lookup("v").as<StringVector>().items[0] == "a");
  CHECK_FALSE(global->has_local("v"));

  child->define("v", Value::string("b"));
  CHECK(child->lookup("v").as<StringVector>().items[0] == "b");
  CHECK(child->local_names() == std::vector<std::string>{"v"});
}

TEST_CASE("missing parameters error only when used") {
  Environment env;
  env.define_missing("x");
  CHECK(env.find_local("x") == nullptr);
  CHECK_THROWS_WITH_AS((void)env.lookup("x"), "argument \"x\" is missing, with no default",
                       RuntimeError);
}

TEST_CASE("length_of counts elements and fields") {
  CHECK(length_of(Value::numbers({1, 2})) == 2);
  CHECK(length_of(Value::null()) == 0);
  Value r = Value::record();
  r.as<Record>().fields.set("a", Value::null());
  CHECK(length_of(r) == 1);
}

TEST_CASE("the bundled iris table is a valid data frame") {
  Harness h;
  Value iris = h.eval("iris");
  CHECK_NOTHROW(validate_data_frame(iris));
  const auto& fields = iris.as<Record>().fields;
  CHECK(fields.names() == std::vector<std::string>{"Sepal.Length", "Sepal.Width", "Petal.Length",
                                                   "Petal.Width", "Species"});
  for (std::size_t i = 0; i < fields.size(); ++i) CHECK(length_of(fields.value_at(i)) == 150);
  CHECK(fields.find("Species")->is<StringVector>());
}
