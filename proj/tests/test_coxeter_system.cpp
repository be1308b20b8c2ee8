#include <catch_amalgamated.hpp>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/errors.hpp"

using namespace coxgenus;

TEST_CASE("parse diagram JSON", "[coxeter]") {
  const auto sys = parse_system_text(R"({"generators":["s","t"],"matrix":[[1,3],[3,1]]})");
  CHECK(sys.rank() == 2);
  CHECK(sys.m(0, 1) == 3);
  CHECK(sys.generator(1) == "t");
  CHECK(sys.name() == "custom");
  CHECK(sys.index_of("t") == 1);
}

TEST_CASE("zero in the file means infinity", "[coxeter]") {
  const auto sys = parse_system_text(R"({"generators":["a","b"],"matrix":[[1,0],[0,1]]})");
  CHECK(sys.m(0, 1) == kInfinity);
  CHECK(sys.to_json()["matrix"][0][1] == 0);
  CHECK(parse_system(sys.to_json()) == sys);
}

TEST_CASE("invalid diagrams are rejected", "[coxeter]") {
  CHECK_THROWS_AS(parse_system_text(R"({"generators":["s","t"],"matrix":[[1,2],[3,1]]})"), InputError);
  CHECK_THROWS_AS(parse_system_text(R"({"generators":["s","t"],"matrix":[[2,3],[3,1]]})"), InputError);
  CHECK_THROWS_AS(parse_system_text(R"({"generators":["s","t"],"matrix":[[1,1],[1,1]]})"), InputError);
  CHECK_THROWS_AS(parse_system_text(R"({"generators":["s","s"],"matrix":[[1,3],[3,1]]})"), InputError);
  CHECK_THROWS_AS(parse_system_text(R"({"generators":["s"],"matrix":[[1,3]]})"), InputError);
  CHECK_THROWS_AS(parse_system_text(R"({"generators":[],"matrix":[]})"), InputError);
  CHECK_THROWS_AS(parse_system_text(R"({"generators":["s","t"],"matrix":[[1,-3],[-3,1]]})"), InputError);
  CHECK_THROWS_AS(parse_system_text("not json"), InputError);
  CHECK_THROWS_AS(parse_system_text(R"([1,2])"), InputError);
}

TEST_CASE("builtin catalog", "[coxeter]") {
  const auto a2t = builtin_system("A~2");
  CHECK(a2t.rank() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a2t.m(i, j) == (i == j ? 1u : 3u));

  CHECK(builtin_system("A~1").m(0, 1) == kInfinity);
  CHECK(builtin_system("B3").m(1, 2) == 4);
  CHECK(builtin_system("I2(7)").m(0, 1) == 7);
  CHECK(builtin_system("G~2").rank() == 3);
  CHECK(builtin_system("E~8").rank() == 9);
  CHECK(builtin_system("E~8").generator(8) == "s9");
  CHECK(builtin_system("A2").generators() == std::vector<std::string>{"s", "t"});

  CHECK_THROWS_AS(builtin_system("Q7"), InputError);
  CHECK_THROWS_AS(builtin_system("E9"), InputError);
  CHECK_THROWS_AS(builtin_system("B~2"), InputError);
  CHECK_THROWS_AS(builtin_system("D3"), InputError);
  CHECK_THROWS_AS(builtin_system("A0"), InputError);
  CHECK_THROWS_AS(builtin_system("I2(1)"), InputError);

  for (const auto& name : catalog_sample()) CHECK_NOTHROW(builtin_system(name));
}

TEST_CASE("irreducible components follow edges with m >= 3", "[coxeter]") {
  const auto a2 = builtin_system("A2");
  CHECK(irreducible_components(a2, a2.all()).size() == 1);

  const auto a1a1 = parse_system_text(R"({"generators":["s","t"],"matrix":[[1,2],[2,1]]})");
  const auto comps = irreducible_components(a1a1, a1a1.all());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == Subset::singleton(0));
  CHECK(comps[1] == Subset::singleton(1));

  const auto a2t = builtin_system("A~2");
  CHECK(irreducible_components(a2t, Subset::of({1, 2})).size() == 1);
  CHECK(irreducible_components(a2t, Subset()).empty());

  // D4 minus the branch node falls apart into three points.
  const auto d4 = builtin_system("D4");
  CHECK(irreducible_components(d4, d4.all().without(2)).size() == 3);
}

TEST_CASE("subset helpers", "[coxeter]") {
  const auto sys = builtin_system("A3");
  const Subset J = sys.subset_of({"s", "u"});
  CHECK(J == Subset::of({0, 2}));
  CHECK(sys.describe(J) == "{s,u}");
  CHECK(J.count_below(2) == 1);
  CHECK(J.size() == 2);
  CHECK(Subset::of({0}).is_subset_of(J));
  CHECK_THROWS_AS(sys.subset_of({"x"}), InputError);
}
