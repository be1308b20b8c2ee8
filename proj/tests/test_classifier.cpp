#include <catch_amalgamated.hpp>

#include <random>

#include "coxgenus/classifier.hpp"
#include "coxgenus/errors.hpp"
#include "oracles.hpp"

using namespace coxgenus;

TEST_CASE("empty subset is the trivial group", "[classifier]") {
  const auto r = classify(builtin_system("A~2"), Subset());
  CHECK(r.finite);
  CHECK(r.order == 1);
  CHECK(r.type_name() == "trivial");
}

TEST_CASE("affine triangle is infinite, its edges are A2", "[classifier]") {
  const auto sys = builtin_system("A~2");
  CHECK_FALSE(classify(sys, sys.all()).finite);
  const auto edge = classify(sys, Subset::of({0, 1}));
  CHECK(edge.finite);
  CHECK(edge.type_name() == "A2");
  CHECK(edge.order == 6);
}

TEST_CASE("labels and orders for the finite catalog", "[classifier]") {
  const std::vector<std::pair<std::string, long>> expected = {
      {"A1", 2},     {"A3", 24},    {"B3", 48},      {"B4", 384},    {"D4", 192},
      {"D5", 1920},  {"E6", 51840}, {"E7", 2903040}, {"F4", 1152},   {"H3", 120},
      {"H4", 14400}, {"I2(5)", 10}, {"I2(7)", 14},   {"I2(6)", 12}};
  for (const auto& [name, order] : expected) {
    const auto sys = builtin_system(name);
    const auto r = classify(sys, sys.all());
    INFO(name);
    REQUIRE(r.finite);
    CHECK(r.type_name() == name);
    CHECK(r.order == order);
  }
  CHECK(classify(builtin_system("E8"), Subset::full(8)).order == Integer("696729600"));
}

TEST_CASE("I2(3) and I2(4) are normalized", "[classifier]") {
  CHECK(classify(builtin_system("I2(3)"), Subset::full(2)).type_name() == "A2");
  CHECK(classify(builtin_system("I2(4)"), Subset::full(2)).type_name() == "B2");
}

TEST_CASE("reducible types are products", "[classifier]") {
  const auto sys = parse_system_text(
      R"({"generators":["a","b","c"],"matrix":[[1,3,2],[3,1,2],[2,2,1]]})");
  const auto r = classify(sys, sys.all());
  CHECK(r.finite);
  CHECK(r.order == 12);
  CHECK(r.components.size() == 2);
}

TEST_CASE("non-Coxeter-graph shapes are infinite", "[classifier]") {
  // A 4 inside a longer path, two marked edges, a 6 in rank 3, and 5 next
  // to another marked edge.
  for (const auto* text : {
           R"({"generators":["a","b","c","d","e"],"matrix":[[1,3,2,2,2],[3,1,4,2,2],[2,4,1,3,2],[2,2,3,1,3],[2,2,2,3,1]]})",
           R"({"generators":["a","b","c"],"matrix":[[1,4,2],[4,1,4],[2,4,1]]})",
           R"({"generators":["a","b","c"],"matrix":[[1,6,2],[6,1,3],[2,3,1]]})",
           R"({"generators":["a","b","c"],"matrix":[[1,5,2],[5,1,4],[2,4,1]]})",
           R"({"generators":["a","b","c"],"matrix":[[1,5,2],[5,1,5],[2,5,1]]})"}) {
    const auto sys = parse_system_text(text);
    INFO(text);
    CHECK_FALSE(is_finite_type(sys, sys.all()));
  }
  CHECK_FALSE(is_finite_type(builtin_system("E~8"), Subset::full(9)));
  CHECK(is_finite_type(builtin_system("E~8"), Subset::full(9).without(0)));
  const auto h3 = parse_system_text(R"({"generators":["a","b","c"],"matrix":[[1,3,2],[3,1,5],[2,5,1]]})");
  CHECK(classify(h3, h3.all()).type_name() == "H3");
}

TEST_CASE("degrees multiply to the order", "[classifier]") {
  CHECK(degrees_of({Family::A, 1, 0}) == std::vector<int>{2});
  CHECK(degrees_of({Family::A, 2, 0}) == std::vector<int>{2, 3});
  CHECK(degrees_of({Family::I2, 2, 7}) == std::vector<int>{2, 7});
  CHECK(catalog_order({Family::I2, 2, 7}) == 14);
  CHECK(catalog_order({Family::H, 4, 0}) == 14400);
}

TEST_CASE("all proper parabolics finite", "[classifier]") {
  CHECK(all_proper_finite(builtin_system("A~2")));
  CHECK(all_proper_finite(builtin_system("A~1")));
  CHECK_FALSE(all_proper_finite(builtin_system("A2")));
  for (const auto& name : affine_catalog_sample()) CHECK(all_proper_finite(builtin_system(name)));
  // Two disjoint infinite edges: {a,b} is a proper infinite parabolic.
  const auto sys = parse_system_text(
      R"({"generators":["a","b","c"],"matrix":[[1,0,2],[0,1,2],[2,2,1]]})");
  CHECK_FALSE(all_proper_finite(sys));
}

TEST_CASE("classification agrees with the geometric representation", "[classifier][property]") {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto sys = oracle::random_system(rng, 4);
    const auto r = classify(sys, sys.all());
    oracle::GeometricGroup g(sys, sys.all(), 3000);
    INFO(sys.to_json().dump());
    if (r.finite && r.order <= 3000) {
      CHECK(g.complete());
      CHECK(r.order == g.order());
      ++checked;
    } else if (!r.finite) {
      CHECK_FALSE(g.complete());
    }
  }
  CHECK(checked > 20);
}
