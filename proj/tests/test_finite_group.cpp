#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "coxgenus/errors.hpp"
#include "coxgenus/finite_group.hpp"
#include "oracles.hpp"

using namespace coxgenus;

namespace {

std::vector<unsigned> sorted_lengths(const FiniteGroupTable& t) {
  std::vector<unsigned> out;
  for (std::size_t w = 0; w < t.order(); ++w) out.push_back(t.length(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rank one group", "[group]") {
  const auto sys = builtin_system("A1");
  const auto t = materialize_group(sys, Subset::singleton(0));
  CHECK(t.order() == 2);
  CHECK(sorted_lengths(t) == std::vector<unsigned>{0, 1});
}

TEST_CASE("dihedral groups", "[group]") {
  const auto a2 = materialize_group(builtin_system("A2"), Subset::full(2));
  CHECK(a2.order() == 6);
  CHECK(sorted_lengths(a2) == std::vector<unsigned>{0, 1, 1, 2, 2, 3});

  const auto b2 = materialize_group(builtin_system("B2"), Subset::full(2));
  CHECK(b2.order() == 8);
  CHECK(b2.length(b2.longest_element()) == 4);
  CHECK(materialize_group(builtin_system("B3"), Subset::full(3)).order() == 48);
}

TEST_CASE("normal forms are ShortLex and reduced", "[group]") {
  const auto t = materialize_group(builtin_system("A2"), Subset::full(2));
  CHECK(t.normal_form(t.identity()).letters.empty());
  CHECK(t.normal_form(t.longest_element()).letters == std::vector<int>{0, 1, 0});
  for (std::size_t w = 0; w < t.order(); ++w) {
    CHECK(t.normal_form(w).size() == t.length(w));
    CHECK(t.evaluate(t.normal_form(w)) == w);
  }
}

TEST_CASE("group axioms on random triples", "[group][property]") {
  for (const auto* name : {"B3", "H3", "D4", "A4"}) {
    const auto sys = builtin_system(name);
    const auto t = materialize_group(sys, sys.all());
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, t.order() - 1);
    for (int i = 0; i < 200; ++i) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(t.multiply(t.multiply(a, b), c) == t.multiply(a, t.multiply(b, c)));
      CHECK(t.multiply(a, t.identity()) == a);
      CHECK(t.multiply(t.identity(), a) == a);
      CHECK(t.multiply(a, t.inverse(a)) == t.identity());
      CHECK(t.length(t.inverse(a)) == t.length(a));
    }
  }
}

TEST_CASE("lengths match the geometric-representation BFS", "[group][property]") {
  for (const auto* name : {"A3", "B3", "H3", "F4", "D5", "I2(7)"}) {
    const auto sys = builtin_system(name);
    const auto t = materialize_group(sys, sys.all());
    const oracle::GeometricGroup g(sys, sys.all());
    INFO(name);
    REQUIRE(g.complete());
    REQUIRE(g.order() == t.order());
    std::set<std::size_t> seen;
    for (std::size_t w = 0; w < t.order(); ++w) {
      const auto idx = g.evaluate(t.normal_form(w).letters);
      CHECK(g.length(idx) == t.length(w));
      seen.insert(idx);
    }
    CHECK(seen.size() == t.order());
  }
}

TEST_CASE("materialization refuses infinite and oversized groups", "[group]") {
  CHECK_THROWS_AS(materialize_group(builtin_system("A~2"), Subset::full(3)), NotFiniteType);
  try {
    materialize_group(builtin_system("H4"), Subset::full(4), 1000);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.subset() == "{s,t,u,v}");
    CHECK(e.order() == "14400");
  }
}

TEST_CASE("H4 is enumerable at the default cap", "[group][slow]") {
  const auto t = materialize_group(builtin_system("H4"), Subset::full(4));
  CHECK(t.order() == 14400);
  CHECK(t.length(t.longest_element()) == 60);
}

TEST_CASE("minimal coset representatives", "[group]") {
  const auto sys = builtin_system("A2");
  const auto t = materialize_group(sys, Subset::full(2));
  CHECK(minimal_coset_representatives(t, Subset::full(2)) ==
        std::vector<FiniteGroupTable::Element>{t.identity()});

  const auto reps = minimal_coset_representatives(t, Subset::singleton(0));
  std::vector<unsigned> lengths;
  for (auto w : reps) lengths.push_back(t.length(w));
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<unsigned>{0, 1, 2});

  const auto rank1 = materialize_group(sys, Subset::singleton(0));
  CHECK(minimal_coset_representatives(rank1, Subset()).size() == 2);
  CHECK_THROWS_AS(minimal_coset_representatives(rank1, Subset::singleton(1)),
                  std::invalid_argument);
}

TEST_CASE("coset representatives are the per-coset minima", "[group][property]") {
  const auto sys = builtin_system("B3");
  const auto t = materialize_group(sys, sys.all());
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    const Subset I(bits);
    const auto reps = minimal_coset_representatives(t, I);
    const auto sub = materialize_group(sys, I);
    CHECK(reps.size() * sub.order() == t.order());
    std::set<FiniteGroupTable::Element> rep_set(reps.begin(), reps.end());
    for (auto beta : reps) {
      for (std::size_t u = 1; u < sub.order(); ++u) {
        const auto x = t.evaluate(Word{[&] {
          auto l = t.normal_form(beta).letters;
          const auto& v = sub.normal_form(u).letters;
          l.insert(l.end(), v.begin(), v.end());
          return l;
        }()});
        CHECK(t.length(x) == t.length(beta) + sub.length(u));
        CHECK_FALSE(rep_set.count(x));
      }
    }
  }
}

TEST_CASE("psi section", "[group]") {
  const auto t = materialize_group(builtin_system("A2"), Subset::full(2));
  CHECK(psi_section(t, t.identity()).letters.empty());
  CHECK(psi_section(t, t.generator_element(1)).letters == std::vector<int>{1});
  CHECK(psi_section(t, t.longest_element()).size() == 3);
  CHECK(t.as_generator(t.generator_element(0)) == 0);
  CHECK_FALSE(t.as_generator(t.longest_element()).has_value());
}
