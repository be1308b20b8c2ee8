#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "coxgenus/artin_chain.hpp"
#include "coxgenus/errors.hpp"
#include "coxgenus/resolution.hpp"
#include "oracles.hpp"

using namespace coxgenus;

namespace {

Flag flag(std::initializer_list<int> m) {
  std::vector<std::uint8_t> v;
  for (int x : m) v.push_back(static_cast<std::uint8_t>(x));
  return Flag(std::move(v));
}

}  // namespace

TEST_CASE("flags and levels", "[resolution]") {
  const Flag f = flag({2, 1, 0});
  CHECK(f.total() == 3);
  CHECK(f.length() == 2);
  CHECK(f.level(1) == Subset::of({0, 1}));
  CHECK(f.level(2) == Subset::of({0}));
  CHECK(f.level(3).empty());
  CHECK(Flag::from_levels(3, {Subset::of({0, 1}), Subset::of({0})}) == f);
  CHECK(f.describe(builtin_system("A3")) == "({s,t} > {s})");
}

TEST_CASE("flag enumeration", "[resolution]") {
  const auto a1a1 = parse_system_text(R"({"generators":["s","t"],"matrix":[[1,2],[2,1]]})");
  CHECK(enumerate_flags(build_nerve(a1a1), 2).size() == 3);
  CHECK(flag_count_bound(2, 2) == 3);

  const auto a1t = build_nerve(builtin_system("A~1"));
  const auto flags = enumerate_flags(a1t, 2);
  CHECK(flags == std::vector<Flag>{flag({0, 2}), flag({2, 0})});
  CHECK(enumerate_flags(a1t, 0).size() == 1);
  CHECK(enumerate_flags(a1t, 0)[0].total() == 0);
}

TEST_CASE("flag counts equal the binomial exactly for finite W", "[resolution][property]") {
  for (const auto* name : {"A3", "B3", "H3", "A1"}) {
    const auto K = build_nerve(builtin_system(name));
    for (int k = 0; k <= 5; ++k) CHECK(enumerate_flags(K, k).size() == flag_count_bound(K.system().rank(), k));
  }
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 50; ++trial) {
    const auto K = build_nerve(oracle::random_system(rng, 5));
    for (int k = 0; k <= 4; ++k) CHECK(enumerate_flags(K, k).size() <= flag_count_bound(K.system().rank(), k));
  }
}

TEST_CASE("boundary of the doubled point in the infinite dihedral group", "[resolution]") {
  const auto K = build_nerve(builtin_system("A~1"));
  const ParabolicTables tables(K, 2);
  const auto terms = boundary_flag(tables, flag({2, 0}));
  REQUIRE(terms.size() == 2);
  std::vector<unsigned> lengths;
  for (const auto& t : terms) {
    CHECK(t.target == flag({1, 0}));
    CHECK(t.sign == 1);
    lengths.push_back(t.beta_length);
  }
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<unsigned>{0, 1});

  int trivial = 0, sign = 0;
  for (const auto& t : terms) {
    trivial += t.coefficient(Representation::Trivial);
    sign += t.coefficient(Representation::Sign);
  }
  CHECK(trivial == 2);
  CHECK(sign == 0);

  CHECK(boundary_flag(tables, flag({0, 0})).empty());
}

TEST_CASE("degree-one boundary is (s - 1)", "[resolution]") {
  const auto K = build_nerve(builtin_system("A~1"));
  const ParabolicTables tables(K, 1);
  const auto terms = boundary_flag(tables, flag({1, 0}));
  REQUIRE(terms.size() == 2);
  int trivial = 0, sign = 0;
  for (const auto& t : terms) {
    CHECK(t.target.total() == 0);
    trivial += t.coefficient(Representation::Trivial);
    sign += t.coefficient(Representation::Sign);
  }
  CHECK(trivial == 0);
  CHECK(sign == -2);
}

TEST_CASE("conjugation targets are minimal coset representatives", "[resolution][property]") {
  for (const auto* name : {"B3", "A~2", "A3", "H3"}) {
    const auto K = build_nerve(builtin_system(name));
    const ParabolicTables tables(K, 4);
    for (int k = 1; k <= 4; ++k) {
      for (const auto& f : enumerate_flags(K, k)) {
        for (const auto& t : boundary_flag(tables, f)) {
          CHECK(t.target.total() == k - 1);
          CHECK(t.beta.size() == t.beta_length);
        }
      }
    }
  }
}

TEST_CASE("specialized resolutions are complexes", "[resolution][property]") {
  for (const auto* name : {"A~1", "A~2", "B3", "A3", "C~2", "G~2", "H3"}) {
    for (auto rep : {Representation::Sign, Representation::Trivial}) {
      const auto res = specialize_resolution(builtin_system(name), 4, rep);
      INFO(name << " " << to_string(rep));
      CHECK(res.complex.chain_condition_failures().empty());
    }
  }
}

TEST_CASE("trivial-coefficient truncation has H0 = Z", "[resolution]") {
  for (const auto* name : {"A~1", "A~2", "B3"}) {
    const auto res = specialize_resolution(builtin_system(name), 3, Representation::Trivial);
    CHECK(homology_of_complex(res.complex, 0) == HomologyGroup{1, {}});
  }
}

TEST_CASE("length-one block is the negated q = 1 Artin boundary", "[resolution]") {
  for (const auto* name : {"A~1", "A~2", "B3", "A~3", "G~2"}) {
    const auto sys = builtin_system(name);
    const auto K = build_nerve(sys);
    const auto C = build_artin_complex(K);
    const auto at_one = specialize(C, 1);
    const auto res = specialize_resolution(sys, K.vd(), Representation::Sign);
    INFO(name);
    for (int k = 1; k <= K.vd(); ++k) {
      const auto& flags_k = res.flags[k];
      const auto& flags_km1 = res.flags[k - 1];
      const auto& layer_k = K.simplices(k);
      const auto& layer_km1 = K.simplices(k - 1);
      const IntMatrix d = res.complex.boundary(k);
      for (std::size_t j = 0; j < layer_k.size(); ++j) {
        const auto col = std::find(flags_k.begin(), flags_k.end(), Flag::from_levels(sys.rank(), {layer_k[j]})) -
                         flags_k.begin();
        for (std::size_t i = 0; i < layer_km1.size(); ++i) {
          std::vector<Subset> lv;
          if (!layer_km1[i].empty()) lv.push_back(layer_km1[i]);
          const auto row =
              std::find(flags_km1.begin(), flags_km1.end(), Flag::from_levels(sys.rank(), lv)) - flags_km1.begin();
          CHECK(d(row, col) == -at_one.complex.boundary(k)(i, j));
        }
      }
    }
  }
}

TEST_CASE("sign extension holds for the sign representation only", "[resolution]") {
  for (const auto* name : {"A~1", "A~2"}) {
    const auto sys = builtin_system(name);
    const auto sign = verify_sign_extension(sys, 3, Representation::Sign);
    const auto trivial = verify_sign_extension(sys, 3, Representation::Trivial);
    INFO(name);
    CHECK(sign.pass());
    CHECK_FALSE(trivial.pass());
    const auto failing = std::find_if(trivial.degrees.begin(), trivial.degrees.end(),
                                      [](const auto& d) { return !d.pass; });
    REQUIRE(failing != trivial.degrees.end());
    REQUIRE(failing->witness.has_value());
    CHECK(failing->witness_value == 2);
  }
}

TEST_CASE("cap errors name the offending parabolic", "[resolution]") {
  const auto K = build_nerve(builtin_system("H4"));
  try {
    ParabolicTables tables(K, 4, 1000);
    tables.get(Subset::full(4));
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.subset() == "{s,t,u,v}");
  }
}
