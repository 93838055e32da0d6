#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylcalc/phi_modules.hpp"

using namespace weylcalc;

namespace {
TupleElt random_elt(std::mt19937_64& rng, int n, int f) {
  std::vector<ExtAffElt> parts;
  for (int j = 0; j < f; ++j) {
    Vec nu(n);
    for (auto& x : nu) x = static_cast<Coord>(rng() % 13) - 6;
    parts.push_back({nu, Perm::all(n)[rng() % Perm::all(n).size()]});
  }
  return TupleElt(parts);
}
}  // namespace

TEST_CASE("monomial data of group elements") {
  MonomialFrobenius id = from_element(TupleElt::identity(3, 2), 7);
  for (const auto& b : id.blocks) {
    CHECK(b.perm.is_identity());
    CHECK(b.exps == Vec{0, 0, 0});
  }
  MonomialFrobenius d = from_element(TupleElt::translation(Weight(std::vector<Vec>{{4, 1, 0}})), 7);
  CHECK(d.blocks[0].exps == Vec{4, 1, 0});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    TupleElt x = random_elt(rng, 3, 2);
    CHECK(to_element(from_element(x, 7)) == x);
  }
}

TEST_CASE("inertial type of a diagonal module") {
  auto m = from_element(TupleElt::translation(Weight(std::vector<Vec>{{4, 1}})), 7);
  InertialType t = inertial_type_of(m);
  CHECK(t.r == 1);
  CHECK(t.exponents == std::vector<BigInt>{1, 4});
}

TEST_CASE("non-split rank two") {
  // s t_(a, b): exponents {a + p b, b + p a} mod p^2 - 1
  const Coord p = 7, a = 3, b = 1;
  TupleElt x = TupleElt::finite_first({Perm({1, 0})}, Weight(std::vector<Vec>{{a, b}}));
  InertialType t = inertial_type_of(from_element(x, p));
  std::vector<BigInt> want{a + p * b, b + p * a};
  std::sort(want.begin(), want.end());
  CHECK(t.r == 2);
  CHECK(t.exponents == want);
  CHECK(verify_galois_type(x, GroupContext::make(2, 1, p)));
}

TEST_CASE("units never matter") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    TupleElt x = random_elt(rng, 3, 2);
    std::vector<std::vector<std::string>> u{{"a", "b", "c"}, {"d", "e", "f"}};
    auto t1 = inertial_type_of(from_element(x, 11));
    auto t2 = inertial_type_of(from_element(x, 11, u));
    CHECK(t1.exponents == t2.exponents);
  }
}

TEST_CASE("agreement with the type of the starred pair") {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4})
    for (int f : {1, 2, 3}) {
      auto ctx = GroupContext::make(n, f, 101);
      for (int i = 0; i < 40; ++i) {
        TupleElt x = random_elt(rng, n, f);
        CHECK(verify_galois_type(x, ctx));
        auto m = from_element(x, ctx.p);
        CHECK(inertial_type_of(m).frobenius_stable());
        TamePair pair{star(x.finite_part()), star(x.right_nu())};
        CHECK(inertial_type_of(m).r == type_of(pair, ctx).r);
      }
    }
}

TEST_CASE("base change and degree hints") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    TupleElt x = random_elt(rng, 3, 2);
    auto m = from_element(x, 7);
    auto t = inertial_type_of(m);
    auto t6 = inertial_type_of(m, 6);
    CHECK(t6.r == 6);
    CHECK(same_characters(t, t6));
    CHECK(same_characters(t, inertial_type_of(base_change(m, 3))));
  }
  auto m = from_element(TupleElt::finite({Perm({1, 0})}), 7);
  CHECK_THROWS_AS(inertial_type_of(m, 3), InputError);
}
