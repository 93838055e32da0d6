#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "weylcalc/lattice_weyl.hpp"

using namespace weylcalc;

namespace {
TupleElt random_elt(std::mt19937_64& rng, int n, int f) {
  std::vector<ExtAffElt> parts;
  const auto& perms = Perm::all(n);
  for (int j = 0; j < f; ++j) {
    Vec nu(n);
    for (auto& x : nu) x = static_cast<Coord>(rng() % 9) - 4;
    parts.push_back({nu, perms[rng() % perms.size()]});
  }
  return TupleElt(parts);
}
}  // namespace

TEST_CASE("context validation") {
  CHECK_NOTHROW(GroupContext::make(3, 2, 211));
  CHECK_THROWS_AS(GroupContext::make(1, 1, 5), InputError);
  CHECK_THROWS_AS(GroupContext::make(3, 1, 9), InputError);
  CHECK_THROWS_AS(GroupContext::make(5, 1, 5), InputError);
  CHECK(GroupContext::make(3, 1, 5).eta0() == Vec{2, 1, 0});
}

TEST_CASE("permutations") {
  CHECK(Perm::all(3).size() == 6);
  CHECK_THROWS_AS(Perm({0, 0, 1}), InputError);
  Perm a({1, 2, 0}), b({1, 0, 2});
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.act(Vec{5, 6, 7}) == Vec{7, 5, 6});
  CHECK(Perm::longest(3).images() == std::vector<int>{2, 1, 0});
}

TEST_CASE("group law") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rng() % 2), f = 1 + static_cast<int>(rng() % 2);
    TupleElt a = random_elt(rng, n, f), b = random_elt(rng, n, f), c = random_elt(rng, n, f);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == TupleElt::identity(n, f));
    for (int j = 0; j < f; ++j) {
      Vec x{3, -1, 4};
      x.resize(n);
      CHECK((a[j] * b[j]).act(x) == a[j].act(b[j].act(x)));
      CHECK(ExtAffElt::finite_first(a[j].w, a[j].right_nu()) == a[j]);
    }
  }
}

TEST_CASE("rotation") {
  Weight w(std::vector<Vec>{{1, 0}, {2, 0}, {3, 0}});
  CHECK(pi(w)[0] == Vec{3, 0});
  CHECK(pi(w)[1] == Vec{1, 0});
  CHECK(pi_inverse(pi(w)) == w);
}

TEST_CASE("length agrees with word length in the generators") {
  for (auto base : {BruhatBase::Dominant, BruhatBase::Antidominant})
    for (int n : {2, 3}) {
      auto ball = oracle::length_ball(n, base, 7);
      for (const auto& [x, l] : ball.length) CHECK(length(x, base) == l);
    }
}

TEST_CASE("omega generator and decomposition") {
  for (auto base : {BruhatBase::Dominant, BruhatBase::Antidominant})
    for (int n : {2, 3, 4}) {
      const ExtAffElt& u = omega_generator(n, base);
      CHECK(length(u, base) == 0);
      CHECK(coset_class(u) == 1);
      CHECK(omega_power(n, base, n) == ExtAffElt::translation(Vec(n, 1)));
      CHECK(omega_power(n, base, -1) == u.inverse());
    }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    TupleElt x = random_elt(rng, 3, 2);
    auto d = omega_decompose(x, BruhatBase::Dominant);
    CHECK(d.wa * d.omega == x);
    CHECK(length(d.omega, BruhatBase::Dominant) == 0);
    for (const auto& p : d.wa.parts) CHECK(coset_class(p) == 0);
  }
}

TEST_CASE("reduced words") {
  std::mt19937_64 rng(3);
  for (auto base : {BruhatBase::Dominant, BruhatBase::Antidominant})
    for (int i = 0; i < 100; ++i) {
      TupleElt x = random_elt(rng, 3, 2);
      ReducedWord rw = reduced_word(x, base);
      CHECK(evaluate_word(rw, base) == x);
      std::size_t total = 0;
      for (const auto& w : rw.letters) total += w.size();
      CHECK(static_cast<int>(total) == length(x, base));
    }
  CHECK(simple_reflection(2, 0, BruhatBase::Dominant) == ExtAffElt{{1, -1}, Perm({1, 0})});
}

TEST_CASE("Bruhat order matches the subword property") {
  for (auto base : {BruhatBase::Dominant, BruhatBase::Antidominant})
    for (int n : {2, 3}) {
      auto ball = oracle::length_ball(n, base, 4);
      for (const auto& [x, lx] : ball.length) {
        auto ideal = oracle::subword_ideal(ball, x);
        for (const auto& [y, ly] : ball.length) {
          Order o = bruhat_leq(y, x, base);
          if (coset_class(y) != coset_class(x)) CHECK(o == Order::Incomparable);
          else CHECK((o == Order::True) == (ideal.count(y) > 0));
        }
      }
    }
}

TEST_CASE("star is an anti-homomorphism and an involution") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    TupleElt a = random_elt(rng, 3, 2), b = random_elt(rng, 3, 2);
    CHECK(star(a * b) == star(b) * star(a));
    CHECK(star(star(a)) == a);
  }
  PermTuple s{Perm({1, 2, 0}), Perm({0, 2, 1})};
  CHECK(star(s)[0] == s[1].inverse());
}

TEST_CASE("canonical order") {
  TupleElt id = TupleElt::identity(2, 1);
  TupleElt s = TupleElt::finite({Perm({1, 0})});
  CHECK(canonical_less(id, s, BruhatBase::Dominant));
  CHECK_FALSE(canonical_less(s, id, BruhatBase::Dominant));
}
