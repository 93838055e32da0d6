#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "weylcalc/admissibility.hpp"

using namespace weylcalc;

TEST_CASE("admissible sets match unions of Bruhat ideals") {
  for (auto base : {BruhatBase::Dominant, BruhatBase::Antidominant})
    for (Vec lam : {Vec{1, 0}, Vec{3, 0}, Vec{2, 1, 0}, Vec{1, 0, 0}, Vec{2, 0, -1}}) {
      const auto& got = enumerate_adm(lam, base);
      std::set<ExtAffElt> mine(got.begin(), got.end());
      CHECK(mine == oracle::adm_by_ideals(lam, base));
    }
}

TEST_CASE("pinned cardinalities") {
  CHECK(enumerate_adm(Vec{1, 0}, BruhatBase::Dominant).size() == 3);
  CHECK(enumerate_adm(Vec{2, 1, 0}, BruhatBase::Dominant).size() == 25);
  CHECK(enumerate_adm(Vec{2, 1, 0}, BruhatBase::Antidominant).size() == 25);
  CHECK(enumerate_adm(Vec{1, 0, 0}, BruhatBase::Dominant).size() == 7);
}

TEST_CASE("convex hull bound") {
  CHECK(convex_hull_check(Vec{0, 2, 1}, Vec{2, 1, 0}));
  CHECK_FALSE(convex_hull_check(Vec{3, 0, 0}, Vec{2, 1, 0}));
  CHECK_FALSE(convex_hull_check(Vec{1, 1, 0}, Vec{2, 1, 0}));
  for (const auto& x : enumerate_adm(Vec{3, 1, 0}, BruhatBase::Dominant)) CHECK(convex_hull_check(x.nu, Vec{3, 1, 0}));
}

TEST_CASE("membership") {
  Vec e{2, 1, 0};
  CHECK(is_admissible(ExtAffElt::translation(Vec{0, 1, 2}), e, BruhatBase::Dominant));
  CHECK(is_admissible(ExtAffElt::translation(Vec{1, 1, 1}), e, BruhatBase::Dominant));  // length 0
  CHECK_FALSE(is_admissible(ExtAffElt::translation(Vec{3, 0, 0}), e, BruhatBase::Dominant));
  CHECK_FALSE(is_admissible(ExtAffElt{{2, 1, 0}, Perm({1, 0, 2})}, Vec{1, 1, 1}, BruhatBase::Dominant));
  CHECK_FALSE(is_admissible(ExtAffElt::identity(3), e, BruhatBase::Dominant));
}

TEST_CASE("product sets over embeddings") {
  Weight eta2 = Weight::repeat(Vec{1, 0}, 2);
  AdmSet s = enumerate_adm(eta2, BruhatBase::Dominant);
  CHECK(s.size() == 9);
  auto els = s.elements();
  CHECK(els.size() == 9);
  for (const auto& x : els) {
    CHECK(s.contains(x));
    CHECK(is_admissible(x, eta2, BruhatBase::Dominant));
  }
  CHECK_FALSE(s.contains(TupleElt::identity(2, 2)));
}

TEST_CASE("dual admissibility transports through star") {
  Weight e = Weight::repeat(Vec{2, 1, 0}, 2);
  for (const auto& x : enumerate_adm(e, BruhatBase::Antidominant).elements()) {
    auto t = adm_dual_transport(x, e);
    CHECK(t.direct);
    CHECK(t.agree());
  }
  TupleElt bad = TupleElt::translation(Weight::repeat(Vec{3, 0, 0}, 2));
  CHECK(adm_dual_transport(bad, e).agree());
  CHECK_FALSE(adm_dual_transport(bad, e).direct);
}
