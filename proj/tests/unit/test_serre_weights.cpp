#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylcalc/alcove_geometry.hpp"
#include "weylcalc/serre_weights.hpp"

using namespace weylcalc;

namespace {
PermTuple random_perms(std::mt19937_64& rng, int n, int f) {
  PermTuple s;
  for (int j = 0; j < f; ++j) s.push_back(Perm::all(n)[rng() % Perm::all(n).size()]);
  return s;
}
Weight deep_weight(std::mt19937_64& rng, const GroupContext& ctx, int d) {
  while (true) {
    std::vector<Vec> c;
    for (int j = 0; j < ctx.f; ++j) {
      Vec v(ctx.n);
      for (auto& x : v) x = static_cast<Coord>(rng() % ctx.p);
      std::sort(v.rbegin(), v.rend());
      for (auto& x : v) x -= v[ctx.n - 1];
      c.push_back(v);
    }
    Weight w(c);
    if (in_base_alcove(w, ctx) && depth(w, ctx) >= d) return w;
  }
}
std::string hypothesis_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const PreconditionError& e) {
    return e.hypothesis();
  }
  return "";
}
}  // namespace

TEST_CASE("Serre weight classes") {
  auto ctx = GroupContext::make(2, 1, 5);
  Weight lam(std::vector<Vec>{{3, 1}});
  SerreWeight F = make_serre_weight(lam, ctx);
  CHECK(F == make_serre_weight(lam + Weight(std::vector<Vec>{{4, 4}}), ctx));
  CHECK(F.rep[0][1] >= 0);
  CHECK(F.rep[0][1] < 4);
  CHECK(hypothesis_of([&] { make_serre_weight(Weight(std::vector<Vec>{{9, 0}}), ctx); }) == "p-restricted");

  auto c2 = GroupContext::make(3, 2, 7);
  Weight l2(std::vector<Vec>{{5, 2, 0}, {3, 3, 1}});
  // shift by (p - pi) c with c = (1, -2)
  Weight moved = l2 + Weight(std::vector<Vec>{Vec(3, 7 * 1 + 2), Vec(3, 7 * -2 - 1)});
  CHECK(make_serre_weight(l2, c2) == make_serre_weight(moved, c2));
  CHECK_FALSE(make_serre_weight(l2, c2) == make_serre_weight(l2 + Weight(std::vector<Vec>{Vec(3, 1), Vec(3, 0)}), c2));
}

TEST_CASE("reflection operator") {
  auto ctx = GroupContext::make(2, 1, 5);
  SerreWeight F = make_serre_weight(Weight(1, 2), ctx);
  CHECK(R_op(F, ctx) == make_serre_weight(Weight(std::vector<Vec>{{3, 0}}), ctx));
  CHECK(hypothesis_of([&] { R_op(make_serre_weight(Weight(std::vector<Vec>{{4, 0}}), ctx), ctx); }) == "regular");

  // R is injective and R(R(F(lam))) = F(lam - p(n-1))
  auto c3 = GroupContext::make(3, 1, 11);
  std::set<SerreWeight> images;
  int count = 0;
  for (Coord a = 0; a < 11; ++a)
    for (Coord b = 0; b < 11; ++b) {
      Weight lam(std::vector<Vec>{{a + b, b, 0}});
      if (!is_regular_restricted(lam, c3)) continue;
      SerreWeight G = make_serre_weight(lam, c3);
      SerreWeight RG = R_op(G, c3);
      images.insert(RG);
      ++count;
      CHECK(R_op(RG, c3) == make_serre_weight(lam - Weight(std::vector<Vec>{Vec(3, 11 * 2)}), c3));
    }
  CHECK(static_cast<int>(images.size()) == count);
}

TEST_CASE("predicted weights for generic rhobar") {
  std::mt19937_64 rng(1);
  for (int n : {2, 3})
    for (int f : {1, 2}) {
      auto ctx = GroupContext::make(n, f, 101);
      std::size_t fact = n == 2 ? 2 : 6;
      std::size_t per = n == 2 ? 2 : 9;
      for (int i = 0; i < 3; ++i) {
        RhoBar rho = RhoBar::make({random_perms(rng, n, f), deep_weight(rng, ctx, 2 * n)}, ctx);
        auto wq = w_question(rho, ctx);
        auto jh = jh_factors(rho.pair.s, rho.pair.mu, ctx);
        CHECK(wq.size() == (f == 1 ? per : per * per));
        CHECK(jh.size() == wq.size());
        auto obv = w_obv(rho, ctx);
        CHECK(obv.size() == (f == 1 ? fact : fact * fact));
        for (const auto& [sigma, F] : obv) {
          CHECK(std::binary_search(wq.begin(), wq.end(), F));
          CHECK(is_obvious_weight(rho, F, ctx) == sigma);
          // rhobar restricted to inertia is tau(w, lambda + eta) for some w
          InertialType target = type_of({rho.pair.s, rho.pair.mu + eta(ctx)}, ctx);
          bool found = false;
          for (const auto& w : all_perm_tuples(n, f))
            if (type_iso(type_of({w, F.rep + eta(ctx)}, ctx), target)) found = true;
          CHECK(found);
        }
      }
    }
}

TEST_CASE("preconditions") {
  auto ctx = GroupContext::make(3, 1, 101);
  CHECK(hypothesis_of([&] { RhoBar::make({{Perm::identity(3)}, Weight(std::vector<Vec>{{200, 0, 0}})}, ctx); }) ==
        "rhobar-in-C0");
  RhoBar shallow = RhoBar::make({{Perm::identity(3)}, Weight(std::vector<Vec>{{3, 1, 0}})}, ctx);
  CHECK(hypothesis_of([&] { jh_factors(shallow.pair.s, shallow.pair.mu, ctx); }) == "mu-2n-deep");
  CHECK(hypothesis_of([&] { w_obv(shallow, ctx); }) == "rhobar-n-generic");
}

TEST_CASE("candidates below the top alcove") {
  const auto& c = elements_below_wh(3, 101, 2);
  CHECK(!c.empty());
  CHECK(std::find(c.begin(), c.end(), ExtAffElt::identity(3)) != c.end());
  // w~_h up to a central translation
  CHECK(std::find(c.begin(), c.end(), ExtAffElt::finite_first(Perm::longest(3), Vec{0, 1, 2})) != c.end());
  for (const auto& x : c) CHECK(in_W_plus(x));
}
