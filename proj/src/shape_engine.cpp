#include "weylcalc/shape_engine.hpp"

#include <algorithm>
#include <set>

#include "weylcalc/admissibility.hpp"
#include "weylcalc/alcove_geometry.hpp"

namespace weylcalc {

namespace {

void require_depth(const Weight& mu, int d, const GroupContext& ctx, const char* hypothesis, const char* what) {
  if (!in_base_alcove(mu, ctx) || depth(mu, ctx) < d)
    throw PreconditionError(hypothesis, std::string(what) + " " + to_string(mu) + " is not " + std::to_string(d) +
                                            "-deep in C_0");
}

std::vector<SerreWeight> intersect(const std::vector<SerreWeight>& a, const std::vector<SerreWeight>& b) {
  std::vector<SerreWeight> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<TamePair> compatible_presentations(const RhoBar& rho, const TamePair& pair, int bound,
                                               const GroupContext& ctx) {
  const Weight et = eta(ctx);
  std::set<TamePair> out;
  for (const auto& low : lowest_alcove_presentations({pair.s, pair.mu - et}, bound, ctx)) {
    Weight M = low.mu + et;
    std::vector<Coord> d(ctx.f);
    bool ok = true;
    for (int j = 0; j < ctx.f; ++j) {
      Coord diff = vsum(rho.pair.mu[j]) - vsum(M[j]);
      if (diff % ctx.n != 0) ok = false;
      d[j] = diff / ctx.n;
    }
    if (!ok) continue;
    auto c = solve_p_minus_pi(d, ctx.p);
    if (!c) continue;
    for (int j = 0; j < ctx.f; ++j) {
      Coord shift = ctx.p * (*c)[j] - (*c)[(j - 1 + ctx.f) % ctx.f];
      for (auto& x : M[j]) x += shift;
    }
    out.insert({low.s, M});
  }
  return {out.begin(), out.end()};
}

std::optional<TamePair> compatible_presentation(const RhoBar& rho, const TamePair& pair, int bound,
                                                const GroupContext& ctx) {
  auto all = compatible_presentations(rho, pair, bound, ctx);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_compatible(const RhoBar& rho, const TamePair& compat, const GroupContext& ctx) {
  if (!in_base_alcove(compat.mu - eta(ctx), ctx)) return false;
  for (int j = 0; j < ctx.f; ++j)
    if (vsum(rho.pair.mu[j]) != vsum(compat.mu[j])) return false;
  return true;
}

TupleElt shape(const RhoBar& rho, const TamePair& compat, const GroupContext& ctx) {
  if (!is_compatible(rho, compat, ctx))
    throw PreconditionError("compatible-presentation", "pair is not a compatible presentation");
  PermTuple sinv = inverse(compat.s);
  PermTuple w = sinv * rho.pair.s;
  Weight nu = act(sinv, rho.pair.mu + eta(ctx) - compat.mu);
  std::vector<ExtAffElt> parts;
  for (int j = 0; j < ctx.f; ++j) parts.push_back({nu[j], w[j]});
  return TupleElt(std::move(parts));
}

TamePair obvious_type(const RhoBar& rho, const PermTuple& w, const GroupContext& ctx) {
  const Weight et = eta(ctx);
  const PermTuple& s = rho.pair.s;
  Weight mu = rho.pair.mu + et - act(s, pi(act(inverse(w), et)));
  if (!in_base_alcove(mu - et, ctx))
    throw PreconditionError("rhobar-deep", "obvious type is not a lowest alcove presentation");
  return {s, mu};
}

std::vector<SerreWeight> w_question_tau_factorization(const RhoBar& rho, const TamePair& compat,
                                                      const GroupContext& ctx) {
  const int n = ctx.n, f = ctx.f;
  const Coord p = ctx.p;
  const TupleElt g = pi_inverse(shape(rho, compat, ctx));
  const auto& cands = elements_below_wh(n, p, n - 1);
  const auto& restricted = restricted_alcoves(n, p);
  const ExtAffElt wh_inv = w_h(n).inverse();
  const Vec e = ctx.eta0();

  struct Entry {
    size_t c2;
    ExtAffElt wl;
    bool operator<(const Entry& o) const { return c2 != o.c2 ? c2 < o.c2 : wl < o.wl; }
  };
  std::vector<std::vector<Entry>> per(f);
  for (int j = 0; j < f; ++j) {
    std::set<Entry> found;
    for (size_t c2 = 0; c2 < cands.size(); ++c2) {
      const ExtAffElt& w2 = cands[c2];
      const ExtAffElt upper = wh_inv * w2;
      for (const auto& wp : Perm::all(n)) {
        ExtAffElt w1 = ExtAffElt::finite(wp.inverse()) * w2 * g[j];
        if (!in_W_plus(w1)) continue;
        const ExtAffElt om = omega_power(n, BruhatBase::Dominant, coset_class(w1));
        for (const auto& u : restricted) {
          ExtAffElt wl = u * om;
          if (!in_W_plus(wl)) continue;
          if (up_leq_elts(w1, wl, p) != Order::True) continue;
          if (up_leq_elts(wl, upper, p) != Order::True) continue;
          found.insert({c2, wl});
        }
      }
    }
    per[j].assign(found.begin(), found.end());
    if (per[j].empty()) return {};
  }

  std::set<SerreWeight> out;
  std::vector<size_t> k(f, 0);
  while (true) {
    std::vector<Vec> lam(f);
    for (int j = 0; j < f; ++j) {
      const Entry& cur = per[j][k[j]];
      const Entry& prev = per[(j - 1 + f) % f][k[(j - 1 + f) % f]];
      Vec arg = vsub(vsub(compat.mu[j], compat.s[j].act(cands[prev.c2].right_nu())), e);
      lam[j] = dot(cur.wl, arg, p);
    }
    out.insert(make_serre_weight(Weight(std::move(lam)), ctx));
    int j = 0;
    while (j < f && ++k[j] == per[j].size()) k[j++] = 0;
    if (j == f) break;
  }
  return {out.begin(), out.end()};
}

WqTau w_question_tau(const RhoBar& rho, const TamePair& compat, const GroupContext& ctx) {
  if (!is_compatible(rho, compat, ctx))
    throw PreconditionError("compatible-presentation", "pair is not a compatible presentation");
  require_depth(compat.mu - eta(ctx), 2 * ctx.n, ctx, "type-2n-generic", "mu - eta");
  require_depth(rho.pair.mu, 2 * ctx.n, ctx, "rhobar-2n-generic", "mu_rhobar");
  WqTau r;
  r.by_intersection = intersect(w_question(rho, ctx), jh_factors(compat.s, compat.mu - eta(ctx), ctx));
  r.by_factorization = w_question_tau_factorization(rho, compat, ctx);
  return r;
}

EquivalenceReport check_equivalences(const RhoBar& rho, const TamePair& pair, const GroupContext& ctx) {
  require_depth(rho.pair.mu, 5 * ctx.n, ctx, "rhobar-5n-generic", "mu_rhobar");
  EquivalenceReport rep;
  rep.compat = compatible_presentation(rho, pair, ctx.n, ctx);
  if (!rep.compat) return rep;
  rep.compatible = true;
  const TamePair& c = *rep.compat;
  require_depth(c.mu - eta(ctx), 2 * ctx.n, ctx, "type-2n-generic", "mu - eta");

  rep.shape = shape(rho, c, ctx);
  rep.admissible = is_admissible(*rep.shape, eta(ctx), BruhatBase::Dominant);

  const auto jh = jh_factors(c.s, c.mu - eta(ctx), ctx);
  rep.wq_nonempty = !intersect(w_question(rho, ctx), jh).empty();

  std::vector<SerreWeight> obv;
  for (const auto& [sigma, F] : w_obv(rho, ctx)) obv.push_back(F);
  std::sort(obv.begin(), obv.end());
  rep.obv_meets_jh = !intersect(obv, jh).empty();
  return rep;
}

EliminationVerdict elimination_cover(const RhoBar& rho, const Weight& lam, const GroupContext& ctx) {
  if (!is_p_restricted(lam, ctx))
    throw PreconditionError("p-restricted", "weight " + to_string(lam) + " is not p-restricted");
  if (depth(lam, ctx) < 3 * ctx.n)
    throw PreconditionError("lambda-3n-deep", "weight " + to_string(lam) + " is not 3n-deep in its alcove");
  require_depth(rho.pair.mu, 2 * ctx.n, ctx, "rhobar-2n-generic", "mu_rhobar");
  if (!central_compatible(lam, rho.pair.mu, ctx))
    throw PreconditionError("central-character", "central character of F(lambda) differs from rhobar's");

  const Weight top = dot(w_h(ctx), lam, ctx) + eta(ctx);
  EliminationVerdict v;
  for (const auto& s : all_perm_tuples(ctx.n, ctx.f)) {
    TamePair ty{s, top};
    auto c = compatible_presentation(rho, ty, ctx.n, ctx);
    if (!c) throw PreconditionError("compatible-presentation", "type has no compatible presentation");
    TupleElt sh = shape(rho, *c, ctx);
    if (!is_admissible(sh, eta(ctx), BruhatBase::Dominant)) {
      v.witness = s;
      v.witness_shape = sh;
      v.witness_type = *c;
      return v;
    }
  }
  v.covered = true;
  const SerreWeight F = make_serre_weight(lam, ctx);
  const auto wq = w_question(rho, ctx);
  v.membership_verified = std::binary_search(wq.begin(), wq.end(), F);
  return v;
}

}  // namespace weylcalc
