#include "weylcalc/serre_weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "weylcalc/alcove_geometry.hpp"

namespace weylcalc {

namespace {

void check_weight(const Weight& w, const GroupContext& ctx) {
  if (w.f() != ctx.f || w.n() != ctx.n) throw InputError("weight does not match context");
}

// nu_j (normalized, last coordinate 0) with (t_nu sigma).C_0 p-restricted.
Vec restricting_translation(const Perm& sigma, const Vec& eta0) {
  const int n = sigma.size();
  Vec se = sigma.act(eta0);
  Vec nu(n, 0);
  for (int i = n - 2; i >= 0; --i) nu[i] = nu[i + 1] + (se[i] - se[i + 1] > 0 ? 0 : 1);
  return nu;
}

}  // namespace

RhoBar RhoBar::make(const TamePair& pair, const GroupContext& ctx) {
  if (static_cast<int>(pair.s.size()) != ctx.f) throw InputError("rhobar does not match context");
  check_weight(pair.mu, ctx);
  if (!in_base_alcove(pair.mu, ctx))
    throw PreconditionError("rhobar-in-C0", "mu_rhobar " + to_string(pair.mu) + " is not inside C_0");
  return RhoBar{pair};
}

SerreWeight make_serre_weight(const Weight& lam, const GroupContext& ctx) {
  check_weight(lam, ctx);
  if (!is_p_restricted(lam, ctx))
    throw PreconditionError("p-restricted", "weight " + to_string(lam) + " is not p-restricted");
  const int f = ctx.f, n = ctx.n;
  const BigInt D = big_pow(ctx.p, f) - 1;
  BigInt phi = 0;
  for (int j = 0; j < f; ++j) phi += BigInt(lam[j][n - 1]) * big_pow(ctx.p, j);
  phi %= D;
  if (phi < 0) phi += D;
  std::vector<Coord> diff(f);
  for (int j = 0; j < f; ++j) {
    Coord digit = static_cast<Coord>(phi % ctx.p);
    phi /= ctx.p;
    diff[j] = digit - lam[j][n - 1];
  }
  auto c = solve_p_minus_pi(diff, ctx.p);
  if (!c) throw std::logic_error("canonical digit shift not solvable");
  Weight rep = lam;
  for (int j = 0; j < f; ++j) {
    Coord shift = ctx.p * (*c)[j] - (*c)[(j - 1 + f) % f];
    for (auto& x : rep[j]) x += shift;
  }
  return SerreWeight{rep, lam};
}

SerreWeight R_op(const SerreWeight& F, const GroupContext& ctx) {
  if (!is_regular_restricted(F.rep, ctx))
    throw RegularityError("Serre weight " + to_string(F.rep) + " is not regular");
  return make_serre_weight(dot(w_h(ctx), F.rep, ctx), ctx);
}

const std::vector<ExtAffElt>& elements_below_wh(int n, Coord p, int bound) {
  static std::mutex mu;
  static std::map<std::tuple<int, Coord, int>, std::vector<ExtAffElt>> cache;
  const auto key = std::make_tuple(n, p, bound);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const ExtAffElt top = w_h(n);
  std::vector<ExtAffElt> out;
  Vec nu(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (*std::min_element(nu.begin(), nu.end()) != 0) return;
      for (const auto& w : Perm::all(n)) {
        ExtAffElt x = ExtAffElt::finite_first(w, nu);
        if (in_W_plus(x) && alcove_up(x, top, p)) out.push_back(x);
      }
      return;
    }
    for (Coord c = 0; c <= bound; ++c) {
      nu[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<SerreWeight> jh_factors(const PermTuple& s, const Weight& mu, const GroupContext& ctx, int bound) {
  check_weight(mu, ctx);
  if (static_cast<int>(s.size()) != ctx.f) throw InputError("permutation tuple does not match context");
  const int n = ctx.n, f = ctx.f;
  const Coord p = ctx.p;
  if (bound < 0) bound = n - 1;
  if (!in_base_alcove(mu, ctx) || depth(mu, ctx) < 2 * n)
    throw PreconditionError("mu-2n-deep", "mu " + to_string(mu) + " is not 2n-deep in C_0");

  const auto& cands = elements_below_wh(n, p, bound);
  const ExtAffElt wh = w_h(n), wh_inv = wh.inverse();
  std::vector<ExtAffElt> targets;  // W_a-address of w~_h . C for each restricted C
  for (const auto& u : restricted_alcoves(n, p)) targets.push_back(wa_part(wh * u, BruhatBase::Dominant));

  // lambda_j candidates depend only on (cand_j, cand_{j-1})
  std::map<std::tuple<int, size_t, size_t>, std::vector<Vec>> memo;
  auto local = [&](int j, size_t cj, size_t cprev) -> const std::vector<Vec>& {
    auto key = std::make_tuple(j, cj, cprev);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const ExtAffElt& x = cands[cj];
    Vec arg = vsub(mu[j], s[j].act(cands[cprev].right_nu()));
    Vec start = dot(x, arg, p);
    Vec rep = link_normalize(start, p).first;
    std::vector<Vec> lams;
    for (const auto& t : targets) {
      Vec y = dot(t, rep, p);
      if (up_leq_weights(start, y, p) == Order::True) lams.push_back(dot(wh_inv, y, p));
    }
    return memo.emplace(key, std::move(lams)).first->second;
  };

  std::set<SerreWeight> out;
  std::vector<size_t> idx(f, 0);
  const size_t m = cands.size();
  if (m == 0) return {};
  while (true) {
    std::vector<const std::vector<Vec>*> per(f);
    bool empty = false;
    for (int j = 0; j < f; ++j) {
      per[j] = &local(j, idx[j], idx[(j - 1 + f) % f]);
      if (per[j]->empty()) empty = true;
    }
    if (!empty) {
      std::vector<size_t> k(f, 0);
      while (true) {
        std::vector<Vec> lam(f);
        for (int j = 0; j < f; ++j) lam[j] = (*per[j])[k[j]];
        out.insert(make_serre_weight(Weight(std::move(lam)), ctx));
        int j = 0;
        while (j < f && ++k[j] == per[j]->size()) k[j++] = 0;
        if (j == f) break;
      }
    }
    int j = 0;
    while (j < f && ++idx[j] == m) idx[j++] = 0;
    if (j == f) break;
  }
  return {out.begin(), out.end()};
}

std::vector<SerreWeight> w_question(const RhoBar& rho, const GroupContext& ctx) {
  std::set<SerreWeight> out;
  for (const auto& F : jh_factors(rho.pair.s, rho.pair.mu, ctx)) out.insert(R_op(F, ctx));
  return {out.begin(), out.end()};
}

std::map<PermTuple, SerreWeight> w_obv(const RhoBar& rho, const GroupContext& ctx) {
  const Weight& mu = rho.pair.mu;
  check_weight(mu, ctx);
  if (!in_base_alcove(mu, ctx) || depth(mu, ctx) < ctx.n)
    throw PreconditionError("rhobar-n-generic", "mu_rhobar " + to_string(mu) + " is not n-deep in C_0");
  const Vec e = ctx.eta0();
  const Weight et = eta(ctx);
  std::map<PermTuple, SerreWeight> out;
  for (const auto& sigma : all_perm_tuples(ctx.n, ctx.f)) {
    std::vector<Vec> nu;
    for (const auto& sg : sigma) nu.push_back(restricting_translation(sg, e));
    Weight nuw(std::move(nu));
    PermTuple s2 = sigma * rho.pair.s * inverse(pi(sigma));
    Weight lam = act(sigma, mu + et) + nuw * ctx.p - act(s2, pi(nuw)) - et;
    out.emplace(sigma, make_serre_weight(lam, ctx));
  }
  return out;
}

std::optional<PermTuple> is_obvious_weight(const RhoBar& rho, const SerreWeight& F, const GroupContext& ctx) {
  for (const auto& [sigma, G] : w_obv(rho, ctx))
    if (G == F) return sigma;
  return std::nullopt;
}

}  // namespace weylcalc
