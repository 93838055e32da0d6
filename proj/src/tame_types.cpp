#include "weylcalc/tame_types.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "weylcalc/alcove_geometry.hpp"

namespace weylcalc {

namespace {

using BigVec = std::vector<BigInt>;

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigVec act_big(const Perm& w, const BigVec& x) {
  BigVec y(x.size());
  for (int i = 0; i < w.size(); ++i) y[w(i)] = x[i];
  return y;
}

Coord floordiv(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_pair(const TamePair& pair, const GroupContext& ctx) {
  if (static_cast<int>(pair.s.size()) != ctx.f || pair.mu.f() != ctx.f || pair.mu.n() != ctx.n)
    throw InputError("pair does not match context");
  for (const auto& w : pair.s)
    if (w.size() != ctx.n) throw InputError("pair does not match context");
}

}  // namespace

BigInt big_pow(Coord p, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::vector<BigInt> InertialType::lifted(int d) const {
  if (d % degree() != 0) throw InputError("lift degree must be a multiple of f*r");
  BigInt big = big_pow(p, d) - 1;
  BigInt scale = big / modulus;
  std::vector<BigInt> out;
  for (const auto& e : exponents) out.push_back(mod_nonneg(e * scale, big));
  std::sort(out.begin(), out.end());
  return out;
}

bool InertialType::frobenius_stable() const {
  BigInt q = big_pow(p, f);
  std::vector<BigInt> moved;
  for (const auto& e : exponents) moved.push_back(mod_nonneg(e * q, modulus));
  std::sort(moved.begin(), moved.end());
  return moved == exponents;
}

InertialType make_inertial_type(Coord p, int f, int r, std::vector<BigInt> exponents) {
  InertialType t;
  t.p = p;
  t.f = f;
  t.r = r;
  t.modulus = big_pow(p, f * r) - 1;
  for (auto& e : exponents) e = mod_nonneg(e, t.modulus);
  std::sort(exponents.begin(), exponents.end());
  t.exponents = std::move(exponents);
  return t;
}

TamePair conj(const TamePair& pair, const Weight& nu, const PermTuple& sigma, const GroupContext& ctx) {
  check_pair(pair, ctx);
  PermTuple s2 = sigma * pair.s * inverse(pi(sigma));
  Weight mu2 = act(sigma, pair.mu) + nu * ctx.p - act(s2, pi(nu));
  return {std::move(s2), std::move(mu2)};
}

InertialType type_of(const TamePair& pair, const GroupContext& ctx) {
  check_pair(pair, ctx);
  const int f = ctx.f, n = ctx.n;
  Perm s_tau = pair.s[0];
  for (int j = f - 1; j >= 1; --j) s_tau = s_tau * pair.s[j];
  BigVec a0(n, 0);
  Perm prefix = Perm::identity(n);
  BigInt pj = 1;
  for (int j = 0; j < f; ++j) {
    if (j >= 1) prefix = prefix * pair.s[j].inverse();
    Vec aj = prefix.act(pair.mu[j]);
    for (int i = 0; i < n; ++i) a0[i] += BigInt(aj[i]) * pj;
    pj *= ctx.p;
  }
  const int r = s_tau.order();
  const BigInt q = big_pow(ctx.p, f);
  std::vector<BigInt> ex;
  for (int i = 0; i < n; ++i) {
    BigInt e = 0, w = 1;
    int idx = i;
    for (int k = 0; k < r; ++k) {
      e += a0[idx] * w;
      w *= q;
      idx = s_tau(idx);
    }
    ex.push_back(e);
  }
  return make_inertial_type(ctx.p, f, r, std::move(ex));
}

bool type_iso(const InertialType& a, const InertialType& b) {
  if (a.p != b.p || a.f != b.f) throw InputError("types from different contexts");
  const int L = std::lcm(a.r, b.r);
  return a.lifted(a.f * L) == b.lifted(b.f * L);
}

bool same_characters(const InertialType& a, const InertialType& b) {
  if (a.p != b.p) throw InputError("types for different p");
  const int d = std::lcm(a.degree(), b.degree());
  return a.lifted(d) == b.lifted(d);
}

bool is_regular_type(const InertialType& t) {
  return std::adjacent_find(t.exponents.begin(), t.exponents.end()) == t.exponents.end();
}

std::vector<TamePair> lowest_alcove_presentations(const TamePair& pair, int bound, const GroupContext& ctx) {
  check_pair(pair, ctx);
  const int n = ctx.n, f = ctx.f;
  const Coord p = ctx.p;
  const Vec e = ctx.eta0();
  const Weight M = pair.mu + eta(ctx);
  const auto& perms = Perm::all(n);
  const auto& roots = positive_roots(n);

  // normalized nu with spread <= bound
  std::vector<Vec> window;
  {
    Vec v(n, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        if (*std::min_element(v.begin(), v.end()) == 0) window.push_back(v);
        return;
      }
      for (Coord c = 0; c <= bound; ++c) {
        v[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
  }

  std::set<TamePair> found;
  PermTuple sig(f);
  std::vector<Vec> nus(f);
  std::vector<Vec> tops(f);  // mu' + eta per embedding

  std::function<void(int, const Perm&, const Vec&, const Perm&, const Vec&)> dfs =
      [&](int j, const Perm& sprev, const Vec& nprev, const Perm& slast, const Vec& nlast) {
        if (j == f) {
          if (sprev == slast && nprev == nlast) {
            TamePair out;
            std::vector<Vec> mu;
            for (int k = 0; k < f; ++k) {
              out.s.push_back(sig[k] * pair.s[k] * sig[(k - 1 + f) % f].inverse());
              mu.push_back(vsub(tops[k], e));
            }
            out.mu = Weight(std::move(mu));
            found.insert(std::move(out));
          }
          return;
        }
        for (const auto& sg : perms) {
          Perm s2 = sg * pair.s[j] * sprev.inverse();
          Vec X = vsub(sg.act(M[j]), s2.act(nprev));
          Vec nu(n, 0);
          bool ok = true;
          for (int i = n - 2; i >= 0 && ok; --i) {
            Coord a = X[i] - X[i + 1];
            if (a % p == 0) ok = false;
            nu[i] = nu[i + 1] - floordiv(a, p);
          }
          if (!ok) continue;
          Coord lo = *std::min_element(nu.begin(), nu.end());
          for (auto& c : nu) c -= lo;
          if (*std::max_element(nu.begin(), nu.end()) > bound) continue;
          Vec Y = vadd(X, vscale(nu, p));
          for (auto [a, b] : roots) {
            Coord q = Y[a] - Y[b];
            if (q <= 0 || q >= p) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          sig[j] = sg;
          nus[j] = nu;
          tops[j] = Y;
          dfs(j + 1, sg, nu, slast, nlast);
        }
      };

  for (const auto& slast : perms)
    for (const auto& nlast : window) dfs(0, slast, nlast, slast, nlast);
  return {found.begin(), found.end()};
}

int genericity(const TamePair& pair, const GroupContext& ctx) {
  TamePair shifted{pair.s, pair.mu - eta(ctx)};
  int best = -1;
  for (const auto& pres : lowest_alcove_presentations(shifted, ctx.n, ctx))
    best = std::max(best, depth(pres.mu, ctx));
  return best;
}

TamePair base_change(const TamePair& pair, int r) {
  if (r < 1) throw InputError("base change degree must be positive");
  TamePair out;
  std::vector<Vec> mu;
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < pair.mu.f(); ++j) {
      out.s.push_back(pair.s[j]);
      mu.push_back(pair.mu[j]);
    }
  out.mu = Weight(std::move(mu));
  return out;
}

GroupContext base_change(const GroupContext& ctx, int r) { return GroupContext::make(ctx.n, ctx.f * r, ctx.p); }

std::optional<std::vector<Coord>> solve_p_minus_pi(const std::vector<Coord>& d, Coord p) {
  const int f = static_cast<int>(d.size());
  const BigInt D = big_pow(p, f) - 1;
  std::vector<Coord> c(f);
  for (int j = 0; j < f; ++j) {
    BigInt num = 0;
    for (int k = 0; k < f; ++k) num += big_pow(p, f - 1 - k) * d[((j - k) % f + f) % f];
    if (num % D != 0) return std::nullopt;
    c[j] = static_cast<Coord>(num / D);
  }
  for (int j = 0; j < f; ++j)
    if (p * c[j] - c[(j - 1 + f) % f] != d[j]) return std::nullopt;
  return c;
}

bool central_compatible(const Weight& a, const Weight& b, const GroupContext& ctx) {
  if (a.f() != ctx.f || b.f() != ctx.f) throw InputError("weight does not match context");
  std::vector<Coord> d(ctx.f);
  for (int j = 0; j < ctx.f; ++j) d[j] = vsum(a[j]) - vsum(b[j]);
  return solve_p_minus_pi(d, ctx.p).has_value();
}

std::optional<ConjWitness> conjugation_witness(const TamePair& p1, const TamePair& p2, int bound,
                                               const GroupContext& ctx) {
  check_pair(p1, ctx);
  check_pair(p2, ctx);
  const int n = ctx.n, f = ctx.f;
  const Coord p = ctx.p;
  for (const auto& sigma : all_perm_tuples(n, f)) {
    PermTuple A = sigma * p1.s * inverse(pi(sigma));
    if (A != p2.s) continue;
    // solve (p - A pi) nu = R
    Weight R = p2.mu - act(sigma, p1.mu);
    std::vector<Vec> nu(f);
    bool ok = true;
    for (int j = 0; j < f && ok; ++j) {
      Perm B = Perm::identity(n);
      BigVec S(n, 0);
      for (int k = 0; k < f; ++k) {
        const Vec& Rk = R[((j - k) % f + f) % f];
        BigVec term(Rk.begin(), Rk.end());
        term = act_big(B, term);
        BigInt pw = big_pow(p, f - 1 - k);
        for (int i = 0; i < n; ++i) S[i] += pw * term[i];
        B = B * A[((j - k) % f + f) % f];
      }
      const Perm& Q = B;
      const int r = Q.order();
      BigVec N(n, 0), cur = S;
      for (int m = 0; m < r; ++m) {
        BigInt pw = big_pow(p, f * (r - 1 - m));
        for (int i = 0; i < n; ++i) N[i] += pw * cur[i];
        cur = act_big(Q, cur);
      }
      BigInt D = big_pow(p, f * r) - 1;
      Vec v(n);
      for (int i = 0; i < n && ok; ++i) {
        if (N[i] % D != 0) ok = false;
        else v[i] = static_cast<Coord>(N[i] / D);
      }
      nu[j] = std::move(v);
    }
    if (!ok) continue;
    Weight nuw(std::move(nu));
    bool small = true;
    for (int j = 0; j < f; ++j) {
      auto [lo, hi] = std::minmax_element(nuw[j].begin(), nuw[j].end());
      if (*hi - *lo > bound) small = false;
    }
    if (!small) continue;
    if (conj(p1, nuw, sigma, ctx) == p2) return ConjWitness{nuw, sigma};
  }
  return std::nullopt;
}

std::string to_string(const InertialType& t) {
  std::ostringstream os;
  os << "{r=" << t.r << ", mod=" << t.modulus << ", exps=[";
  for (size_t i = 0; i < t.exponents.size(); ++i) os << (i ? "," : "") << t.exponents[i];
  os << "]}";
  return os.str();
}

}  // namespace weylcalc
