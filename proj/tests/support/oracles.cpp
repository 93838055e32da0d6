#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

namespace oracle {

namespace {

ExtAffElt letter(int n, int i, BruhatBase base) {
  if (i > 0) return ExtAffElt::finite(Perm::transposition(n, i - 1, i));
  Vec theta(n, 0);
  theta[0] = 1;
  theta[n - 1] = -1;
  if (base == BruhatBase::Antidominant) theta = vscale(theta, -1);
  return ExtAffElt{theta, Perm::transposition(n, 0, n - 1)};
}

// The length-0 generator: the coset-1 element fixing the base alcove, found
// by testing which candidate maps the base alcove's vertices to vertices.
ExtAffElt omega_gen(int n, BruhatBase base) {
  // vertices of the base alcove (in coordinates modulo the diagonal)
  std::vector<std::vector<double>> verts;
  for (int k = 0; k < n; ++k) {
    std::vector<double> v(n, 0.0);
    for (int i = 0; i < k; ++i) v[i] = (base == BruhatBase::Dominant) ? 1.0 : -1.0;
    verts.push_back(v);
  }
  auto normalize = [n](std::vector<double> v) {
    double m = 0;
    for (double x : v) m += x;
    for (auto& x : v) x -= m / n;
    for (auto& x : v) x = std::round(x * 1e6) / 1e6;
    return v;
  };
  std::set<std::vector<double>> target;
  for (auto& v : verts) target.insert(normalize(v));
  for (int i = 0; i < n; ++i)
    for (const auto& w : Perm::all(n)) {
      Vec nu(n, 0);
      nu[i] = 1;
      std::set<std::vector<double>> img;
      for (auto& v : verts) {
        std::vector<double> y(n);
        for (int k = 0; k < n; ++k) y[w(k)] = v[k];
        for (int k = 0; k < n; ++k) y[k] += nu[k];
        img.insert(normalize(y));
      }
      if (img == target) return ExtAffElt{nu, w};
    }
  throw std::logic_error("no length-0 generator");
}

}  // namespace

Ball length_ball(int n, BruhatBase base, int max_len) {
  Ball b{n, base, {}, {}, {}};
  const ExtAffElt u = omega_gen(n, base);
  std::deque<ExtAffElt> q;
  ExtAffElt cur = ExtAffElt::identity(n);
  for (int c = 0; c < n; ++c) {
    b.length[cur] = 0;
    b.word[cur] = {};
    b.omega[cur] = c;
    q.push_back(cur);
    cur = cur * u;
  }
  while (!q.empty()) {
    ExtAffElt x = q.front();
    q.pop_front();
    int l = b.length[x];
    if (l == max_len) continue;
    for (int i = 0; i < n; ++i) {
      ExtAffElt y = x * letter(n, i, base);
      if (b.length.count(y)) continue;
      b.length[y] = l + 1;
      auto w = b.word[x];
      w.push_back(i);
      b.word[y] = w;
      b.omega[y] = b.omega[x];
      q.push_back(y);
    }
  }
  return b;
}

std::set<ExtAffElt> subword_ideal(const Ball& ball, const ExtAffElt& x) {
  const auto& w = ball.word.at(x);
  ExtAffElt start = ExtAffElt::identity(ball.n);
  const ExtAffElt u = omega_gen(ball.n, ball.base);
  for (Coord c = 0; c < ball.omega.at(x); ++c) start = start * u;
  std::set<ExtAffElt> out;
  std::function<void(size_t, const ExtAffElt&)> rec = [&](size_t i, const ExtAffElt& acc) {
    if (i == w.size()) {
      out.insert(acc);
      return;
    }
    rec(i + 1, acc);
    rec(i + 1, acc * letter(ball.n, w[i], ball.base));
  };
  rec(0, start);
  return out;
}

std::set<ExtAffElt> adm_by_ideals(const Vec& lam, BruhatBase base) {
  const int n = static_cast<int>(lam.size());
  std::vector<ExtAffElt> targets;
  std::set<Vec> orbit;
  for (const auto& w : Perm::all(n)) orbit.insert(w.act(lam));
  // translate to coset class in [0, n) using the central element
  Coord total = vsum(lam);
  Coord q = (total >= 0 ? total / n : -((-total + n - 1) / n));
  for (const auto& v : orbit) targets.push_back(ExtAffElt::translation(vsub(v, Vec(n, q))));
  for (int len = 1;; ++len) {
    Ball b = length_ball(n, base, len);
    bool all = std::all_of(targets.begin(), targets.end(), [&](const auto& t) { return b.length.count(t) > 0; });
    if (!all) continue;
    std::set<ExtAffElt> out;
    for (const auto& t : targets)
      for (const auto& y : subword_ideal(b, t)) out.insert(ExtAffElt{vadd(y.nu, Vec(n, q)), y.w});
    return out;
  }
}

std::set<TamePair> presentations_brute(const TamePair& pair, int bound, const GroupContext& ctx) {
  const int n = ctx.n, f = ctx.f;
  const Weight et = eta(ctx);
  const TamePair full{pair.s, pair.mu + et};
  std::vector<Vec> box;
  Vec v(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (*std::min_element(v.begin(), v.end()) == 0) box.push_back(v);
      return;
    }
    for (Coord c = 0; c <= bound; ++c) {
      v[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  auto inside = [&](const Vec& x) {
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        Coord a = x[i] - x[k] + (k - i);
        if (a <= 0 || a >= ctx.p) return false;
      }
    return true;
  };
  std::set<TamePair> out;
  std::vector<size_t> idx(f, 0);
  for (const auto& sigma : all_perm_tuples(n, f)) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Vec> nu;
      for (int j = 0; j < f; ++j) nu.push_back(box[idx[j]]);
      TamePair c = conj(full, Weight(nu), sigma, ctx);
      Weight low = c.mu - et;
      bool ok = true;
      for (int j = 0; j < f && ok; ++j) ok = inside(low[j]);
      if (ok) out.insert({c.s, low});
      int j = 0;
      while (j < f && ++idx[j] == box.size()) idx[j++] = 0;
      if (j == f) break;
    }
  }
  return out;
}

bool up_by_closure(const Vec& lam, const Vec& mu, Coord p) {
  const int n = static_cast<int>(lam.size());
  auto below_mu = [&](const Vec& x) {
    Coord s = 0;
    for (int i = 0; i < n; ++i) {
      s += mu[i] - x[i];
      if (s < 0) return false;
    }
    return s == 0;
  };
  if (!below_mu(lam)) return false;
  std::set<Vec> seen{lam};
  std::deque<Vec> q{lam};
  while (!q.empty()) {
    Vec x = q.front();
    q.pop_front();
    if (x == mu) return true;
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        Coord a = x[i] - x[k] + (k - i);
        // smallest multiple of p strictly above a, then further ones
        for (Coord m = (a >= 0 ? a / p + 1 : -((-a) / p)); ; ++m) {
          Coord c = m * p - a;
          if (c <= 0) continue;
          Vec y = x;
          y[i] += c;
          y[k] -= c;
          if (!below_mu(y)) break;
          if (seen.insert(y).second) q.push_back(y);
        }
      }
  }
  return false;
}

}  // namespace oracle
