#include "weylcalc/alcove_geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace weylcalc {

namespace {

Coord floordiv(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord floormod(Coord a, Coord b) { return a - floordiv(a, b) * b; }

Vec eta_vec(int n) {
  Vec e(n);
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  return e;
}

// Permutation sending v to its decreasing rearrangement (stable on ties).
Perm sorting_perm(const Vec& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] > v[b]; });
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[order[k]] = k;
  return Perm(std::move(img));
}

}  // namespace

const std::vector<std::pair<int, int>>& positive_roots(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<int, int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<int, int>> r;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) r.emplace_back(i, k);
  return cache.emplace(n, std::move(r)).first->second;
}

Vec dot(const ExtAffElt& x, const Vec& lam, Coord p) {
  const Vec e = eta_vec(x.n());
  return vsub(vadd(x.w.act(vadd(lam, e)), vscale(x.nu, p)), e);
}

Weight dot(const TupleElt& x, const Weight& lam, const GroupContext& ctx) {
  if (x.f() != lam.f() || x.n() != lam.n()) throw InputError("context mismatch in dot");
  std::vector<Vec> c(lam.f());
  for (int j = 0; j < lam.f(); ++j) c[j] = dot(x[j], lam[j], ctx.p);
  return Weight(std::move(c));
}

int depth(const Vec& lam, Coord p) {
  const int n = static_cast<int>(lam.size());
  const Vec e = eta_vec(n);
  Coord best = p;
  for (auto [i, k] : positive_roots(n)) {
    Coord r = floormod(lam[i] + e[i] - lam[k] - e[k], p);
    if (r == 0) return -1;
    best = std::min(best, std::min(r, p - r) - 1);
  }
  return static_cast<int>(best);
}

int depth(const Weight& lam, const GroupContext& ctx) {
  int d = static_cast<int>(ctx.p);
  for (int j = 0; j < lam.f(); ++j) {
    int dj = depth(lam[j], ctx.p);
    if (dj < 0) return -1;
    d = std::min(d, dj);
  }
  return d;
}

bool in_base_alcove(const Vec& lam, Coord p) {
  const int n = static_cast<int>(lam.size());
  const Vec e = eta_vec(n);
  for (auto [i, k] : positive_roots(n)) {
    Coord a = lam[i] + e[i] - lam[k] - e[k];
    if (a <= 0 || a >= p) return false;
  }
  return true;
}

bool in_base_alcove(const Weight& lam, const GroupContext& ctx) {
  for (int j = 0; j < lam.f(); ++j)
    if (!in_base_alcove(lam[j], ctx.p)) return false;
  return true;
}

AlcoveAddress alcove_of(const Weight& lam, const GroupContext& ctx) {
  if (depth(lam, ctx) < 0) throw WallError("weight " + to_string(lam) + " lies on an alcove wall");
  AlcoveAddress a;
  const Vec e = ctx.eta0();
  for (int j = 0; j < lam.f(); ++j) {
    Vec fl;
    for (auto [i, k] : positive_roots(ctx.n)) fl.push_back(floordiv(lam[j][i] + e[i] - lam[j][k] - e[k], ctx.p));
    a.floors.push_back(std::move(fl));
  }
  a.element = link_normalize(lam, ctx).via;
  return a;
}

bool is_p_restricted(const Weight& lam, const GroupContext& ctx) {
  for (int j = 0; j < lam.f(); ++j)
    for (int i = 0; i + 1 < lam.n(); ++i) {
      Coord a = lam[j][i] - lam[j][i + 1];
      if (a < 0 || a > ctx.p - 1) return false;
    }
  return true;
}

bool is_regular_restricted(const Weight& lam, const GroupContext& ctx) {
  for (int j = 0; j < lam.f(); ++j)
    for (int i = 0; i + 1 < lam.n(); ++i) {
      Coord a = lam[j][i] - lam[j][i + 1];
      if (a < 0 || a >= ctx.p - 1) return false;
    }
  return true;
}

bool is_dominant(const Weight& lam) {
  for (int j = 0; j < lam.f(); ++j)
    for (int i = 0; i + 1 < lam.n(); ++i)
      if (lam[j][i] < lam[j][i + 1]) return false;
  return true;
}

bool in_W_plus(const ExtAffElt& x) {
  const Perm wi = x.w.inverse();
  for (auto [i, k] : positive_roots(x.n())) {
    Coord c = x.nu[i] - x.nu[k];
    if (c < (wi(i) > wi(k) ? 1 : 0)) return false;
  }
  return true;
}

bool in_W_plus(const TupleElt& x) {
  for (const auto& p : x.parts)
    if (!in_W_plus(p)) return false;
  return true;
}

DominantPart dominant_part(const TupleElt& x) {
  DominantPart d;
  std::vector<ExtAffElt> plus;
  for (const auto& part : x.parts) {
    const int n = part.n();
    // image of an interior point of the base alcove, scaled so that it is regular
    Vec v = vadd(part.w.act(eta_vec(n)), vscale(part.nu, 2 * n));
    Perm s = sorting_perm(v);
    plus.push_back(ExtAffElt::finite(s) * part);
    d.w.push_back(s.inverse());
  }
  d.xplus = TupleElt(std::move(plus));
  return d;
}

std::pair<Vec, ExtAffElt> link_normalize(const Vec& lam, Coord p) {
  const int n = static_cast<int>(lam.size());
  const Vec e = eta_vec(n);
  Vec v = vadd(lam, e);
  // h acts on v by v -> w v + p nu; we track v = h(lam + eta).
  ExtAffElt h = ExtAffElt::identity(n);
  const ExtAffElt s0 = simple_reflection(n, 0, BruhatBase::Dominant);
  while (true) {
    Perm s = sorting_perm(v);
    v = s.act(v);
    h = ExtAffElt::finite(s) * h;
    if (v[0] - v[n - 1] <= p) break;
    std::swap(v[0], v[n - 1]);
    v[0] += p;
    v[n - 1] -= p;
    h = s0 * h;
  }
  return {vsub(v, e), h.inverse()};
}

LinkNormalization link_normalize(const Weight& lam, const GroupContext& ctx) {
  std::vector<Vec> reps;
  std::vector<ExtAffElt> via;
  for (int j = 0; j < lam.f(); ++j) {
    auto [r, u] = link_normalize(lam[j], ctx.p);
    reps.push_back(std::move(r));
    via.push_back(std::move(u));
  }
  return {Weight(std::move(reps)), TupleElt(std::move(via))};
}

Order up_leq_weights(const Vec& lam, const Vec& mu, Coord p) {
  if (lam == mu) return Order::True;
  if (link_normalize(lam, p).first != link_normalize(mu, p).first) return Order::Incomparable;
  const int n = static_cast<int>(lam.size());
  const Vec e = eta_vec(n);
  auto prefix_ok = [&](const Vec& cur) {
    Coord s = 0;
    for (int t = 0; t + 1 < n; ++t) {
      s += mu[t] - cur[t];
      if (s < 0) return false;
    }
    return true;
  };
  if (!prefix_ok(lam)) return Order::False;
  std::set<Vec> seen{lam};
  std::deque<Vec> queue{lam};
  while (!queue.empty()) {
    Vec cur = std::move(queue.front());
    queue.pop_front();
    Vec pre(n, 0);
    Coord s = 0;
    for (int t = 0; t < n; ++t) {
      s += mu[t] - cur[t];
      pre[t] = s;
    }
    for (auto [i, k] : positive_roots(n)) {
      Coord cap = pre[i];
      for (int t = i; t < k; ++t) cap = std::min(cap, pre[t]);
      Coord a = cur[i] + e[i] - cur[k] - e[k];
      for (Coord m = floordiv(a, p) + 1;; ++m) {
        Coord c = m * p - a;
        if (c > cap) break;
        Vec nxt = cur;
        nxt[i] += c;
        nxt[k] -= c;
        if (nxt == mu) return Order::True;
        if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
      }
    }
  }
  return Order::False;
}

Order up_leq_weights(const Weight& lam, const Weight& mu, const GroupContext& ctx) {
  if (lam.f() != mu.f() || lam.n() != mu.n()) throw InputError("context mismatch");
  bool all = true;
  for (int j = 0; j < lam.f(); ++j) {
    Order o = up_leq_weights(lam[j], mu[j], ctx.p);
    if (o == Order::Incomparable) return o;
    if (o == Order::False) all = false;
  }
  return all ? Order::True : Order::False;
}

bool alcove_up(const ExtAffElt& a, const ExtAffElt& b, Coord p) {
  const Vec zero(a.n(), 0);
  Vec pa = dot(wa_part(a, BruhatBase::Dominant), zero, p);
  Vec pb = dot(wa_part(b, BruhatBase::Dominant), zero, p);
  return up_leq_weights(pa, pb, p) == Order::True;
}

bool alcove_up(const TupleElt& a, const TupleElt& b, const GroupContext& ctx) {
  for (int j = 0; j < a.f(); ++j)
    if (!alcove_up(a[j], b[j], ctx.p)) return false;
  return true;
}

Order up_leq_elts(const ExtAffElt& a, const ExtAffElt& b, Coord p) {
  if (coset_class(a) != coset_class(b)) return Order::Incomparable;
  return alcove_up(a, b, p) ? Order::True : Order::False;
}

Order up_leq_elts(const TupleElt& a, const TupleElt& b, const GroupContext& ctx) {
  if (a.f() != b.f() || a.n() != b.n()) throw InputError("context mismatch");
  for (int j = 0; j < a.f(); ++j)
    if (coset_class(a[j]) != coset_class(b[j])) return Order::Incomparable;
  return alcove_up(a, b, ctx) ? Order::True : Order::False;
}

ExtAffElt w_h(int n) { return ExtAffElt::finite_first(Perm::longest(n), vscale(eta_vec(n), -1)); }

TupleElt w_h(const GroupContext& ctx) { return TupleElt::repeat(w_h(ctx.n), ctx.f); }

const std::vector<ExtAffElt>& restricted_alcoves(int n, Coord p) {
  static std::mutex mu;
  static std::map<std::pair<int, Coord>, std::vector<ExtAffElt>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const Vec e = eta_vec(n);
  const Vec zero(n, 0);
  auto restricted = [&](const ExtAffElt& u) {
    Vec v = vadd(dot(u, zero, p), e);
    for (int i = 0; i + 1 < n; ++i) {
      Coord a = v[i] - v[i + 1];
      if (a <= 0 || a >= p) return false;
    }
    return true;
  };
  std::set<ExtAffElt> seen{ExtAffElt::identity(n)};
  std::deque<ExtAffElt> queue{ExtAffElt::identity(n)};
  std::vector<ExtAffElt> out;
  while (!queue.empty()) {
    ExtAffElt u = queue.front();
    queue.pop_front();
    out.push_back(u);
    for (int i = 0; i < n; ++i) {
      ExtAffElt nb = u * simple_reflection(n, i, BruhatBase::Dominant);
      if (restricted(nb) && seen.insert(nb).second) queue.push_back(nb);
    }
  }
  std::sort(out.begin(), out.end(), [](const ExtAffElt& a, const ExtAffElt& b) {
    int la = length(a, BruhatBase::Dominant), lb = length(b, BruhatBase::Dominant);
    return la != lb ? la < lb : a < b;
  });
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace weylcalc
