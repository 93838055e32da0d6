#include "weylcalc/admissibility.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace weylcalc {

Vec dominant_conjugate(const Vec& v) {
  Vec d = v;
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool convex_hull_check(const Vec& nu, const Vec& lam) {
  if (nu.size() != lam.size()) throw InputError("rank mismatch");
  Vec a = dominant_conjugate(nu), b = dominant_conjugate(lam);
  Coord sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return sa == sb;
}

bool convex_hull_check(const Weight& nu, const Weight& lam) {
  if (nu.f() != lam.f()) throw InputError("context mismatch");
  for (int j = 0; j < nu.f(); ++j)
    if (!convex_hull_check(nu[j], lam[j])) return false;
  return true;
}

bool is_admissible(const ExtAffElt& x, const Vec& lam, BruhatBase base) {
  if (coset_class(x) != vsum(lam)) return false;
  Vec top = dominant_conjugate(lam);
  std::sort(top.begin(), top.end());
  do {
    if (bruhat_leq(x, ExtAffElt::translation(top), base) == Order::True) return true;
  } while (std::next_permutation(top.begin(), top.end()));
  return false;
}

bool is_admissible(const TupleElt& x, const Weight& lam, BruhatBase base) {
  if (x.f() != lam.f() || x.n() != lam.n()) throw InputError("context mismatch");
  for (int j = 0; j < x.f(); ++j)
    if (!is_admissible(x[j], lam[j], base)) return false;
  return true;
}

const std::vector<ExtAffElt>& enumerate_adm(const Vec& lam_in, BruhatBase base) {
  static std::mutex mu;
  static std::map<std::pair<Vec, int>, std::vector<ExtAffElt>> cache;
  const Vec lam = dominant_conjugate(lam_in);
  const auto key = std::make_pair(lam, static_cast<int>(base));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int n = static_cast<int>(lam.size());
  const Coord lo = lam.back(), hi = lam.front(), total = vsum(lam);
  std::vector<ExtAffElt> out;
  Vec nu(n, lo);
  // odometer over the box [lo, hi]^n; the hull condition prunes the rest
  std::function<void(int, Coord)> rec = [&](int i, Coord s) {
    if (i == n) {
      if (s != total || !convex_hull_check(nu, lam)) return;
      for (const auto& w : Perm::all(n)) {
        ExtAffElt x{nu, w};
        if (is_admissible(x, lam, base)) out.push_back(x);
      }
      return;
    }
    for (Coord v = lo; v <= hi; ++v) {
      nu[i] = v;
      rec(i + 1, s + v);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [base](const ExtAffElt& a, const ExtAffElt& b) {
    int la = length(a, base), lb = length(b, base);
    return la != lb ? la < lb : a < b;
  });
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

AdmSet enumerate_adm(const Weight& lam, BruhatBase base) {
  std::vector<std::vector<ExtAffElt>> sets;
  for (int j = 0; j < lam.f(); ++j) {
    auto s = enumerate_adm(lam[j], base);
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  return AdmSet(std::move(sets), base);
}

std::uint64_t AdmSet::size() const {
  std::uint64_t k = 1;
  for (const auto& s : sets_) k *= s.size();
  return k;
}

bool AdmSet::contains(const TupleElt& x) const {
  if (x.f() != f()) return false;
  for (int j = 0; j < f(); ++j)
    if (!std::binary_search(sets_[j].begin(), sets_[j].end(), x[j])) return false;
  return true;
}

std::vector<TupleElt> AdmSet::elements() const {
  std::vector<TupleElt> out{TupleElt{}};
  for (const auto& s : sets_) {
    std::vector<TupleElt> next;
    for (const auto& prefix : out)
      for (const auto& x : s) {
        auto parts = prefix.parts;
        parts.push_back(x);
        next.emplace_back(std::move(parts));
      }
    out = std::move(next);
  }
  const BruhatBase base = base_;
  std::sort(out.begin(), out.end(), [base](const TupleElt& a, const TupleElt& b) { return canonical_less(a, b, base); });
  return out;
}

DualTransport adm_dual_transport(const TupleElt& x, const Weight& mu) {
  Weight dom = mu;
  for (int j = 0; j < dom.f(); ++j) dom[j] = dominant_conjugate(dom[j]);
  return {is_admissible(x, dom, BruhatBase::Antidominant), is_admissible(star(x), star(dom), BruhatBase::Dominant)};
}

}  // namespace weylcalc
