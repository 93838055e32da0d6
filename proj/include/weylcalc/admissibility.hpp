#pragma once

#include <cstdint>
#include <vector>

#include "weylcalc/lattice_weyl.hpp"

namespace weylcalc {

// Dominant Weyl conjugate (coordinates sorted decreasingly).
Vec dominant_conjugate(const Vec& v);

// Per embedding: sum(nu) = sum(lam) and the dominant conjugate of nu is <= lam
// in the dominance order.
bool convex_hull_check(const Vec& nu, const Vec& lam);
bool convex_hull_check(const Weight& nu, const Weight& lam);

bool is_admissible(const ExtAffElt& x, const Vec& lam, BruhatBase base);
bool is_admissible(const TupleElt& x, const Weight& lam, BruhatBase base);

// Adm(lam) as a product of per-embedding sets.
class AdmSet {
 public:
  AdmSet(std::vector<std::vector<ExtAffElt>> per_embedding, BruhatBase base)
      : sets_(std::move(per_embedding)), base_(base) {}

  int f() const { return static_cast<int>(sets_.size()); }
  const std::vector<ExtAffElt>& embedding(int j) const { return sets_[j]; }
  std::uint64_t size() const;
  bool contains(const TupleElt& x) const;
  // Materialized product in canonical order.
  std::vector<TupleElt> elements() const;

 private:
  std::vector<std::vector<ExtAffElt>> sets_;  // each sorted by operator<
  BruhatBase base_;
};

// Single-embedding Adm(lam), sorted by (length, coordinates). Cached.
const std::vector<ExtAffElt>& enumerate_adm(const Vec& lam, BruhatBase base);
AdmSet enumerate_adm(const Weight& lam, BruhatBase base);

struct DualTransport {
  bool direct;       // is_admissible(x, mu, Antidominant)
  bool transported;  // is_admissible(star(x), mu*, Dominant)
  bool agree() const { return direct == transported; }
};
DualTransport adm_dual_transport(const TupleElt& x, const Weight& mu);

}  // namespace weylcalc
