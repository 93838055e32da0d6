#include "weylcalc/phi_modules.hpp"

#include <numeric>

namespace weylcalc {

MonomialFrobenius from_element(const TupleElt& x, Coord p) {
  std::vector<std::vector<std::string>> units;
  for (int j = 0; j < x.f(); ++j) units.emplace_back(x.n(), "1");
  return from_element(x, p, units);
}

MonomialFrobenius from_element(const TupleElt& x, Coord p, const std::vector<std::vector<std::string>>& units) {
  if (static_cast<int>(units.size()) != x.f()) throw InputError("unit labels do not match element");
  MonomialFrobenius m;
  m.p = p;
  for (int j = 0; j < x.f(); ++j) {
    const ExtAffElt& e = x[j];
    if (static_cast<int>(units[j].size()) != e.n()) throw InputError("unit labels do not match element");
    // column k of v^nu w is v^{nu_{w(k)}} e_{w(k)}
    Vec ex(e.n());
    for (int k = 0; k < e.n(); ++k) ex[k] = e.nu[e.w(k)];
    m.blocks.push_back({e.w, ex, units[j]});
  }
  return m;
}

TupleElt to_element(const MonomialFrobenius& m) {
  std::vector<ExtAffElt> parts;
  for (const auto& b : m.blocks) {
    Vec nu(b.exps.size());
    for (int k = 0; k < b.perm.size(); ++k) nu[b.perm(k)] = b.exps[k];
    parts.push_back({nu, b.perm});
  }
  return TupleElt(std::move(parts));
}

Perm frobenius_permutation(const MonomialFrobenius& m) {
  Perm c = Perm::identity(m.n());
  for (const auto& b : m.blocks) c = b.perm * c;
  return c;
}

InertialType inertial_type_of(const MonomialFrobenius& m, int r_hint) {
  const int f = m.f(), n = m.n();
  int r = frobenius_permutation(m).order();
  if (r_hint > 0) {
    if (r_hint % r != 0) throw InputError("degree hint must be a multiple of the Frobenius order");
    r = r_hint;
  }
  std::vector<BigInt> ex;
  for (int i = 0; i < n; ++i) {
    BigInt e = 0;
    int k = i;
    for (int step = 0; step < f * r; ++step) {
      const MonomialBlock& b = m.blocks[step % f];
      e = e * m.p + b.exps[k];
      k = b.perm(k);
    }
    ex.push_back(e);
  }
  return make_inertial_type(m.p, f, r, std::move(ex));
}

MonomialFrobenius base_change(const MonomialFrobenius& m, int r) {
  if (r < 1) throw InputError("base change degree must be positive");
  MonomialFrobenius out;
  out.p = m.p;
  for (int k = 0; k < r; ++k)
    for (const auto& b : m.blocks) out.blocks.push_back(b);
  return out;
}

bool verify_galois_type(const TupleElt& x, const GroupContext& ctx) {
  if (x.f() != ctx.f || x.n() != ctx.n) throw InputError("element does not match context");
  TamePair pair{star(x.finite_part()), star(x.right_nu())};
  return type_iso(inertial_type_of(from_element(x, ctx.p)), type_of(pair, ctx));
}

}  // namespace weylcalc
