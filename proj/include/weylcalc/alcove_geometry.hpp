#pragma once

#include <utility>
#include <vector>

#include "weylcalc/lattice_weyl.hpp"

namespace weylcalc {

// Positive roots e_i - e_k (i < k), in lexicographic order of (i, k).
const std::vector<std::pair<int, int>>& positive_roots(int n);

// p-scaled, eta-shifted action: (t_mu w).x = w(x + eta) + p mu - eta.
Vec dot(const ExtAffElt& x, const Vec& lam, Coord p);
Weight dot(const TupleElt& x, const Weight& lam, const GroupContext& ctx);

// Largest m with lam m-deep in its alcove; -1 on a wall.
int depth(const Weight& lam, const GroupContext& ctx);
int depth(const Vec& lam, Coord p);

bool in_base_alcove(const Vec& lam, Coord p);  // strictly inside C_0
bool in_base_alcove(const Weight& lam, const GroupContext& ctx);

struct AlcoveAddress {
  std::vector<Vec> floors;  // [j][root index] = floor(<lam+eta, a>/p)
  TupleElt element;         // the unique u in W_a with u.C_0 = alcove
};
AlcoveAddress alcove_of(const Weight& lam, const GroupContext& ctx);

bool is_p_restricted(const Weight& lam, const GroupContext& ctx);
bool is_regular_restricted(const Weight& lam, const GroupContext& ctx);
bool is_dominant(const Weight& lam);

// x.C_0 lies in the dominant chamber. Independent of p.
bool in_W_plus(const ExtAffElt& x);
bool in_W_plus(const TupleElt& x);

struct DominantPart {
  PermTuple w;
  TupleElt xplus;
};
// x = w * xplus with xplus in W~+.
DominantPart dominant_part(const TupleElt& x);

struct LinkNormalization {
  Weight rep;   // in the closure of C_0
  TupleElt via; // in W_a, with via . rep = lam
};
LinkNormalization link_normalize(const Weight& lam, const GroupContext& ctx);
std::pair<Vec, ExtAffElt> link_normalize(const Vec& lam, Coord p);

Order up_leq_weights(const Weight& lam, const Weight& mu, const GroupContext& ctx);
Order up_leq_weights(const Vec& lam, const Vec& mu, Coord p);

// Alcove-level comparison a.C_0 up b.C_0, ignoring cosets.
bool alcove_up(const ExtAffElt& a, const ExtAffElt& b, Coord p);
bool alcove_up(const TupleElt& a, const TupleElt& b, const GroupContext& ctx);

// a up b: same right W_a-coset and a.C_0 up b.C_0.
Order up_leq_elts(const ExtAffElt& a, const ExtAffElt& b, Coord p);
Order up_leq_elts(const TupleElt& a, const TupleElt& b, const GroupContext& ctx);

// w~_h = w_0 t_{-eta}.
ExtAffElt w_h(int n);
TupleElt w_h(const GroupContext& ctx);

// W_a-addresses u with u.C_0 p-restricted, sorted by length.
const std::vector<ExtAffElt>& restricted_alcoves(int n, Coord p);

}  // namespace weylcalc
