#pragma once

#include <string>
#include <vector>

#include "weylcalc/tame_types.hpp"

namespace weylcalc {

// Frobenius phi^(j): M^(j) -> M^(j+1) with phi(e_k) = units[k] v^{exps[k]} e_{perm(k)}.
struct MonomialBlock {
  Perm perm;
  Vec exps;
  std::vector<std::string> units;  // opaque scalar labels
  bool operator==(const MonomialBlock&) const = default;
};

struct MonomialFrobenius {
  Coord p = 0;
  std::vector<MonomialBlock> blocks;
  int f() const { return static_cast<int>(blocks.size()); }
  int n() const { return blocks.empty() ? 0 : blocks[0].perm.size(); }
};

// M(x) with D = Id: the matrix of x_j under mu -> v^mu and permutation matrices.
MonomialFrobenius from_element(const TupleElt& x, Coord p);
// M(x, D) where D is given by unit labels per embedding.
MonomialFrobenius from_element(const TupleElt& x, Coord p, const std::vector<std::vector<std::string>>& units);
TupleElt to_element(const MonomialFrobenius& m);

// Composite permutation of phi^f on M^(0).
Perm frobenius_permutation(const MonomialFrobenius& m);

// Exponents of phi^{fr} on a basis of M'^(0) after base change of degree r.
InertialType inertial_type_of(const MonomialFrobenius& m, int r_hint = 0);

// Restriction to r repetitions of the embeddings (unramified base change).
MonomialFrobenius base_change(const MonomialFrobenius& m, int r);

// Compares inertial_type_of(from_element(x)) with tau(s^*, mu^*) where x = s t_mu.
bool verify_galois_type(const TupleElt& x, const GroupContext& ctx);

}  // namespace weylcalc
