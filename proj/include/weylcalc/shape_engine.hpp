#pragma once

#include <optional>
#include <vector>

#include "weylcalc/serre_weights.hpp"

namespace weylcalc {

// Throughout this header a "type pair" (s, mu) presents tau(s, mu) with the
// eta offset included. A compatible presentation of tau is a type pair with
// mu - eta in C_0 and mu_rhobar - mu in the root lattice.

// All compatible presentations of tau(pair) found with the given bound.
std::vector<TamePair> compatible_presentations(const RhoBar& rho, const TamePair& pair, int bound,
                                               const GroupContext& ctx);
std::optional<TamePair> compatible_presentation(const RhoBar& rho, const TamePair& pair, int bound,
                                                const GroupContext& ctx);

bool is_compatible(const RhoBar& rho, const TamePair& compat, const GroupContext& ctx);

// t_nu w with w = s^{-1} s_rhobar and nu = s^{-1}(mu_rhobar + eta - mu).
TupleElt shape(const RhoBar& rho, const TamePair& compat, const GroupContext& ctx);

// The compatible type pair whose shape is t_{pi(w^{-1} eta)}.
TamePair obvious_type(const RhoBar& rho, const PermTuple& w, const GroupContext& ctx);

struct WqTau {
  std::vector<SerreWeight> by_intersection;   // W?(rhobar) cap JH(taubar)
  std::vector<SerreWeight> by_factorization;  // alcove factorization criterion
  bool agree() const { return by_intersection == by_factorization; }
};
WqTau w_question_tau(const RhoBar& rho, const TamePair& compat, const GroupContext& ctx);

// Only the factorization route.
std::vector<SerreWeight> w_question_tau_factorization(const RhoBar& rho, const TamePair& compat,
                                                      const GroupContext& ctx);

struct EquivalenceReport {
  bool compatible = false;  // false: no compatible presentation, all flags false
  bool admissible = false;
  bool wq_nonempty = false;
  bool obv_meets_jh = false;
  std::optional<TamePair> compat;
  std::optional<TupleElt> shape;
  bool consistent() const { return admissible == wq_nonempty && wq_nonempty == obv_meets_jh; }
};
EquivalenceReport check_equivalences(const RhoBar& rho, const TamePair& pair, const GroupContext& ctx);

struct EliminationVerdict {
  bool covered = false;
  bool membership_verified = false;  // F(lambda) in W?(rhobar), checked when covered
  std::optional<PermTuple> witness;  // s whose type has a non-admissible shape
  std::optional<TupleElt> witness_shape;
  std::optional<TamePair> witness_type;
};
EliminationVerdict elimination_cover(const RhoBar& rho, const Weight& lam, const GroupContext& ctx);

}  // namespace weylcalc
