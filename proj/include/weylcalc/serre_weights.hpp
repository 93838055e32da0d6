#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weylcalc/tame_types.hpp"

namespace weylcalc {

// F(lambda): class of a p-restricted weight modulo (p - pi) X^0. The
// canonical representative has last coordinates (lambda_j[n-1])_j equal to
// the base-p digits of sum_j lambda_j[n-1] p^j mod (p^f - 1); for f = 1 this
// puts the last coordinate in [0, p-1).
struct SerreWeight {
  Weight rep;
  Weight raw;
  bool operator==(const SerreWeight& o) const { return rep == o.rep; }
  bool operator<(const SerreWeight& o) const { return rep < o.rep; }
};

// (s, mu) with mu in C_0, presenting rhobar|_I = taubar(s, mu + eta).
struct RhoBar {
  TamePair pair;
  static RhoBar make(const TamePair& pair, const GroupContext& ctx);
};

SerreWeight make_serre_weight(const Weight& lam, const GroupContext& ctx);

// F(lambda) -> F(w~_h . lambda); lambda must be regular restricted.
SerreWeight R_op(const SerreWeight& F, const GroupContext& ctx);

// JH factors of the reduction of R_s(mu + eta); mu must be 2n-deep in C_0.
// `bound` limits |<nu, a>| for the candidate w t_nu (default n - 1).
std::vector<SerreWeight> jh_factors(const PermTuple& s, const Weight& mu, const GroupContext& ctx, int bound = -1);

std::vector<SerreWeight> w_question(const RhoBar& rho, const GroupContext& ctx);

std::map<PermTuple, SerreWeight> w_obv(const RhoBar& rho, const GroupContext& ctx);

std::optional<PermTuple> is_obvious_weight(const RhoBar& rho, const SerreWeight& F, const GroupContext& ctx);

// Per-embedding candidates w t_nu in W~+ (nu normalized modulo X^0, spread
// at most `bound`) whose alcove lies below w~_h . C_0 in the up order.
const std::vector<ExtAffElt>& elements_below_wh(int n, Coord p, int bound);

}  // namespace weylcalc
