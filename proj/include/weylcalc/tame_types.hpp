#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylcalc/lattice_weyl.hpp"

namespace weylcalc {

using BigInt = boost::multiprecision::cpp_int;

// A pair (s, mu). Which type it presents, tau(s, mu) or tau(s, mu + eta),
// is stated by each operation taking one.
struct TamePair {
  PermTuple s;
  Weight mu;
  auto operator<=>(const TamePair&) const = default;
};

// Frobenius-stable multiset of character exponents modulo p^{f r} - 1.
struct InertialType {
  Coord p = 0;
  int f = 1;
  int r = 1;
  BigInt modulus;
  std::vector<BigInt> exponents;  // sorted, reduced

  int degree() const { return f * r; }
  // Exponents rescaled to modulus p^d - 1 (d a multiple of f*r), sorted.
  std::vector<BigInt> lifted(int d) const;
  bool frobenius_stable() const;
};

BigInt big_pow(Coord p, int e);

// (sigma w pi(sigma)^{-1}, sigma(mu) + p nu - sigma w pi(sigma)^{-1} pi(nu))
TamePair conj(const TamePair& pair, const Weight& nu, const PermTuple& sigma, const GroupContext& ctx);

// The type tau(s, mu) (no offset applied).
InertialType type_of(const TamePair& pair, const GroupContext& ctx);
// Builds exponents from an explicit multiset; used by the phi-module side.
InertialType make_inertial_type(Coord p, int f, int r, std::vector<BigInt> exponents);

// Requires the same (p, f); compares at degree f * lcm(r1, r2).
bool type_iso(const InertialType& a, const InertialType& b);
// Compares as characters of inertia across different f (degree lcm).
bool same_characters(const InertialType& a, const InertialType& b);

bool is_regular_type(const InertialType& t);

// Input (s, mu) presents tau(s, mu + eta). Returns every (s', mu') with mu' in
// C_0 and (s', mu' + eta) a conjugate of (s, mu + eta), with nu normalized
// modulo X^0 (minimum coordinate 0 in each embedding) and
// max - min of each nu_j at most `bound`. Sorted.
std::vector<TamePair> lowest_alcove_presentations(const TamePair& pair, int bound, const GroupContext& ctx);

// Input (s, mu) presents tau(s, mu). Max depth over lowest alcove
// presentations found with bound n; -1 if there are none.
int genericity(const TamePair& pair, const GroupContext& ctx);

// Diagonal repetition r times; the result lives in context f*r.
TamePair base_change(const TamePair& pair, int r);
GroupContext base_change(const GroupContext& ctx, int r);

// c in Z^f with (p - pi) c = d, if one exists.
std::optional<std::vector<Coord>> solve_p_minus_pi(const std::vector<Coord>& d, Coord p);

// (a - b) restricted to the centre lies in (p - pi) X*(Z).
bool central_compatible(const Weight& a, const Weight& b, const GroupContext& ctx);

struct ConjWitness {
  Weight nu;
  PermTuple sigma;
};
// Some (nu, sigma) with conj(p1, nu, sigma) == p2 exactly and every nu_j of
// spread (max - min) at most `bound`. Both pairs use the same offset.
std::optional<ConjWitness> conjugation_witness(const TamePair& p1, const TamePair& p2, int bound,
                                               const GroupContext& ctx);

std::string to_string(const InertialType& t);

}  // namespace weylcalc
