#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "weylcalc/errors.hpp"

namespace weylcalc {

using Coord = std::int64_t;
using Vec = std::vector<Coord>;

// GL_n over f embeddings with residue characteristic p.
struct GroupContext {
  int n = 2;
  int f = 1;
  Coord p = 3;

  // Validates n >= 2, f >= 1, p prime and p > n.
  static GroupContext make(int n, int f, Coord p);

  Vec eta0() const;  // (n-1, ..., 1, 0)
  bool operator==(const GroupContext&) const = default;
};

// Zero-indexed permutation; acts on Z^n by w(e_i) = e_{w(i)}.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  static Perm transposition(int n, int i, int k);
  static Perm longest(int n);
  // All permutations of {0..n-1} in lexicographic order of image arrays.
  static const std::vector<Perm>& all(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  Perm operator*(const Perm& o) const;  // (a*b)(i) = a(b(i))
  Vec act(const Vec& x) const;          // (w x)_{w(i)} = x_i
  int order() const;
  bool is_identity() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

// Element of X*(T) over f embeddings, stored as coords[j][i].
class Weight {
 public:
  Weight() = default;
  Weight(int f, int n) : c_(f, Vec(n, 0)) {}
  explicit Weight(std::vector<Vec> coords);

  static Weight repeat(const Vec& v, int f) { return Weight(std::vector<Vec>(f, v)); }

  int f() const { return static_cast<int>(c_.size()); }
  int n() const { return c_.empty() ? 0 : static_cast<int>(c_[0].size()); }
  Vec& operator[](int j) { return c_[j]; }
  const Vec& operator[](int j) const { return c_[j]; }
  const std::vector<Vec>& coords() const { return c_; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(Coord k) const;

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<Vec> c_;
};

Weight eta(const GroupContext& ctx);
// pi(nu)_j = nu_{j-1 mod f}
Weight pi(const Weight& w);
Weight pi_inverse(const Weight& w);

using PermTuple = std::vector<Perm>;

PermTuple identity_tuple(int n, int f);
PermTuple operator*(const PermTuple& a, const PermTuple& b);
PermTuple inverse(const PermTuple& a);
PermTuple pi(const PermTuple& a);
Weight act(const PermTuple& w, const Weight& x);
// All (n!)^f tuples, lexicographic with embedding 0 most significant.
std::vector<PermTuple> all_perm_tuples(int n, int f);

Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Vec& a, Coord k);
Coord vsum(const Vec& a);

// Single-embedding element t_nu * w acting by x -> w(x) + nu.
struct ExtAffElt {
  Vec nu;
  Perm w;

  static ExtAffElt identity(int n);
  static ExtAffElt translation(Vec nu);
  static ExtAffElt finite(Perm w);
  // The element written w t_nu, i.e. t_{w(nu)} w.
  static ExtAffElt finite_first(const Perm& w, const Vec& nu);

  int n() const { return w.size(); }
  Vec right_nu() const;  // nu' with this = w t_{nu'}
  ExtAffElt operator*(const ExtAffElt& o) const;
  ExtAffElt inverse() const;
  Vec act(const Vec& x) const;

  auto operator<=>(const ExtAffElt&) const = default;
};

struct TupleElt {
  std::vector<ExtAffElt> parts;

  TupleElt() = default;
  explicit TupleElt(std::vector<ExtAffElt> p);

  static TupleElt identity(int n, int f);
  static TupleElt translation(const Weight& nu);
  static TupleElt finite(const PermTuple& w);
  static TupleElt finite_first(const PermTuple& w, const Weight& nu);
  static TupleElt repeat(const ExtAffElt& x, int f) { return TupleElt(std::vector<ExtAffElt>(f, x)); }

  int f() const { return static_cast<int>(parts.size()); }
  int n() const { return parts.empty() ? 0 : parts[0].n(); }
  ExtAffElt& operator[](int j) { return parts[j]; }
  const ExtAffElt& operator[](int j) const { return parts[j]; }

  Weight translation_part() const;
  PermTuple finite_part() const;
  Weight right_nu() const;

  TupleElt operator*(const TupleElt& o) const;
  TupleElt inverse() const;

  auto operator<=>(const TupleElt&) const = default;
};

TupleElt pi(const TupleElt& x);
TupleElt pi_inverse(const TupleElt& x);

// Which base alcove defines the Coxeter generators (W~ uses Dominant, W~dual
// uses Antidominant).
enum class BruhatBase { Dominant, Antidominant };

enum class Order { True, False, Incomparable };
const char* to_string(Order o);

// Number of affine root hyperplanes separating the base alcove from its
// image; equals the Coxeter length of the W_a-part.
int length(const ExtAffElt& x, BruhatBase base);
int length(const TupleElt& x, BruhatBase base);

// Image of x in W~/W_a = Z (coordinate sum of the translation part).
Coord coset_class(const ExtAffElt& x);

// The length-0 element with coordinate sum 1.
const ExtAffElt& omega_generator(int n, BruhatBase base);
// omega_generator^c.
ExtAffElt omega_power(int n, BruhatBase base, Coord c);

struct OmegaDecomposition {
  TupleElt wa;
  TupleElt omega;
};
OmegaDecomposition omega_decompose(const TupleElt& x, BruhatBase base);
ExtAffElt wa_part(const ExtAffElt& x, BruhatBase base);

// Index 0 is the affine generator, 1..n-1 the simple transpositions (i-1, i).
ExtAffElt simple_reflection(int n, int i, BruhatBase base);

struct ReducedWord {
  std::vector<std::vector<int>> letters;  // per embedding
  TupleElt omega;
};
ReducedWord reduced_word(const TupleElt& x, BruhatBase base);
TupleElt evaluate_word(const ReducedWord& rw, BruhatBase base);

Order bruhat_leq(const ExtAffElt& a, const ExtAffElt& b, BruhatBase base);
Order bruhat_leq(const TupleElt& a, const TupleElt& b, BruhatBase base);

Perm star_perm(const Perm& w);  // inverse
PermTuple star(const PermTuple& w);
Weight star(const Weight& nu);
TupleElt star(const TupleElt& x);

// Canonical total order for serialized sets: total length, then coordinates.
bool canonical_less(const TupleElt& a, const TupleElt& b, BruhatBase base);

std::string to_string(const Perm& w);
std::string to_string(const Weight& w);
std::string to_string(const ExtAffElt& x);
std::string to_string(const TupleElt& x);

}  // namespace weylcalc
