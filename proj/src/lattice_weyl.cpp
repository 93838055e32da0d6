#include "weylcalc/lattice_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace weylcalc {

namespace {

bool is_prime(Coord p) {
  if (p < 2) return false;
  for (Coord d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same_shape(int f1, int n1, int f2, int n2) {
  if (f1 != f2 || n1 != n2)
    throw InputError("context mismatch: (n,f)=(" + std::to_string(n1) + "," + std::to_string(f1) +
                     ") vs (" + std::to_string(n2) + "," + std::to_string(f2) + ")");
}

}  // namespace

GroupContext GroupContext::make(int n, int f, Coord p) {
  if (n < 2) throw InputError("n must be >= 2");
  if (f < 1) throw InputError("f must be >= 1");
  if (!is_prime(p)) throw InputError("p must be prime");
  if (p <= n) throw InputError("p must exceed n");
  return GroupContext{n, f, p};
}

Vec GroupContext::eta0() const {
  Vec e(n);
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  return e;
}

// ---- Perm ----

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw InputError("not a permutation image array");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i, int k) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[i], v[k]);
  return Perm(std::move(v));
}

Perm Perm::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  return Perm(std::move(v));
}

const std::vector<Perm>& Perm::all(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Perm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Perm> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return cache.emplace(n, std::move(out)).first->second;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i]] = i;
  Perm r;
  r.img_ = std::move(v);
  return r;
}

Perm Perm::operator*(const Perm& o) const {
  if (o.size() != size()) throw InputError("permutation size mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < size(); ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Vec Perm::act(const Vec& x) const {
  Vec y(x.size());
  for (int i = 0; i < size(); ++i) y[img_[i]] = x[i];
  return y;
}

int Perm::order() const {
  int ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int k = i; !seen[k]; k = img_[k]) {
      seen[k] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

// ---- Vec / Weight ----

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vscale(const Vec& a, Coord k) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

Coord vsum(const Vec& a) { return std::accumulate(a.begin(), a.end(), Coord{0}); }

Weight::Weight(std::vector<Vec> coords) : c_(std::move(coords)) {
  for (const auto& v : c_)
    if (v.size() != c_[0].size()) throw InputError("ragged weight");
}

Weight Weight::operator+(const Weight& o) const {
  require_same_shape(f(), n(), o.f(), o.n());
  Weight r = *this;
  for (int j = 0; j < f(); ++j) r.c_[j] = vadd(c_[j], o.c_[j]);
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  require_same_shape(f(), n(), o.f(), o.n());
  Weight r = *this;
  for (int j = 0; j < f(); ++j) r.c_[j] = vsub(c_[j], o.c_[j]);
  return r;
}

Weight Weight::operator-() const { return *this * -1; }

Weight Weight::operator*(Coord k) const {
  Weight r = *this;
  for (auto& v : r.c_) v = vscale(v, k);
  return r;
}

Weight eta(const GroupContext& ctx) { return Weight::repeat(ctx.eta0(), ctx.f); }

Weight pi(const Weight& w) {
  std::vector<Vec> c(w.f());
  for (int j = 0; j < w.f(); ++j) c[j] = w[(j - 1 + w.f()) % w.f()];
  return Weight(std::move(c));
}

Weight pi_inverse(const Weight& w) {
  std::vector<Vec> c(w.f());
  for (int j = 0; j < w.f(); ++j) c[j] = w[(j + 1) % w.f()];
  return Weight(std::move(c));
}

PermTuple identity_tuple(int n, int f) { return PermTuple(f, Perm::identity(n)); }

PermTuple operator*(const PermTuple& a, const PermTuple& b) {
  if (a.size() != b.size()) throw InputError("permutation tuple size mismatch");
  PermTuple r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] * b[j];
  return r;
}

PermTuple inverse(const PermTuple& a) {
  PermTuple r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = a[j].inverse();
  return r;
}

PermTuple pi(const PermTuple& a) {
  const int f = static_cast<int>(a.size());
  PermTuple r(f);
  for (int j = 0; j < f; ++j) r[j] = a[(j - 1 + f) % f];
  return r;
}

Weight act(const PermTuple& w, const Weight& x) {
  require_same_shape(static_cast<int>(w.size()), w.empty() ? 0 : w[0].size(), x.f(), x.n());
  std::vector<Vec> c(x.f());
  for (int j = 0; j < x.f(); ++j) c[j] = w[j].act(x[j]);
  return Weight(std::move(c));
}

std::vector<PermTuple> all_perm_tuples(int n, int f) {
  const auto& base = Perm::all(n);
  std::vector<PermTuple> out{PermTuple{}};
  for (int j = 0; j < f; ++j) {
    std::vector<PermTuple> next;
    next.reserve(out.size() * base.size());
    for (const auto& t : out)
      for (const auto& p : base) {
        auto u = t;
        u.push_back(p);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

// ---- ExtAffElt ----

ExtAffElt ExtAffElt::identity(int n) { return {Vec(n, 0), Perm::identity(n)}; }

ExtAffElt ExtAffElt::translation(Vec nu) {
  const int n = static_cast<int>(nu.size());
  return {std::move(nu), Perm::identity(n)};
}

ExtAffElt ExtAffElt::finite(Perm w) {
  const int n = w.size();
  return {Vec(n, 0), std::move(w)};
}

ExtAffElt ExtAffElt::finite_first(const Perm& w, const Vec& nu) { return {w.act(nu), w}; }

Vec ExtAffElt::right_nu() const { return w.inverse().act(nu); }

ExtAffElt ExtAffElt::operator*(const ExtAffElt& o) const {
  if (o.n() != n()) throw InputError("rank mismatch in product");
  return {vadd(nu, w.act(o.nu)), w * o.w};
}

ExtAffElt ExtAffElt::inverse() const {
  Perm wi = w.inverse();
  return {vscale(wi.act(nu), -1), wi};
}

Vec ExtAffElt::act(const Vec& x) const { return vadd(w.act(x), nu); }

// ---- TupleElt ----

TupleElt::TupleElt(std::vector<ExtAffElt> p) : parts(std::move(p)) {
  for (const auto& x : parts)
    if (x.n() != parts[0].n()) throw InputError("ragged tuple element");
}

TupleElt TupleElt::identity(int n, int f) { return repeat(ExtAffElt::identity(n), f); }

TupleElt TupleElt::translation(const Weight& nu) {
  std::vector<ExtAffElt> p;
  for (int j = 0; j < nu.f(); ++j) p.push_back(ExtAffElt::translation(nu[j]));
  return TupleElt(std::move(p));
}

TupleElt TupleElt::finite(const PermTuple& w) {
  std::vector<ExtAffElt> p;
  for (const auto& x : w) p.push_back(ExtAffElt::finite(x));
  return TupleElt(std::move(p));
}

TupleElt TupleElt::finite_first(const PermTuple& w, const Weight& nu) {
  require_same_shape(static_cast<int>(w.size()), w.empty() ? 0 : w[0].size(), nu.f(), nu.n());
  std::vector<ExtAffElt> p;
  for (int j = 0; j < nu.f(); ++j) p.push_back(ExtAffElt::finite_first(w[j], nu[j]));
  return TupleElt(std::move(p));
}

Weight TupleElt::translation_part() const {
  std::vector<Vec> c;
  for (const auto& x : parts) c.push_back(x.nu);
  return Weight(std::move(c));
}

PermTuple TupleElt::finite_part() const {
  PermTuple r;
  for (const auto& x : parts) r.push_back(x.w);
  return r;
}

Weight TupleElt::right_nu() const {
  std::vector<Vec> c;
  for (const auto& x : parts) c.push_back(x.right_nu());
  return Weight(std::move(c));
}

TupleElt TupleElt::operator*(const TupleElt& o) const {
  require_same_shape(f(), n(), o.f(), o.n());
  std::vector<ExtAffElt> p(parts.size());
  for (size_t j = 0; j < parts.size(); ++j) p[j] = parts[j] * o.parts[j];
  return TupleElt(std::move(p));
}

TupleElt TupleElt::inverse() const {
  std::vector<ExtAffElt> p(parts.size());
  for (size_t j = 0; j < parts.size(); ++j) p[j] = parts[j].inverse();
  return TupleElt(std::move(p));
}

TupleElt pi(const TupleElt& x) {
  const int f = x.f();
  std::vector<ExtAffElt> p(f);
  for (int j = 0; j < f; ++j) p[j] = x[(j - 1 + f) % f];
  return TupleElt(std::move(p));
}

TupleElt pi_inverse(const TupleElt& x) {
  const int f = x.f();
  std::vector<ExtAffElt> p(f);
  for (int j = 0; j < f; ++j) p[j] = x[(j + 1) % f];
  return TupleElt(std::move(p));
}

// ---- length, Omega, words ----

const char* to_string(Order o) {
  switch (o) {
    case Order::True: return "TRUE";
    case Order::False: return "FALSE";
    case Order::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

int length(const ExtAffElt& x, BruhatBase base) {
  const int n = x.n();
  const Perm wi = x.w.inverse();
  const Coord shift = base == BruhatBase::Dominant ? -1 : 1;
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      Coord c = x.nu[i] - x.nu[k];
      if (wi(i) > wi(k)) c += shift;
      len += static_cast<int>(std::llabs(c));
    }
  return len;
}

int length(const TupleElt& x, BruhatBase base) {
  int len = 0;
  for (const auto& p : x.parts) len += length(p, base);
  return len;
}

Coord coset_class(const ExtAffElt& x) { return vsum(x.nu); }

const ExtAffElt& omega_generator(int n, BruhatBase base) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, ExtAffElt> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, static_cast<int>(base));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  for (int i = 0; i < n; ++i) {
    Vec nu(n, 0);
    nu[i] = 1;
    for (const auto& w : Perm::all(n)) {
      ExtAffElt x{nu, w};
      if (length(x, base) == 0) return cache.emplace(key, x).first->second;
    }
  }
  throw std::logic_error("no length-0 element of class 1");
}

ExtAffElt omega_power(int n, BruhatBase base, Coord c) {
  // u^n is the central translation by (1,...,1).
  Coord q = c / n, r = c % n;
  if (r < 0) {
    r += n;
    q -= 1;
  }
  ExtAffElt out = ExtAffElt::translation(Vec(n, q));
  const ExtAffElt& u = omega_generator(n, base);
  for (Coord k = 0; k < r; ++k) out = out * u;
  return out;
}

ExtAffElt wa_part(const ExtAffElt& x, BruhatBase base) {
  return x * omega_power(x.n(), base, coset_class(x)).inverse();
}

OmegaDecomposition omega_decompose(const TupleElt& x, BruhatBase base) {
  std::vector<ExtAffElt> wa, om;
  for (const auto& p : x.parts) {
    ExtAffElt o = omega_power(p.n(), base, coset_class(p));
    om.push_back(o);
    wa.push_back(p * o.inverse());
  }
  return {TupleElt(std::move(wa)), TupleElt(std::move(om))};
}

ExtAffElt simple_reflection(int n, int i, BruhatBase base) {
  if (i < 0 || i >= n) throw InputError("generator index out of range");
  if (i > 0) return ExtAffElt::finite(Perm::transposition(n, i - 1, i));
  Vec theta(n, 0);
  const Coord sgn = base == BruhatBase::Dominant ? 1 : -1;
  theta[0] = sgn;
  theta[n - 1] = -sgn;
  return {theta, Perm::transposition(n, 0, n - 1)};
}

ReducedWord reduced_word(const TupleElt& x, BruhatBase base) {
  auto dec = omega_decompose(x, base);
  ReducedWord rw;
  rw.omega = dec.omega;
  for (auto cur : dec.wa.parts) {
    const int n = cur.n();
    std::vector<int> word;
    int len = length(cur, base);
    while (len > 0) {
      bool found = false;
      for (int i = 0; i < n && !found; ++i) {
        ExtAffElt s = simple_reflection(n, i, base);
        ExtAffElt next = s * cur;
        if (length(next, base) < len) {
          word.push_back(i);
          cur = next;
          --len;
          found = true;
        }
      }
      if (!found) throw std::logic_error("no left descent for element of positive length");
    }
    rw.letters.push_back(std::move(word));
  }
  return rw;
}

TupleElt evaluate_word(const ReducedWord& rw, BruhatBase base) {
  std::vector<ExtAffElt> parts;
  const int n = rw.omega.n();
  for (size_t j = 0; j < rw.letters.size(); ++j) {
    ExtAffElt acc = ExtAffElt::identity(n);
    for (int i : rw.letters[j]) acc = acc * simple_reflection(n, i, base);
    parts.push_back(acc * rw.omega[static_cast<int>(j)]);
  }
  return TupleElt(std::move(parts));
}

namespace {

// a <= b for a, b in the same W_a-coset: peel left descents of b.
bool bruhat_same_coset(ExtAffElt a, ExtAffElt b, BruhatBase base) {
  const int n = a.n();
  int la = length(a, base), lb = length(b, base);
  while (true) {
    if (la > lb) return false;
    if (lb == 0) return a == b;
    if (la == 0) return true;  // a is the Omega part shared with b
    bool found = false;
    for (int i = 0; i < n; ++i) {
      ExtAffElt s = simple_reflection(n, i, base);
      ExtAffElt sb = s * b;
      if (length(sb, base) >= lb) continue;
      ExtAffElt sa = s * a;
      int lsa = length(sa, base);
      if (lsa < la) {
        a = sa;
        la = lsa;
      }
      b = sb;
      --lb;
      found = true;
      break;
    }
    if (!found) throw std::logic_error("no left descent");
  }
}

}  // namespace

Order bruhat_leq(const ExtAffElt& a, const ExtAffElt& b, BruhatBase base) {
  if (a.n() != b.n()) throw InputError("rank mismatch");
  if (coset_class(a) != coset_class(b)) return Order::Incomparable;
  return bruhat_same_coset(a, b, base) ? Order::True : Order::False;
}

Order bruhat_leq(const TupleElt& a, const TupleElt& b, BruhatBase base) {
  require_same_shape(a.f(), a.n(), b.f(), b.n());
  for (int j = 0; j < a.f(); ++j)
    if (coset_class(a[j]) != coset_class(b[j])) return Order::Incomparable;
  for (int j = 0; j < a.f(); ++j)
    if (!bruhat_same_coset(a[j], b[j], base)) return Order::False;
  return Order::True;
}

// ---- star ----

Perm star_perm(const Perm& w) { return w.inverse(); }

PermTuple star(const PermTuple& w) {
  const int f = static_cast<int>(w.size());
  PermTuple r(f);
  for (int j = 0; j < f; ++j) r[j] = w[f - 1 - j].inverse();
  return r;
}

Weight star(const Weight& nu) {
  std::vector<Vec> c(nu.f());
  for (int j = 0; j < nu.f(); ++j) c[j] = nu[nu.f() - 1 - j];
  return Weight(std::move(c));
}

TupleElt star(const TupleElt& x) {
  // (w t_nu)* = t_{nu*} w*
  const int f = x.f();
  std::vector<ExtAffElt> p(f);
  for (int j = 0; j < f; ++j) {
    const ExtAffElt& src = x[f - 1 - j];
    p[j] = {src.right_nu(), src.w.inverse()};
  }
  return TupleElt(std::move(p));
}

bool canonical_less(const TupleElt& a, const TupleElt& b, BruhatBase base) {
  int la = length(a, base), lb = length(b, base);
  if (la != lb) return la < lb;
  return a < b;
}

// ---- formatting ----

namespace {
std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}
}  // namespace

std::string to_string(const Perm& w) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < w.size(); ++i) os << (i ? "," : "") << w(i);
  os << "]";
  return os.str();
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < w.f(); ++j) os << (j ? "," : "") << vec_str(w[j]);
  os << "]";
  return os.str();
}

std::string to_string(const ExtAffElt& x) { return "t" + vec_str(x.nu) + "*" + to_string(x.w); }

std::string to_string(const TupleElt& x) {
  std::string s = "<";
  for (int j = 0; j < x.f(); ++j) s += (j ? " | " : "") + to_string(x[j]);
  return s + ">";
}

}  // namespace weylcalc
