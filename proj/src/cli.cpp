#include "weylcalc/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <unistd.h>

#include "support/suites.hpp"
#include "weylcalc/admissibility.hpp"
#include "weylcalc/alcove_geometry.hpp"
#include "weylcalc/phi_modules.hpp"
#include "weylcalc/shape_engine.hpp"

namespace weylcalc::cli {

using nlohmann::json;

namespace {

constexpr int kVersion = 1;

// ---- decoding ----

struct Args {
  const json& a;
  GroupContext ctx;

  const json& need(const char* key) const {
    if (!a.contains(key)) throw InputError(std::string("missing argument '") + key + "'");
    return a.at(key);
  }
  bool has(const char* key) const { return a.contains(key); }

  static Vec vec(const json& j, int n) {
    if (!j.is_array()) throw InputError("expected an integer array");
    Vec v;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InputError("expected integers");
      v.push_back(x.get<Coord>());
    }
    if (n >= 0 && static_cast<int>(v.size()) != n) throw InputError("vector of wrong length");
    return v;
  }
  Weight weight(const char* key) const {
    const json& j = need(key);
    if (!j.is_array() || static_cast<int>(j.size()) != ctx.f) throw InputError(std::string(key) + ": expected f rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec(r, ctx.n));
    return Weight(std::move(rows));
  }
  Perm perm(const json& j) const {
    Vec v = vec(j, ctx.n);
    return Perm(std::vector<int>(v.begin(), v.end()));
  }
  PermTuple perms(const char* key) const {
    const json& j = need(key);
    if (!j.is_array() || static_cast<int>(j.size()) != ctx.f) throw InputError(std::string(key) + ": expected f rows");
    PermTuple s;
    for (const auto& r : j) s.push_back(perm(r));
    return s;
  }
  TupleElt elt(const char* key) const {
    const json& j = need(key);
    if (!j.is_array() || static_cast<int>(j.size()) != ctx.f) throw InputError(std::string(key) + ": expected f parts");
    std::vector<ExtAffElt> parts;
    for (const auto& e : j) {
      if (!e.is_object() || !e.contains("nu") || !e.contains("w")) throw InputError("element parts are {nu, w}");
      parts.push_back({vec(e.at("nu"), ctx.n), perm(e.at("w"))});
    }
    return TupleElt(std::move(parts));
  }
  int integer(const char* key, int dflt) const {
    if (!has(key)) return dflt;
    if (!a.at(key).is_number_integer()) throw InputError(std::string(key) + ": expected an integer");
    return a.at(key).get<int>();
  }
  BruhatBase base() const {
    std::string b = has("base") ? a.at("base").get<std::string>() : "dominant";
    if (b == "dominant") return BruhatBase::Dominant;
    if (b == "antidominant") return BruhatBase::Antidominant;
    throw InputError("base must be 'dominant' or 'antidominant'");
  }
  TamePair pair(const char* s, const char* mu) const { return {perms(s), weight(mu)}; }
  RhoBar rho() const { return RhoBar::make(pair("rho_s", "rho_mu"), ctx); }
};

// ---- encoding ----

json enc(const Vec& v) { return json(v); }
json enc(const Weight& w) {
  json j = json::array();
  for (const auto& r : w.coords()) j.push_back(r);
  return j;
}
json enc(const Perm& w) { return json(w.images()); }
json enc(const PermTuple& s) {
  json j = json::array();
  for (const auto& w : s) j.push_back(enc(w));
  return j;
}
json enc(const ExtAffElt& x) { return {{"nu", x.nu}, {"w", x.w.images()}}; }
json enc(const TupleElt& x) {
  json j = json::array();
  for (const auto& p : x.parts) j.push_back(enc(p));
  return j;
}
json enc(const TamePair& p) { return {{"s", enc(p.s)}, {"mu", enc(p.mu)}}; }
json enc(const InertialType& t) {
  json ex = json::array();
  for (const auto& e : t.exponents) ex.push_back(e.str());
  return {{"p", t.p}, {"f", t.f}, {"r", t.r}, {"modulus", t.modulus.str()}, {"exponents", ex}};
}
json enc(const std::vector<SerreWeight>& ws) {
  json j = json::array();
  for (const auto& w : ws) j.push_back(enc(w.rep));
  return j;
}
const char* enc(Order o) { return to_string(o); }

struct Result {
  json value;
  int status = kOk;
};

using Handler = std::function<Result(const Args&, const json& job)>;

Result cmd_adm(const Args& a, const json&) {
  const Weight lam = a.weight("lambda");
  const BruhatBase base = a.base();
  AdmSet set = enumerate_adm(lam, base);
  auto els = set.elements();
  std::sort(els.begin(), els.end(), [&](const auto& x, const auto& y) { return canonical_less(x, y, base); });
  json list = json::array();
  for (const auto& x : els) list.push_back(enc(x));
  Result r{{{"size", set.size()}, {"elements", list}}};
  if (a.has("x")) {
    bool in = is_admissible(a.elt("x"), lam, base);
    r.value["member"] = in;
    if (!in) r.status = kFalse;
  }
  return r;
}

Result cmd_bruhat(const Args& a, const json&) {
  TupleElt x = a.elt("x"), y = a.elt("y");
  std::string rel = a.has("relation") ? a.a.at("relation").get<std::string>() : "bruhat";
  Order o;
  if (rel == "bruhat") o = bruhat_leq(x, y, a.base());
  else if (rel == "up") o = up_leq_elts(x, y, a.ctx);
  else throw InputError("relation must be 'bruhat' or 'up'");
  return {{{"relation", rel}, {"leq", enc(o)}}, o == Order::True ? kOk : kFalse};
}

Result cmd_length(const Args& a, const json&) {
  TupleElt x = a.elt("x");
  BruhatBase base = a.base();
  ReducedWord rw = reduced_word(x, base);
  return {{{"length", length(x, base)}, {"word", rw.letters}, {"omega", enc(rw.omega)}}};
}

Result cmd_star(const Args& a, const json&) { return {{{"star", enc(star(a.elt("x")))}}}; }

Result cmd_dot(const Args& a, const json&) { return {{{"dot", enc(dot(a.elt("x"), a.weight("lambda"), a.ctx))}}}; }

Result cmd_depth(const Args& a, const json&) {
  Weight lam = a.weight("lambda");
  return {{{"depth", depth(lam, a.ctx)}, {"in_C0", in_base_alcove(lam, a.ctx)}}};
}

Result cmd_alcove(const Args& a, const json&) {
  AlcoveAddress ad = alcove_of(a.weight("lambda"), a.ctx);
  return {{{"floors", ad.floors}, {"element", enc(ad.element)}}};
}

Result cmd_type(const Args& a, const json&) {
  InertialType t = type_of(a.pair("s", "mu"), a.ctx);
  return {{{"type", enc(t)}, {"regular", is_regular_type(t)}}};
}

Result cmd_iso(const Args& a, const json&) {
  TamePair p1 = a.pair("s", "mu"), p2 = a.pair("s2", "mu2");
  bool iso = type_iso(type_of(p1, a.ctx), type_of(p2, a.ctx));
  json v{{"iso", iso}};
  if (a.has("bound")) {
    auto w = conjugation_witness(p1, p2, a.integer("bound", 1), a.ctx);
    v["witness"] = w ? json{{"nu", enc(w->nu)}, {"sigma", enc(w->sigma)}} : json(nullptr);
  }
  return {v, iso ? kOk : kFalse};
}

Result cmd_presentations(const Args& a, const json&) {
  json list = json::array();
  for (const auto& p : lowest_alcove_presentations(a.pair("s", "mu"), a.integer("bound", a.ctx.n), a.ctx))
    list.push_back(enc(p));
  return {{{"presentations", list}}};
}

Result cmd_genericity(const Args& a, const json&) { return {{{"genericity", genericity(a.pair("s", "mu"), a.ctx)}}}; }

Result cmd_jh(const Args& a, const json&) {
  return {{{"weights", enc(jh_factors(a.perms("s"), a.weight("mu"), a.ctx, a.integer("bound", -1)))}}};
}

Result cmd_wq(const Args& a, const json&) { return {{{"weights", enc(w_question(a.rho(), a.ctx))}}}; }

Result cmd_wobv(const Args& a, const json&) {
  json list = json::array();
  for (const auto& [s, F] : w_obv(a.rho(), a.ctx)) list.push_back({{"w", enc(s)}, {"weight", enc(F.rep)}});
  return {{{"obvious", list}}};
}

TamePair compat_of(const Args& a, const RhoBar& rho) {
  auto c = compatible_presentation(rho, a.pair("s", "mu"), a.integer("bound", a.ctx.n), a.ctx);
  if (!c) throw PreconditionError("compatible-presentation", "no compatible presentation within the bound");
  return *c;
}

Result cmd_shape(const Args& a, const json&) {
  RhoBar rho = a.rho();
  TamePair c = compat_of(a, rho);
  TupleElt sh = shape(rho, c, a.ctx);
  return {{{"presentation", enc(c)},
           {"shape", enc(sh)},
           {"admissible", is_admissible(sh, eta(a.ctx), BruhatBase::Dominant)}}};
}

Result cmd_obvtype(const Args& a, const json&) {
  RhoBar rho = a.rho();
  TamePair t = obvious_type(rho, a.perms("w"), a.ctx);
  return {{{"type", enc(t)}, {"shape", enc(shape(rho, t, a.ctx))}}};
}

Result cmd_wqtau(const Args& a, const json&) {
  RhoBar rho = a.rho();
  TamePair c = compat_of(a, rho);
  WqTau w = w_question_tau(rho, c, a.ctx);
  return {{{"presentation", enc(c)},
           {"by_intersection", enc(w.by_intersection)},
           {"by_factorization", enc(w.by_factorization)},
           {"agree", w.agree()}},
          w.agree() ? kOk : kFalse};
}

Result cmd_equiv(const Args& a, const json&) {
  RhoBar rho = a.rho();
  EquivalenceReport r = check_equivalences(rho, a.pair("s", "mu"), a.ctx);
  json v{{"compatible", r.compatible},
         {"admissible", r.admissible},
         {"wq_nonempty", r.wq_nonempty},
         {"obv_meets_jh", r.obv_meets_jh},
         {"consistent", r.consistent()}};
  if (r.compat) v["presentation"] = enc(*r.compat);
  if (r.shape) v["shape"] = enc(*r.shape);
  return {v, r.consistent() ? kOk : kFalse};
}

Result cmd_eliminate(const Args& a, const json&) {
  EliminationVerdict v = elimination_cover(a.rho(), a.weight("lambda"), a.ctx);
  json j{{"covered", v.covered}, {"membership_verified", v.membership_verified}};
  if (v.witness) {
    j["witness_s"] = enc(*v.witness);
    j["witness_type"] = enc(*v.witness_type);
    j["witness_shape"] = enc(*v.witness_shape);
  }
  return {j, v.covered ? kOk : kFalse};
}

Result cmd_phimod(const Args& a, const json&) {
  TupleElt x = a.elt("x");
  MonomialFrobenius m = from_element(x, a.ctx.p);
  json blocks = json::array();
  for (const auto& b : m.blocks) blocks.push_back({{"perm", enc(b.perm)}, {"exps", b.exps}});
  bool ok = verify_galois_type(x, a.ctx);
  return {{{"blocks", blocks}, {"type", enc(inertial_type_of(m))}, {"matches_type", ok}}, ok ? kOk : kFalse};
}

Result cmd_suite(const Args& a, const json& job) {
  suites::Options opt;
  if (job.contains("seed") && !job.at("seed").is_null()) opt.seed = job.at("seed").get<std::uint64_t>();
  opt.max_len = a.integer("max_len", opt.max_len);
  opt.n = a.integer("n", 0);
  std::string name = a.need("name").get<std::string>();
  std::vector<std::string> todo;
  if (name == "all") todo = suites::names();
  else todo.push_back(name);
  json list = json::array();
  bool all = true;
  for (const auto& nm : todo) {
    suites::Outcome o;
    try {
      o = suites::run(nm, opt);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    list.push_back({{"name", o.name}, {"pass", o.pass}, {"detail", o.detail}});
    all = all && o.pass;
  }
  return {{{"suites", list}, {"pass", all}}, all ? kOk : kFalse};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"adm", cmd_adm},           {"bruhat", cmd_bruhat},     {"length", cmd_length},
      {"star", cmd_star},         {"dot", cmd_dot},           {"depth", cmd_depth},
      {"alcove", cmd_alcove},     {"type", cmd_type},         {"iso", cmd_iso},
      {"presentations", cmd_presentations},                   {"genericity", cmd_genericity},
      {"jh", cmd_jh},             {"wq", cmd_wq},             {"wobv", cmd_wobv},
      {"shape", cmd_shape},       {"obvtype", cmd_obvtype},   {"wqtau", cmd_wqtau},
      {"equiv-check", cmd_equiv}, {"eliminate", cmd_eliminate}, {"phimod", cmd_phimod},
      {"suite", cmd_suite},
  };
  return h;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << "\n"; }

json error_doc(const json& job, const std::string& kind, const std::string& msg, const std::string& hyp = "") {
  json e{{"kind", kind}, {"message", msg}};
  if (!hyp.empty()) e["hypothesis"] = hyp;
  json d{{"schema", kSchema}, {"error", e}};
  if (job.is_object() && job.contains("command")) d["command"] = job.at("command");
  return d;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const char* const* command_names() {
  static const char* const names[] = {"adm",        "bruhat", "length", "star",   "dot",     "depth",       "alcove",
                                      "type",       "iso",    "presentations", "genericity", "jh", "wq", "wobv",
                                      "shape",      "obvtype", "wqtau", "equiv-check", "eliminate", "phimod", "suite",
                                      nullptr};
  return names;
}

int run_uncached(const json& job, std::ostream& out) {
  try {
    if (!job.is_object()) throw InputError("job must be an object");
    if (!job.contains("command") || !job.at("command").is_string()) throw InputError("missing command");
    const std::string cmd = job.at("command").get<std::string>();
    auto it = handlers().find(cmd);
    if (it == handlers().end()) throw InputError("unknown command '" + cmd + "'");
    const json ctxj = job.value("context", json::object());
    GroupContext ctx = GroupContext::make(ctxj.value("n", 2), ctxj.value("f", 1), ctxj.value("p", Coord{5}));
    static const json empty = json::object();
    const json& args = job.contains("arguments") ? job.at("arguments") : empty;
    if (!args.is_object()) throw InputError("arguments must be an object");
    Result r = it->second(Args{args, ctx}, job);
    json doc{{"schema", kSchema},
             {"command", cmd},
             {"context", {{"n", ctx.n}, {"f", ctx.f}, {"p", ctx.p}}},
             {"result", r.value},
             {"status", r.status}};
    emit(out, doc);
    return r.status;
  } catch (const PreconditionError& e) {
    emit(out, error_doc(job, "precondition", e.what(), e.hypothesis()));
    return kPrecondition;
  } catch (const InputError& e) {
    emit(out, error_doc(job, "input", e.what()));
    return kInputError;
  } catch (const json::exception& e) {
    emit(out, error_doc(job, "input", e.what()));
    return kInputError;
  }
}

int run(const json& job, std::ostream& out) {
  const char* dir = std::getenv("WEYLCALC_CACHE_DIR");
  if (!dir || !*dir) return run_uncached(job, out);
  namespace fs = std::filesystem;
  const std::string key_src = std::to_string(kVersion) + "|" + job.dump();
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key_src)));
  const fs::path path = fs::path(dir) / name;
  {
    std::ifstream in(path);
    json cached;
    if (in && (cached = json::parse(in, nullptr, false), !cached.is_discarded()) && cached.value("key", "") == key_src) {
      out << cached.at("output").get<std::string>();
      return cached.at("status").get<int>();
    }
  }
  std::ostringstream buf;
  int status = run_uncached(job, buf);
  out << buf.str();
  if (status == kInputError) return status;
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream o(tmp);
    o << json{{"key", key_src}, {"status", status}, {"output", buf.str()}}.dump();
    if (!o) return status;
  }
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return status;
}

}  // namespace weylcalc::cli
