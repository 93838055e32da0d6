#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylcalc/cli.hpp"

using nlohmann::json;

namespace {

const std::map<std::string, std::vector<std::string>> kArgs{
    {"adm", {"lambda", "base", "x"}},
    {"bruhat", {"x", "y", "base", "relation"}},
    {"length", {"x", "base"}},
    {"star", {"x"}},
    {"dot", {"x", "lambda"}},
    {"depth", {"lambda"}},
    {"alcove", {"lambda"}},
    {"type", {"s", "mu"}},
    {"iso", {"s", "mu", "s2", "mu2", "bound"}},
    {"presentations", {"s", "mu", "bound"}},
    {"genericity", {"s", "mu"}},
    {"jh", {"s", "mu", "bound"}},
    {"wq", {"rho-s", "rho-mu"}},
    {"wobv", {"rho-s", "rho-mu"}},
    {"shape", {"rho-s", "rho-mu", "s", "mu", "bound"}},
    {"obvtype", {"rho-s", "rho-mu", "w"}},
    {"wqtau", {"rho-s", "rho-mu", "s", "mu", "bound"}},
    {"equiv-check", {"rho-s", "rho-mu", "s", "mu"}},
    {"eliminate", {"rho-s", "rho-mu", "lambda"}},
    {"phimod", {"x"}},
    {"suite", {"name", "max-len"}},
};

std::string key_of(std::string flag) {
  for (auto& c : flag)
    if (c == '-') c = '_';
  return flag;
}

// Flag values are JSON; anything that does not parse is taken as a string.
json value_of(const std::string& text) {
  json v = json::parse(text, nullptr, false);
  return v.is_discarded() ? json(text) : v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics for weight elimination in GL_n"};
  app.require_subcommand(1);

  std::string job_file;
  auto* run = app.add_subcommand("run", "Run a JSON job document (file or '-')");
  run->add_option("job", job_file, "job document")->required();

  struct Sub {
    CLI::App* app;
    int n = 2, f = 1;
    long long p = 5;
    long long seed = 0;
    std::map<std::string, std::string> values;
  };
  std::map<std::string, Sub> subs;
  for (const auto& [name, keys] : kArgs) {
    Sub& s = subs[name];
    s.app = app.add_subcommand(name);
    s.app->add_option("--n", s.n, "rank");
    s.app->add_option("--f", s.f, "number of embeddings");
    s.app->add_option("--p", s.p, "residue characteristic");
    s.app->add_option("--seed", s.seed, "seed for randomized suites");
    for (const auto& k : keys) s.app->add_option("--" + k, s.values[k], k + " (JSON)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cout << json{{"schema", weylcalc::cli::kSchema}, {"error", {{"kind", "input"}, {"message", e.what()}}}}.dump()
              << "\n";
    return weylcalc::cli::kInputError;
  }

  json job;
  if (run->parsed()) {
    json parsed;
    if (job_file == "-") {
      parsed = json::parse(std::cin, nullptr, false);
    } else {
      std::ifstream in(job_file);
      parsed = in ? json::parse(in, nullptr, false) : json(json::value_t::discarded);
    }
    if (parsed.is_discarded()) {
      std::cout << json{{"schema", weylcalc::cli::kSchema},
                        {"error", {{"kind", "input"}, {"message", "job document is not valid JSON"}}}}
                       .dump()
                << "\n";
      return weylcalc::cli::kInputError;
    }
    job = parsed;
  } else {
    for (auto& [name, s] : subs) {
      if (!s.app->parsed()) continue;
      json args = json::object();
      for (const auto& [k, text] : s.values)
        if (s.app->count("--" + k)) args[key_of(k)] = value_of(text);
      if (name == "suite" && s.app->count("--n")) args["n"] = s.n;
      job = {{"command", name}, {"context", {{"n", s.n}, {"f", s.f}, {"p", s.p}}}, {"arguments", args}};
      if (s.app->count("--seed")) job["seed"] = s.seed;
    }
  }
  return weylcalc::cli::run(job, std::cout);
}
