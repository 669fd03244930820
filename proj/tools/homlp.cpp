// homlp: s(M,N), chi_H(G) and the verification suite from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homlp/cache.hpp"
#include "homlp/graph_io.hpp"
#include "homlp/hcuts.hpp"
#include "homlp/suite.hpp"
#include "homlp/svalue.hpp"
#include "homlp/symmetry.hpp"
#include "json.hpp"

using namespace homlp;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitSuite = 4;

// flags win over HOMLP_BUDGET, which wins over the library default
std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HOMLP_BUDGET")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("HOMLP_BUDGET is not a positive integer", 0);
  }
  return kDefaultMapBudget;
}

int fail(const char* kind, const std::string& message, int code, std::optional<std::uint64_t> extra = {}) {
  json j;
  j["schema"] = "homlp/1";
  j["error"] = kind;
  j["message"] = message;
  if (extra) j[code == kExitBudget ? "limit" : "position"] = *extra;
  std::cout << j.dump() << '\n';
  return code;
}

struct CacheFlags {
  std::string dir = ".homlp-cache";
  bool off = false;
  bool audit = false;
};

void add_cache_flags(CLI::App* cmd, CacheFlags& c) {
  cmd->add_option("--cache-dir", c.dir, "Result cache directory");
  cmd->add_flag("--no-cache", c.off, "Compute without reading or writing the cache");
  cmd->add_flag("--audit", c.audit, "Recompute every tenth cache hit and compare");
}

std::string cached(const CacheFlags& c, const InstanceKey& key, const std::function<std::string()>& compute) {
  if (c.off) return compute();
  ResultCache cache(c.dir, c.audit);
  return cache.fetch(key, compute);
}

std::string s_command(const std::string& m_text, const std::string& n_text, const std::string& method,
                      std::uint64_t budget) {
  Graph m = parse_graph(m_text), n = parse_graph(n_text);
  if (method == "generic") {
    json j;
    j["schema"] = "homlp/1";
    j["M"] = m_text;
    j["N"] = n_text;
    j["s"] = s_value_generic(m, n, 64, budget).str();
    j["method"] = "generic";
    return j.dump();
  }
  SValueOptions opt;
  opt.budget = budget;
  if (method == "exhaustive") opt.method = SMethod::exhaustive;
  else if (method == "congen") opt.method = SMethod::congen;
  return svalue_json(m_text, n_text, s_value(m, n, opt), false).dump();
}

std::string chi_command(const std::string& h_text, const std::string& g_text, std::vector<std::string> methods,
                        std::uint64_t budget) {
  Graph h = parse_graph(h_text), g = parse_graph(g_text);
  if (methods.empty()) methods = {"s"};
  json j;
  j["schema"] = "homlp/1";
  j["H"] = h_text;
  j["G"] = g_text;
  json per = json::object();
  for (const auto& method : methods) {
    std::string value;
    if (method == "s") {
      SValueOptions opt;
      opt.budget = budget;
      auto v = chi_H_via_s(g, h, opt);
      value = v ? v->str() : "infinite";
    } else if (method == "cover") {
      HCutOptions opt;
      opt.node_budget = budget;
      auto c = chi_H_cover(g, h, opt);
      if (c.finite && !c.verified) throw Error("cover certificate failed verification");
      value = c.finite ? c.value.str() : "infinite";
    } else {
      auto v = chi_f(hypergraph_reformulation(g, h));
      value = v ? v->str() : "infinite";
    }
    per[method] = value;
  }
  std::string first = per[methods.front()].get<std::string>();
  bool agree = true;
  for (const auto& [name, v] : per.items()) agree = agree && v.get<std::string>() == first;
  j["chi"] = agree ? first : "disagree";
  j["methods"] = per;
  j["agree"] = agree;
  return j.dump();
}

std::pair<json, std::string> intervals_command(int k_max, bool check, std::uint64_t budget) {
  json j;
  j["schema"] = "homlp/1";
  j["intervals"] = json::array();
  std::string csv = "r_low,r_high,s_num,s_den\n";
  // ascending r: the interval for k_max comes first
  for (int k = k_max; k >= 2; --k) {
    Rational low(2 * k + 1, k), high(4 * k, 2 * k - 1), s(2 * k, 2 * k + 1);
    json row;
    row["k"] = k;
    row["r_low"] = low.str();
    row["r_high"] = high.str();
    row["s"] = s.str();
    if (check) {
      SValueOptions opt;
      opt.budget = budget;
      Rational at_low = s_value(complete(2), circular_complete(2 * k + 1, k), opt).s;
      Rational at_high = s_value(complete(2), circular_complete(4 * k, 2 * k - 1), opt).s;
      row["verified"] = at_low == s && at_high == s;
    }
    j["intervals"].push_back(row);
    csv += low.str() + "," + high.str() + "," + s.num().get_str() + "," + s.den().get_str() + "\n";
  }
  return {j, csv};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact s(M,N) and chi_H(G) by orbit LPs and H-cuts"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--budget", budget_flag, "Enumeration budget (overrides HOMLP_BUDGET)");

  CacheFlags cache_flags;

  auto* s_cmd = app.add_subcommand("s", "s(M,N) by the orbit LP");
  std::string m_text, n_text, s_method = "auto";
  s_cmd->add_option("--M", m_text, "Target graph M")->required();
  s_cmd->add_option("--N", n_text, "Source graph N")->required();
  s_cmd->add_option("--method", s_method, "auto, exhaustive, congen or generic")
      ->check(CLI::IsMember({"auto", "exhaustive", "congen", "generic"}));
  add_cache_flags(s_cmd, cache_flags);

  auto* chi_cmd = app.add_subcommand("chi", "chi_H(G)");
  std::string h_text, g_text;
  std::vector<std::string> chi_methods;
  chi_cmd->add_option("--H", h_text, "Graph H")->required();
  chi_cmd->add_option("--G", g_text, "Graph G")->required();
  chi_cmd->add_option("--method", chi_methods, "s, cover or hyper; repeat to cross-check")
      ->check(CLI::IsMember({"s", "cover", "hyper"}))
      ->delimiter(',');
  add_cache_flags(chi_cmd, cache_flags);

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  std::string suite = "core";
  bool with_elapsed = false;
  verify_cmd->add_option("--suite", suite, "core, long or all")->check(CLI::IsMember({"core", "long", "all"}));
  verify_cmd->add_flag("--elapsed", with_elapsed, "Include timings (report bytes then vary run to run)");

  auto* int_cmd = app.add_subcommand("intervals", "Intervals on which s(K2, K_r) is constant");
  int k_max = 4;
  std::string csv_path;
  bool csv_only = false, no_check = false;
  int_cmd->add_option("--k-max", k_max, "Largest k")->check(CLI::Range(2, 64));
  int_cmd->add_option("--csv", csv_path, "Also write the CSV table to this file");
  int_cmd->add_flag("--csv-stdout", csv_only, "Print only the CSV table");
  int_cmd->add_flag("--no-check", no_check, "Skip recomputing s at the interval ends");

  auto* orb_cmd = app.add_subcommand("orbits", "Edge orbits of a graph");
  std::string orbit_text;
  orb_cmd->add_option("--N", orbit_text, "Graph")->required();

  auto* ref_cmd = app.add_subcommand("refute", "Test 1/chi_q(G) against bipartite densities");
  std::string ref_text;
  ref_cmd->add_option("--G", ref_text, "Graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  try {
    const std::uint64_t budget = resolve_budget(budget_flag);
    if (s_cmd->parsed()) {
      // echo the canonical text so a hit and a fresh run print the same bytes
      m_text = canonical_expression(m_text);
      n_text = canonical_expression(n_text);
      InstanceKey key{"s", {{"M", m_text},
                            {"N", n_text},
                            {"method", s_method},
                            {"budget", budget}}};
      std::cout << cached(cache_flags, key, [&] { return s_command(m_text, n_text, s_method, budget); }) << '\n';
    } else if (chi_cmd->parsed()) {
      h_text = canonical_expression(h_text);
      g_text = canonical_expression(g_text);
      InstanceKey key{"chi", {{"H", h_text},
                              {"G", g_text},
                              {"methods", chi_methods},
                              {"budget", budget}}};
      std::cout << cached(cache_flags, key, [&] { return chi_command(h_text, g_text, chi_methods, budget); })
                << '\n';
    } else if (verify_cmd->parsed()) {
      SuiteOptions opt;
      opt.budget = budget;
      auto run = run_suite(suite, opt);
      auto report = report_json(run.findings, with_elapsed);
      report["suite"] = suite;
      json crit = json::object();
      bool ok = true;
      for (const auto& [c, pass] : run.criterion_ok) {
        crit[std::to_string(c)] = pass;
        ok = ok && pass;
      }
      report["criteria"] = crit;
      std::cout << report.dump(2) << '\n';
      if (!ok) return kExitSuite;
    } else if (int_cmd->parsed()) {
      auto [j, csv] = intervals_command(k_max, !no_check, budget);
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        out << csv;
        if (!out) throw Error("cannot write " + csv_path);
      }
      if (csv_only) std::cout << csv;
      else std::cout << j.dump(2) << '\n';
    } else if (orb_cmd->parsed()) {
      std::cout << orbit_json(edge_orbits(parse_graph(orbit_text))).dump() << '\n';
    } else if (ref_cmd->parsed()) {
      std::cout << density_json(refute_density_conjecture(parse_graph(ref_text), ref_text)).dump() << '\n';
    }
  } catch (const ParseError& e) {
    return fail("parse", e.what(), kExitParse, e.position());
  } catch (const BudgetExceeded& e) {
    return fail("budget", e.what(), kExitBudget, e.limit());
  } catch (const DomainError& e) {
    return fail("domain", e.what(), kExitParse);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return 0;
}
