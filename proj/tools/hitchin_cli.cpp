// Command-line surface over the library: stratification tables, C*-limit
// reports, wobbly-locus search, and the invariant self-check suite.
//
// Exit codes: 0 ok, 1 invariant failure, 2 config error, 3 sampling
// failure, 4 bad request.

#include <future>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitchin/selfcheck.hpp"

using namespace hitchin;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSampling = 3;
constexpr int kExitBadRequest = 4;

struct CommonOpts {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<std::string> format;
  bool parallel = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "path to the run configuration")
      ->required();
  cmd->add_option("--seed", o.seed, "override the config seed");
  cmd->add_option("--format", o.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
}

RunConfig load_config(const CommonOpts& o) {
  RunConfig cfg = parse_config_file(o.config_path);
  if (o.seed) cfg.seed = *o.seed;
  if (o.format) {
    if (*o.format == "json") cfg.format = OutputFormat::Json;
    else if (*o.format == "csv") cfg.format = OutputFormat::Csv;
    else cfg.format = OutputFormat::Table;
  }
  return cfg;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string limit_cell(const json& rec) {
  if (rec["limit"].is_string()) return "semistable";
  std::vector<std::string> phi = rec["limit"]["phi_divisor"];
  return "L1^" + std::to_string(rec["limit"]["L1_deg"].get<int64_t>()) + " L2^" +
         std::to_string(rec["limit"]["L2_deg"].get<int64_t>()) + " phi=[" +
         join(phi, " ") + "]";
}

// one row per stratum, evaluated at the distinguished alpha = 0 point (the
// point of V(D) that also lies in the deepest V'-stratum)
std::vector<json> strata_rows(const Instance& inst, const BasePoint& bp,
                              bool parallel) {
  auto strata = enumerate_strata(bp);
  const FieldCtx& F = inst.curve->field();

  auto row_of = [&](size_t i) {
    auto& [D, dim] = strata[i];
    std::map<PointX, Fq> alpha;
    for (const PointX& P : D.support()) alpha.emplace(P, Fq::zero(F));
    return stratum_record(make_stratum_point(bp, *inst.M, D, alpha));
  };

  std::vector<json> rows(strata.size());
  if (parallel) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w)
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (size_t i = w; i < strata.size(); i += workers) rows[i] = row_of(i);
      }));
    for (auto& t : tasks) t.get();
  } else {
    for (size_t i = 0; i < strata.size(); ++i) rows[i] = row_of(i);
  }
  return rows;
}

void print_rows(const std::vector<json>& rows, OutputFormat fmt, bool limits_only) {
  if (fmt == OutputFormat::Json) {
    json out = json::array();
    for (const json& r : rows) {
      if (!limits_only) {
        out.push_back(r);
      } else {
        out.push_back(json{{"D", r["D"]}, {"limit", r["limit"]}, {"wobbly", r["wobbly"]}});
      }
    }
    std::cout << out.dump(2) << "\n";
    return;
  }

  auto cells = [&](const json& r) {
    std::vector<std::string> D = r["D"], Dp = r["Dprime"];
    std::string verdict = r["verdict"];
    if (r.contains("side")) verdict += "(" + r["side"].get<std::string>() + ")";
    std::vector<std::string> c;
    c.push_back("[" + join(D, " ") + "]");
    if (!limits_only) {
      c.push_back(std::to_string(r["dim"].get<int64_t>()));
      c.push_back("[" + join(Dp, " ") + "]");
      c.push_back(verdict);
    }
    c.push_back(limit_cell(r));
    c.push_back(r["wobbly"].get<bool>() ? "wobbly" : "very-stable");
    return c;
  };
  std::vector<std::string> header;
  if (limits_only) header = {"D", "limit", "verdict"};
  else header = {"D", "dim", "Dprime", "stability", "limit", "verdict"};

  std::vector<std::vector<std::string>> table{header};
  for (const json& r : rows) table.push_back(cells(r));

  if (fmt == OutputFormat::Csv) {
    for (auto& row : table) std::cout << join(row, ",") << "\n";
    return;
  }
  std::vector<size_t> width(header.size(), 0);
  for (auto& row : table)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (auto& row : table) {
    for (size_t i = 0; i < row.size(); ++i)
      std::cout << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
    std::cout << "\n";
  }
}

int run_strata(const CommonOpts& o, bool limits_only) {
  RunConfig cfg = load_config(o);
  Instance inst = build_instance(cfg);
  BasePoint bp = configured_base_point(inst, cfg);
  print_rows(strata_rows(inst, bp, o.parallel), cfg.format, limits_only);
  return kExitOk;
}

int run_wobbly_search(const CommonOpts& o, std::optional<int> delta_flag,
                      std::optional<int64_t> budget_flag) {
  RunConfig cfg = load_config(o);
  Instance inst = build_instance(cfg);
  std::optional<int> delta = delta_flag ? delta_flag : cfg.delta;
  int64_t budget = budget_flag ? *budget_flag : cfg.budget;
  if (!delta) {
    std::cerr << "wobbly-search needs --delta (or delta in the config)\n";
    return kExitBadRequest;
  }
  if (!delta_constraints(inst.curve->genus()).is_admissible(*delta)) {
    std::cerr << "delta " << *delta << " is not admissible for genus "
              << inst.curve->genus() << "\n";
    return kExitBadRequest;
  }
  WobblySearchResult res = search_wobbly(*inst.cover, *delta, cfg.seed, budget);
  json out;
  out["delta"] = *delta;
  out["seed"] = cfg.seed;
  out["budget"] = budget;
  out["examined"] = res.examined;
  out["skipped_out_of_field"] = res.skipped_out_of_field;
  if (res.budget_exhausted) out["warning"] = "budget exhausted; partial results";
  out["accepts"] = json::array();
  for (const WobblyDatum& w : res.accepts) out["accepts"].push_back(wobbly_datum_record(w));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_selfcheck(const CommonOpts& o) {
  RunConfig cfg = load_config(o);
  Instance inst = build_instance(cfg);
  SelfCheckReport rep = run_selfcheck(inst, cfg.seed);
  for (const CheckGroup& g : rep.groups) {
    std::cout << (g.passed ? "PASS" : "FAIL") << "  " << g.name << "  (" << g.checks
              << " checks)";
    if (!g.passed) std::cout << "  " << g.detail;
    std::cout << "\n";
  }
  std::cout << (rep.all_passed() ? "self-check passed" : "self-check FAILED") << "\n";
  return rep.all_passed() ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with rank-2 Higgs bundle strata on hyperelliptic curves"};
  app.require_subcommand(1);

  CommonOpts strata_o, limits_o, wobbly_o, self_o;
  std::optional<int> delta_flag;
  std::optional<int64_t> budget_flag;

  CLI::App* strata_cmd = app.add_subcommand("strata", "stratification table over a sampled base point");
  add_common(strata_cmd, strata_o);
  strata_cmd->add_flag("--parallel", strata_o.parallel, "enumerate strata on worker threads");

  CLI::App* limits_cmd = app.add_subcommand("limits", "limit columns of the stratification table");
  add_common(limits_cmd, limits_o);
  limits_cmd->add_flag("--parallel", limits_o.parallel, "enumerate strata on worker threads");

  CLI::App* wobbly_cmd = app.add_subcommand("wobbly-search", "search the wobbly locus at a given delta");
  add_common(wobbly_cmd, wobbly_o);
  wobbly_cmd->add_option("--delta", delta_flag, "target delta (even, within range)");
  wobbly_cmd->add_option("--budget", budget_flag, "membership-check budget");

  CLI::App* self_cmd = app.add_subcommand("selfcheck", "run every module's invariant suite");
  add_common(self_cmd, self_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (strata_cmd->parsed()) return run_strata(strata_o, false);
    if (limits_cmd->parsed()) return run_strata(limits_o, true);
    if (wobbly_cmd->parsed()) return run_wobbly_search(wobbly_o, delta_flag, budget_flag);
    if (self_cmd->parsed()) return run_selfcheck(self_o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NotNodalIntegral& e) {
    std::cerr << "sampling failure: " << e.what() << "\n";
    return kExitSampling;
  } catch (const BudgetExhausted& e) {
    std::cerr << "sampling failure: " << e.what() << "\n";
    return kExitSampling;
  } catch (const Error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitBadRequest;
}
