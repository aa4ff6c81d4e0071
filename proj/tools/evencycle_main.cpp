#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "evencycle/decompose.hpp"
#include "evencycle/generate.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/listing.hpp"
#include "evencycle/lp.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/report.hpp"
#include "evencycle/supersat.hpp"

namespace {

using namespace evencycle;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct CommonOpts {
  std::string input;
  std::string format = "text";
  bool timings = false;
  unsigned threads = 0;
};

struct LoadedInput {
  Graph graph;
  u64 digest = 0;
};

LoadedInput load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();
  std::istringstream stream(bytes);
  return {Graph::load_edge_list(stream), fnv1a64(bytes)};
}

void emit(const RunReport& report, const std::string& format) {
  if (format == "json")
    std::cout << to_json(report);
  else if (format == "csv")
    std::cout << to_csv(report);
  else
    std::cout << to_text(report);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

Rat parse_epsilon(const std::string& text) {
  auto eps = parse_rational(text);
  if (!eps || *eps <= 0 || *eps >= 1)
    throw InvalidArgumentError("epsilon must be a rational in (0,1), got '" + text + "'");
  return *eps;
}

int cmd_detect(const std::string& input, int k, u64 seed, const CommonOpts& opts) {
  auto t0 = std::chrono::steady_clock::now();
  auto loaded = load_input(input);
  auto result = detect_c2k(loaded.graph, k, seed);
  RunReport rep;
  rep.command = "detect";
  rep.add("input", input);
  rep.add("input-digest", digest_str(loaded.digest));
  rep.add("n", u64{loaded.graph.n()});
  rep.add("m", loaded.graph.m());
  rep.add("k", u64(k));
  rep.add("seed", seed);
  rep.add("epsilon", Rat(1, 1000000000));
  rep.add("budget", result.budget);
  rep.add("r", result.r);
  rep.add("result", std::string(result.cycle ? "found" : "none"));
  if (result.cycle) rep.add("cycle", cycle_str(*result.cycle));
  rep.add_bool("budget-exhausted", result.budget_exhausted);
  rep.add("work-below-delta", result.counters.edges_below_delta);
  rep.add("work-above-delta", result.counters.edges_above_delta);
  rep.add("steps", result.counters.steps);
  if (opts.timings) rep.add("wall-ms", format_ms(elapsed_ms(t0)));
  emit(rep, opts.format);
  return kExitOk;
}

int cmd_list(const std::string& input, int k, u64 seed, const std::string& eps_text,
             std::optional<u64> delta, std::optional<u64> budget, bool use_oracle,
             const CommonOpts& opts) {
  auto t0 = std::chrono::steady_clock::now();
  auto loaded = load_input(input);
  RunReport rep;
  rep.command = "list";
  rep.include_cycles = true;
  rep.add("input", input);
  rep.add("input-digest", digest_str(loaded.digest));
  rep.add("n", u64{loaded.graph.n()});
  rep.add("m", loaded.graph.m());
  rep.add("k", u64(k));
  if (use_oracle) {
    rep.add("mode", std::string("oracle"));
    auto cycles = oracle::enumerate_cycles(loaded.graph, k);
    rep.cycles.assign(cycles.begin(), cycles.end());
  } else {
    ListingConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    cfg.epsilon = parse_epsilon(eps_text);
    cfg.delta = delta;
    cfg.budget = budget;
    auto result = list_c2k(loaded.graph, cfg);
    rep.add("mode", std::string("color-coding"));
    rep.add("seed", seed);
    rep.add("epsilon", cfg.epsilon);
    rep.add("delta", result.delta);
    rep.add("r", result.r);
    rep.add("budget", budget ? std::to_string(*budget) : "none");
    rep.add("work-below-delta", result.counters.edges_below_delta);
    rep.add("work-above-delta", result.counters.edges_above_delta);
    rep.add("steps", result.counters.steps);
    rep.cycles = std::move(result.cycles);
  }
  if (opts.timings) rep.add("wall-ms", format_ms(elapsed_ms(t0)));
  emit(rep, opts.format);
  return kExitOk;
}

int cmd_decompose(const std::string& input, int k, const CommonOpts& opts) {
  auto t0 = std::chrono::steady_clock::now();
  auto loaded = load_input(input);
  const Graph& g = loaded.graph;
  DegreeOrder order(g);
  auto dec = layer_decompose(g, k, order);
  auto audit = audit_decomposition(g, k, order, dec);
  if (!audit.regularity_holds || !audit.capped_bound_holds || !audit.walks_bound_holds)
    throw InternalError("decomposition audit failed");
  RunReport rep;
  rep.command = "decompose";
  rep.add("input", input);
  rep.add("input-digest", digest_str(loaded.digest));
  rep.add("n", u64{g.n()});
  rep.add("m", g.m());
  rep.add("k", u64(k));
  rep.add("d-star", dec.d_star);
  auto set_str = [](const std::vector<u32>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(vs[i]);
    }
    return s.empty() ? std::string("-") : s;
  };
  rep.add("v-star-size", u64{dec.v_star.size()});
  rep.add("v-star", set_str(dec.v_star));
  rep.add("g-prime-edges", dec.g_prime.m());
  for (int i = 0; i < k; ++i) {
    std::string tag = "layer" + std::to_string(i + 1);
    rep.add(tag + "-degree", dec.layer_degrees[i]);
    rep.add(tag + "-size", u64{dec.layers[i].size()});
    rep.add(tag, set_str(dec.layers[i]));
  }
  rep.add("capped-walks", audit.capped_walks);
  rep.add("walks-gprime-from-vstar", audit.walks_gprime_from_vstar);
  rep.add("layer-walks", audit.layer_walks);
  rep.add("log-nprime", u64{audit.log_nprime});
  rep.add_bool("capped-le-(1+log)of-walks", audit.capped_bound_holds);
  rep.add_bool("walks-le-logk-of-layer-walks", audit.walks_bound_holds);
  rep.add_bool("regularity", audit.regularity_holds);
  if (opts.timings) rep.add("wall-ms", format_ms(elapsed_ms(t0)));
  emit(rep, opts.format);
  return kExitOk;
}

std::string flags_str(const SupersatHypothesisFlags& f) {
  std::string s = "extremal=";
  s += f.extremal ? '1' : '0';
  s += ";partial=";
  s += f.partial ? '1' : '0';
  s += ";disjoint=";
  s += f.disjoint ? '1' : '0';
  return s;
}

int cmd_supersat(u64 l, u64 r, const std::string& prob_text, i64 m, int k, u32 trials, u64 seed,
                 const CommonOpts& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ExperimentParams params;
  params.l = l;
  params.r = r;
  params.k = k;
  params.trials = trials;
  params.seed = seed;
  if (!prob_text.empty()) {
    auto p = parse_rational(prob_text);
    if (!p || *p < 0 || *p > 1)
      throw InvalidArgumentError("edge probability must be a rational in [0,1]");
    params.edge_prob = *p;
  }
  if (m >= 0) params.m = static_cast<u64>(m);
  auto reports = supersat_experiment(params);
  RunReport rep;
  rep.command = "supersat";
  rep.add("L", l);
  rep.add("R", r);
  rep.add("k", u64(k));
  rep.add("trials", u64{trials});
  rep.add("seed", seed);
  rep.table_header = {"L", "R", "m", "k", "n", "t", "ratio", "bound_partial", "hypothesis_flags"};
  for (const auto& row : reports) {
    rep.table_rows.push_back({std::to_string(row.l), std::to_string(row.r),
                              std::to_string(row.m), std::to_string(row.k),
                              std::to_string(row.n),
                              row.t_exact ? std::to_string(*row.t_exact) : "na",
                              row.t_exact ? rat_str(row.ratio) : "na",
                              row.bound_partial ? rat_str(*row.bound_partial) : "na",
                              flags_str(row.flags)});
  }
  if (opts.timings) rep.add("wall-ms", format_ms(elapsed_ms(t0)));
  emit(rep, opts.format);
  return kExitOk;
}

int cmd_lp_verify(const CommonOpts& opts) {
  auto t0 = std::chrono::steady_clock::now();
  auto report = verify_all_cases(opts.threads);
  RunReport rep;
  rep.command = "lp-verify";
  rep.add("cases", u64{report.cases.size()});
  rep.table_header = {"case", "status", "optimum", "constraints", "vertices", "routes_agree",
                      "certificates", "certificate_hash"};
  for (const auto& c : report.cases) {
    const char* status = c.status == LpStatus::Optimal
                             ? "optimal"
                             : (c.status == LpStatus::Infeasible ? "infeasible" : "unbounded");
    rep.table_rows.push_back({c.id.label(), status,
                              c.status == LpStatus::Optimal ? rat_str(c.optimum) : "-",
                              std::to_string(c.constraint_count),
                              std::to_string(c.enum_vertex_count),
                              c.routes_agree ? "yes" : "no", c.certificates_ok ? "yes" : "no",
                              digest_str(c.certificate_hash)});
  }
  rep.add("global-max", report.global_max);
  rep.add("bound", Rat(8, 5));
  std::string attain;
  for (const auto& c : report.attaining) {
    if (!attain.empty()) attain += ' ';
    attain += c.label();
  }
  rep.add("attaining", attain);
  rep.add_bool("pass", report.pass);
  if (opts.timings) rep.add("wall-ms", format_ms(elapsed_ms(t0)));
  emit(rep, opts.format);
  return report.pass ? kExitOk : kExitInternal;
}

int cmd_bench(const std::string& sizes_text, u64 avg_degree, int k, u64 seed,
              const CommonOpts& opts) {
  std::vector<u64> sizes;
  std::stringstream ss(sizes_text);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) sizes.push_back(std::stoull(token));
  if (sizes.empty()) throw InvalidArgumentError("empty size list");
  if (avg_degree < 1) throw InvalidArgumentError("average degree must be positive");
  RunReport rep;
  rep.command = "bench";
  rep.add("family", std::string("random-sparse"));
  rep.add("k", u64(k));
  rep.add("avg-degree", avg_degree);
  rep.add("seed", seed);
  rep.table_header = {"m", "n", "t", "delta", "work_below", "work_above"};
  if (opts.timings) rep.table_header.push_back("wall_ms");
  std::vector<double> log_m, log_work;
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    auto t0 = std::chrono::steady_clock::now();
    u64 m = sizes[idx];
    u64 n = std::max<u64>(2 * k, 2 * m / avg_degree);
    Graph g = random_graph(static_cast<u32>(n), m, derive_stream(seed, 0xbe9c4ULL, idx));
    auto counts = count_c2k_exact(g, k);
    std::vector<std::string> row = {
        std::to_string(g.m()),
        std::to_string(g.n()),
        std::to_string(counts.cycles),
        std::to_string(counts.delta),
        std::to_string(counts.counters.edges_below_delta),
        std::to_string(counts.counters.edges_above_delta)};
    if (opts.timings) row.push_back(format_ms(elapsed_ms(t0)));
    rep.table_rows.push_back(std::move(row));
    u64 work = counts.counters.edges_below_delta + counts.counters.edges_above_delta;
    if (work > 0 && g.m() > 1) {
      log_m.push_back(std::log(static_cast<double>(g.m())));
      log_work.push_back(std::log(static_cast<double>(work)));
    }
  }
  if (log_m.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      mx += log_m[i];
      my += log_work[i];
    }
    mx /= static_cast<double>(log_m.size());
    my /= static_cast<double>(log_m.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      num += (log_m[i] - mx) * (log_work[i] - my);
      den += (log_m[i] - mx) * (log_m[i] - mx);
    }
    std::ostringstream slope;
    slope.setf(std::ios::fixed);
    slope.precision(6);
    slope << (den == 0 ? 0.0 : num / den);
    rep.add("slope-work-minus-t-vs-m", slope.str());
  } else {
    rep.add("slope-work-minus-t-vs-m", std::string("na"));
  }
  emit(rep, opts.format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Output-sensitive even-cycle listing, detection, and the 36-case LP verifier"};
  app.require_subcommand(1);
  CommonOpts opts;

  std::string input, eps_text = "1/1000000000", prob_text, sizes_text;
  int k = 3;
  u64 seed = 0;
  i64 delta = -1, budget = -1, m_edges = -1;
  u64 l_part = 0, r_part = 0, avg_degree = 6;
  u32 trials = 1;
  bool use_oracle = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_flag("--timings", opts.timings, "Include wall-clock timings in the report");
    cmd->add_option("--threads", opts.threads, "Worker threads (0 = hardware)");
  };

  auto* detect = app.add_subcommand("detect", "Find one 2k-cycle or report none");
  detect->add_option("--input", input, "Edge-list file")->required();
  detect->add_option("--k", k, "Half cycle length (k >= 2)")->check(CLI::Range(2, 16));
  detect->add_option("--seed", seed, "RNG seed");
  add_common(detect);

  auto* list = app.add_subcommand("list", "List all 2k-cycles");
  list->add_option("--input", input, "Edge-list file")->required();
  list->add_option("--k", k, "Half cycle length (k >= 2)")->check(CLI::Range(2, 16));
  list->add_option("--seed", seed, "RNG seed");
  list->add_option("--epsilon", eps_text, "Failure probability (rational)");
  list->add_option("--delta", delta, "Degree threshold override");
  list->add_option("--budget", budget, "Step budget");
  list->add_flag("--oracle", use_oracle, "Exhaustive enumeration instead of color coding");
  add_common(list);

  auto* decompose = app.add_subcommand("decompose", "Layered decomposition and walk bounds");
  decompose->add_option("--input", input, "Edge-list file")->required();
  decompose->add_option("--k", k, "Walk length")->check(CLI::Range(1, 16));
  add_common(decompose);

  auto* supersat = app.add_subcommand("supersat", "Bipartite supersaturation experiments");
  supersat->add_option("--L", l_part, "Left part size")->required();
  supersat->add_option("--R", r_part, "Right part size")->required();
  supersat->add_option("--edge-prob", prob_text, "Edge probability (rational)");
  supersat->add_option("--m", m_edges, "Exact edge count");
  supersat->add_option("--k", k, "Half cycle length")->check(CLI::Range(2, 16));
  supersat->add_option("--trials", trials, "Number of seeded trials");
  supersat->add_option("--seed", seed, "RNG seed");
  add_common(supersat);

  auto* lp_verify = app.add_subcommand("lp-verify", "Solve and certify the 36 case LPs");
  add_common(lp_verify);

  auto* bench = app.add_subcommand("bench", "Work-counter scaling harness");
  bench->add_option("--sizes", sizes_text, "Comma-separated edge counts")->required();
  bench->add_option("--avg-degree", avg_degree, "Average degree of the family");
  bench->add_option("--k", k, "Half cycle length")->check(CLI::Range(2, 16));
  bench->add_option("--seed", seed, "RNG seed");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (detect->parsed()) return cmd_detect(input, k, seed, opts);
    if (list->parsed())
      return cmd_list(input, k, seed, eps_text,
                      delta >= 0 ? std::optional<u64>(static_cast<u64>(delta)) : std::nullopt,
                      budget >= 0 ? std::optional<u64>(static_cast<u64>(budget)) : std::nullopt,
                      use_oracle, opts);
    if (decompose->parsed()) return cmd_decompose(input, k, opts);
    if (supersat->parsed())
      return cmd_supersat(l_part, r_part, prob_text, m_edges, k, trials, seed, opts);
    if (lp_verify->parsed()) return cmd_lp_verify(opts);
    if (bench->parsed()) return cmd_bench(sizes_text, avg_degree, k, seed, opts);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
