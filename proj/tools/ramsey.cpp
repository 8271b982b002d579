#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/edge_bounds.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/format.hpp"
#include "ramsey/int128.hpp"
#include "ramsey/oracle.hpp"

namespace {

using namespace ramsey;

int env_threads() {
  const char* v = std::getenv("RBF_THREADS");
  if (!v || !*v) return 1;
  int t = std::atoi(v);
  return t < 0 ? 1 : t;  // 0 = auto
}

BoundsTable load_seeds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RamseyError("cannot open seed file: " + path);
  std::string revision = "unversioned";
  std::vector<SeedRecord> records;
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    records = seeds_from_json(in, &revision);
  } else {
    records = parse_seed_csv(in, &revision);
  }
  auto result = ingest_seeds(records, revision);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(result.table);
}

std::set<char> parse_methods(const std::string& methods) {
  std::set<char> out;
  for (char c : methods) {
    if (c == ',' || c == ' ') continue;
    if (c != 'a' && c != 'b' && c != 'c') {
      throw MalformedRecord(std::string("unknown method '") + c + "'");
    }
    out.insert(c);
  }
  if (out.empty()) throw MalformedRecord("method set must be nonempty");
  return out;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw RamseyError("cannot open output file: " + output_path);
  out << text;
}

void print_graph(const oracle::Graph& g) {
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) std::cout << (i != j && g.edge(i, j) ? '1' : '0');
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Recursive upper bounds for two-colour Ramsey numbers"};
  app.require_subcommand(1);

  // compute
  int max_m = 10, max_n = 15;
  std::string seeds_path, methods = "abc", format_name = "csv", output_path;
  bool deep_scan = false;
  auto* compute = app.add_subcommand("compute", "derive an upper-bound table");
  compute->add_option("--max-m", max_m, "largest m")->check(CLI::Range(3, 64));
  compute->add_option("--max-n", max_n, "largest n")->check(CLI::Range(3, 64));
  compute->add_option("--seeds", seeds_path, "seed file (CSV or JSON)")
      ->required();
  compute->add_option("--methods", methods, "subset of abc (default abc)");
  compute->add_option("--format", format_name, "csv|json|md|textable");
  compute->add_flag("--deep-scan", deep_scan,
                    "scan to the floor and take the global minimum failing p");
  compute->add_option("--output", output_path, "write here instead of stdout");

  // explain
  int em = 3, en = 3;
  auto* explain_cmd = app.add_subcommand("explain", "derivation chain for a cell");
  explain_cmd->add_option("m", em)->required();
  explain_cmd->add_option("n", en)->required();
  explain_cmd->add_option("--seeds", seeds_path)->required();
  explain_cmd->add_option("--max-m", max_m);
  explain_cmd->add_option("--max-n", max_n);
  explain_cmd->add_option("--methods", methods);
  explain_cmd->add_flag("--deep-scan", deep_scan);

  // edges
  int qm = 3, qn = 3;
  std::int64_t qp = 0;
  auto* edges_cmd =
      app.add_subcommand("edges", "edge-count bounds for (m,n;p)-graphs");
  edges_cmd->add_option("m", qm)->required();
  edges_cmd->add_option("n", qn)->required();
  edges_cmd->add_option("p", qp)->required();
  edges_cmd->add_option("--seeds", seeds_path)->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  int max_order = 6;
  std::uint64_t rng_seed = 0x52616d736579ULL;
  auto* verify = oracle_cmd->add_subcommand(
      "verify", "check the triangle-count identity on small graphs");
  verify->add_option("--max-order", max_order, "largest order to check")
      ->check(CLI::Range(0, 10));
  verify->add_option("--seed", rng_seed, "PRNG seed for sampled orders");

  int om = 3, on = 3, op = 5, limit = 8;
  bool witness = false;
  auto* oedges = oracle_cmd->add_subcommand(
      "edges", "exact min/max edge counts by exhaustive enumeration");
  oedges->add_option("m", om)->required();
  oedges->add_option("n", on)->required();
  oedges->add_option("p", op)->required();
  oedges->add_option("--limit", limit, "enumeration order ceiling");
  oedges->add_flag("--witness", witness, "print extremal adjacency matrices");

  CLI11_PARSE(app, argc, argv);

  if (*compute || *explain_cmd) {
    BoundsTable table = load_seeds(seeds_path);
    EngineOptions options;
    options.max_m = max_m;
    options.max_n = std::max(max_m, max_n);
    options.methods = parse_methods(methods);
    options.deep_scan = deep_scan;
    if (*explain_cmd) {
      options.max_m = std::max(options.max_m, std::max(em, en));
      options.max_n = std::max(options.max_n, std::max(em, en));
    }
    EngineResult result = run_fixpoint(table, options);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    if (*compute) {
      emit(format_table(result.table, options.max_m, options.max_n,
                        parse_format(format_name)),
           output_path);
    } else {
      std::cout << explain(result.table, em, en);
    }
    return 0;
  }

  if (*edges_cmd) {
    BoundsTable table = load_seeds(seeds_path);
    EdgeBounds eb;
    MethodParams params;
    if (std::min(qm, qn) <= 2) {
      eb = edge_bounds_degenerate(qm, qn, qp);
      std::cout << "degenerate closed form; ";
    } else {
      EngineOptions options;
      options.max_m = std::min(qm, qn);
      options.max_n = std::max(qm, qn);
      EngineResult result = run_fixpoint(table, options);
      params = get_params(result.table, qm, qn);
      eb = edge_bounds(qm, qn, qp, params);
      std::cout << "params alpha=" << params.alpha << " beta=" << params.beta
                << " gamma=" << params.gamma << " delta=" << params.delta
                << "; ";
    }
    if (eb.exists()) {
      std::cout << "e(" << qm << "," << qn << ";" << qp
                << ") >= " << to_string(eb.e_lower) << ", E(" << qm << ","
                << qn << ";" << qp << ") <= " << to_string(eb.E_upper) << "\n";
    } else {
      std::cout << "NONEXISTENT: no (" << qm << "," << qn << ";" << qp
                << ")-graph\n";
    }
    return 0;
  }

  if (*verify) {
    bool ok = true;
    long checked = 0;
    for (int p = 0; p <= std::min(max_order, 6); ++p) {
      oracle::for_each_mn_graph(p + 1, p + 1, p, [&](const oracle::Graph& g) {
        ++checked;
        if (!oracle::goodman_check(g)) ok = false;
        return ok;
      });
    }
    std::cout << "exhaustive orders 0.." << std::min(max_order, 6) << ": "
              << checked << " graphs, " << (ok ? "all pass" : "FAILURE")
              << "\n";
    if (max_order > 6) {
      std::mt19937_64 rng(rng_seed);
      long samples = 0;
      for (int i = 0; i < 10000 && ok; ++i) {
        int p = 7 + static_cast<int>(rng() % (max_order - 6));
        auto g = oracle::random_graph(p, rng);
        ++samples;
        if (!oracle::goodman_check(g)) ok = false;
      }
      std::cout << "sampled orders 7.." << max_order << ": " << samples
                << " graphs, " << (ok ? "all pass" : "FAILURE") << "\n";
    }
    return ok ? 0 : 1;
  }

  if (*oedges) {
    auto result = oracle::exact_edge_numbers(om, on, op, limit, env_threads());
    if (!result) {
      std::cout << "NONEXISTENT: no (" << om << "," << on << ";" << op
                << ")-graph\n";
      return 0;
    }
    std::cout << "e(" << om << "," << on << ";" << op << ") = "
              << result->first << ", E = " << result->second << "\n";
    if (witness) {
      std::optional<oracle::Graph> min_g, max_g;
      oracle::for_each_mn_graph(om, on, op, [&](const oracle::Graph& g) {
        if (g.edge_count() == result->first && !min_g) min_g = g;
        if (g.edge_count() == result->second && !max_g) max_g = g;
        return !(min_g && max_g);
      });
      if (min_g) {
        std::cout << "minimum-edge witness:\n";
        print_graph(*min_g);
      }
      if (max_g) {
        std::cout << "maximum-edge witness:\n";
        print_graph(*max_g);
      }
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InconsistentSeed& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const InconsistencyDetected& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
