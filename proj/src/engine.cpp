#include "ramsey/engine.hpp"

#include <algorithm>

#include "ramsey/classical.hpp"
#include "ramsey/edge_bounds.hpp"
#include "ramsey/triangle.hpp"

namespace ramsey {

std::optional<std::int64_t> smallest_failing_p(
    const std::function<bool(std::int64_t)>& fails, std::int64_t scan_start,
    std::int64_t scan_floor, bool deep_scan) {
  std::optional<std::int64_t> best;
  for (std::int64_t p = scan_start; p >= scan_floor; --p) {
    if (fails(p)) {
      best = p;
    } else if (!deep_scan) {
      break;
    }
  }
  return best;
}

namespace {

struct CellUpdate {
  int m;
  int n;
  BoundEntry entry;
};

void warn_once(std::vector<std::string>& warnings, std::set<std::string>& seen,
               std::string msg) {
  if (seen.insert(msg).second) warnings.push_back(std::move(msg));
}

std::string cell_name(int m, int n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::vector<std::pair<RamseyPoint, std::int64_t>> param_premises(
    const BoundsTable& table, int m, int n) {
  std::vector<std::pair<RamseyPoint, std::int64_t>> out;
  for (auto [pm, pn] : {std::pair{m - 2, n}, {m, n - 2}, {m - 1, n}, {m, n - 1}}) {
    out.emplace_back(RamseyPoint::canonical(pm, pn), *table.upper(pm, pn));
  }
  return out;
}

// Weakest-method recertification against the converged table: a cell keeps
// label a if the sum rule alone reaches its final value, b if the degree
// quadratic fails there, otherwise c.
void relabel(BoundsTable& table, const EngineOptions& options,
             std::vector<std::string>& warnings,
             std::set<std::string>& seen) {
  const BoundsTable snapshot = table;
  EdgeBoundCache cache;
  std::vector<CellUpdate> updates;
  for (const auto& [point, entry] : snapshot.stored()) {
    if (entry.provenance != Provenance::MethodA &&
        entry.provenance != Provenance::MethodB &&
        entry.provenance != Provenance::MethodC) {
      continue;
    }
    const int m = point.m;
    const int n = point.n;
    const std::int64_t u = entry.upper;
    BoundEntry updated = entry;
    DerivationRecord rec;
    rec.wave = entry.derivation ? entry.derivation->wave : 0;
    bool labelled = false;

    if (options.methods.count('a')) {
      auto ul = snapshot.upper(m - 1, n);
      auto ur = snapshot.upper(m, n - 1);
      if (ul && ur && gg_upper(*ul, *ur) <= u) {
        rec.method = Provenance::MethodA;
        rec.failing_p = gg_upper(*ul, *ur);
        rec.premises = {{RamseyPoint::canonical(m - 1, n), *ul},
                        {RamseyPoint::canonical(m, n - 1), *ur}};
        labelled = true;
      }
    }
    if (!labelled) {
      try {
        MethodParams params = get_params(snapshot, m, n);
        if (options.methods.count('b') &&
            !hwplus_holds(m, n, u, params).holds) {
          rec.method = Provenance::MethodB;
          rec.failing_p = u;
          rec.premises = param_premises(snapshot, m, n);
          labelled = true;
        } else if (options.methods.count('c') &&
                   !mymain_holds(m, n, u, snapshot, cache).holds) {
          rec.method = Provenance::MethodC;
          rec.failing_p = u;
          rec.premises = param_premises(snapshot, m, n);
          labelled = true;
        }
      } catch (const MissingPremise&) {
        // fall through to the warning below
      }
    }
    if (!labelled) {
      warn_once(warnings, seen,
                "could not re-certify " + cell_name(m, n) +
                    " after convergence; keeping wave-time label");
      continue;
    }
    updated.provenance = rec.method;
    updated.derivation = std::move(rec);
    updates.push_back({m, n, std::move(updated)});
  }
  for (auto& up : updates) table.set(up.m, up.n, std::move(up.entry));
}

}  // namespace

EngineResult run_fixpoint(const BoundsTable& seeded,
                          const EngineOptions& options) {
  EngineResult result;
  result.table = seeded;
  std::set<std::string> seen_warnings;

  bool improved = true;
  int wave = 0;
  while (improved) {
    ++wave;
    improved = false;
    const BoundsTable snapshot = result.table;
    EdgeBoundCache cache;
    std::vector<CellUpdate> updates;

    for (int s = 6; s <= options.max_m + options.max_n; ++s) {
      for (int m = 3; m <= options.max_m; ++m) {
        const int n = s - m;
        if (n < m || n > options.max_n) continue;

        auto current = snapshot.find(m, n);
        std::optional<std::int64_t> best =
            current ? std::optional(current->upper) : std::nullopt;
        Provenance how = Provenance::Seed;
        bool changed = false;

        if (options.methods.count('a')) {
          auto ul = snapshot.upper(m - 1, n);
          auto ur = snapshot.upper(m, n - 1);
          if (ul && ur) {
            std::int64_t cand = gg_upper(*ul, *ur);
            if (!best || cand < *best) {
              best = cand;
              how = Provenance::MethodA;
              changed = true;
            }
          }
        }

        if (!best) continue;  // reported after convergence if still absent

        const std::int64_t floor =
            std::max<std::int64_t>(2, current ? current->lower : 1);

        std::optional<MethodParams> params;
        if (options.methods.count('b') || options.methods.count('c')) {
          try {
            params = get_params(snapshot, m, n);
          } catch (const MissingPremise&) {
            // reported after convergence if the premises never materialize
          }
        }
        if (params && options.methods.count('b')) {
          auto fp = smallest_failing_p(
              [&](std::int64_t p) {
                return !hwplus_holds(m, n, p, *params).holds;
              },
              *best - 1, floor, options.deep_scan);
          if (fp) {
            best = *fp;
            how = Provenance::MethodB;
            changed = true;
          }
        }
        if (params && options.methods.count('c')) {
          try {
            auto fp = smallest_failing_p(
                [&](std::int64_t p) {
                  return !mymain_holds(m, n, p, snapshot, cache).holds;
                },
                *best - 1, floor, options.deep_scan);
            if (fp) {
              best = *fp;
              how = Provenance::MethodC;
              changed = true;
            }
          } catch (const MissingPremise&) {
          }
        }

        if (!changed) continue;
        const std::int64_t lower = current ? current->lower : 1;
        if (*best < lower) {
          throw InconsistencyDetected(
              "derived upper bound " + std::to_string(*best) + " at " +
              cell_name(m, n) + " undercuts seeded lower bound " +
              std::to_string(lower));
        }
        BoundEntry entry;
        entry.lower = lower;
        entry.upper = *best;
        entry.provenance = how;
        entry.source = current ? current->source : std::string{};
        entry.seed_upper = current ? current->seed_upper : std::nullopt;
        DerivationRecord rec;
        rec.method = how;
        rec.failing_p = *best;
        rec.wave = wave;
        entry.derivation = std::move(rec);
        updates.push_back({m, n, std::move(entry)});
      }
    }

    for (auto& up : updates) result.table.set(up.m, up.n, std::move(up.entry));
    improved = !updates.empty();
  }

  result.waves = wave;

  // Cells still beyond seeded support are skipped, not errored.
  for (int m = 3; m <= options.max_m; ++m) {
    for (int n = m; n <= options.max_n; ++n) {
      if (!result.table.find(m, n)) {
        warn_once(result.warnings, seen_warnings,
                  "skipped " + cell_name(m, n) +
                      ": no seed and no sum-rule premises");
      } else if (options.methods.count('b') || options.methods.count('c')) {
        try {
          get_params(result.table, m, n);
        } catch (const MissingPremise& e) {
          warn_once(result.warnings, seen_warnings,
                    "feasibility tests skipped at " + cell_name(m, n) + ": " +
                        e.what());
        }
      }
    }
  }

  relabel(result.table, options, result.warnings, seen_warnings);
  return result;
}

}  // namespace ramsey
