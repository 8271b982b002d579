#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/bounds.hpp"

namespace ramsey {

struct EngineOptions {
  int max_m = 3;
  int max_n = 3;
  std::set<char> methods{'a', 'b', 'c'};
  // Default scan stops at the first holding p (contiguous failing suffix);
  // deep scan continues to the floor and takes the global minimum failing p.
  bool deep_scan = false;
};

struct EngineResult {
  BoundsTable table;
  std::vector<std::string> warnings;
  int waves = 0;
};

// Scans p downward from scan_start while `fails` reports failure; returns
// the smallest failing p reached (per the scan policy), or nullopt when the
// test already holds at scan_start.
std::optional<std::int64_t> smallest_failing_p(
    const std::function<bool(std::int64_t)>& fails, std::int64_t scan_start,
    std::int64_t scan_floor, bool deep_scan);

// Applies the enabled methods (a = sum rule, b = degree quadratic,
// c = triangle count with edge bounds) over all cells 3 <= m <= n within the
// limits, sweeping in nondecreasing m+n order against a per-wave snapshot,
// until no upper bound improves. Provenance labels are recomputed after
// convergence as the weakest method that certifies the final value. Throws
// InconsistencyDetected if a derived bound undercuts a seeded lower bound.
EngineResult run_fixpoint(const BoundsTable& seeded,
                          const EngineOptions& options);

}  // namespace ramsey
