#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// Arguments of R(m,n), stored with m <= n since R is symmetric.
struct RamseyPoint {
  int m = 1;
  int n = 1;

  static RamseyPoint canonical(int m, int n) {
    return m <= n ? RamseyPoint{m, n} : RamseyPoint{n, m};
  }
  auto operator<=>(const RamseyPoint&) const = default;
};

enum class Provenance { BaseCase, Seed, MethodA, MethodB, MethodC };

// 'a'/'b'/'c' for the three methods, 's' for seeds, '=' for base cases.
char provenance_letter(Provenance p);

struct DerivationRecord {
  Provenance method = Provenance::MethodA;
  // For methods b/c, the p at which the feasibility test fails (equal to the
  // derived upper bound); for method a, the sum-rule value.
  std::int64_t failing_p = 0;
  std::vector<std::pair<RamseyPoint, std::int64_t>> premises;
  int wave = 0;
};

struct BoundEntry {
  std::int64_t lower = 1;
  std::int64_t upper = 0;
  Provenance provenance = Provenance::Seed;
  std::string source;
  // Upper bound this cell was seeded with, if any; lets output formats flag
  // cells the engine improved.
  std::optional<std::int64_t> seed_upper;
  std::optional<DerivationRecord> derivation;
};

// Shifted-point parameters (alpha, beta, gamma, delta) feeding the
// feasibility tests and edge bounds: U(m-2,n)-1, U(m,n-2)-1, U(m-1,n)-1,
// U(m,n-1)-1 for the table's current upper bounds U.
struct MethodParams {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 0;
};

// Exact value when min(m,n) <= 2: R(1,n) = 1, R(2,n) = n.
std::optional<std::int64_t> base_value(int m, int n);

struct SeedRecord {
  int m = 0;
  int n = 0;
  std::int64_t lower = 1;
  std::int64_t upper = 0;
  std::string source;
};

class BoundsTable {
 public:
  // Entry lookup; symmetric in (m,n). Base-case cells (min(m,n) <= 2) are
  // synthesized and always exact, regardless of what was ingested.
  std::optional<BoundEntry> find(int m, int n) const;
  std::optional<std::int64_t> upper(int m, int n) const;
  std::optional<std::int64_t> lower_bound(int m, int n) const;

  // Inserts or replaces a cell. Throws InconsistencyDetected on
  // lower > upper and rejects base-case cells.
  void set(int m, int n, BoundEntry entry);

  const std::map<RamseyPoint, BoundEntry>& stored() const { return entries_; }

  std::string revision;

 private:
  std::map<RamseyPoint, BoundEntry> entries_;
};

// Parameters for the feasibility tests at (m,n), m,n >= 3. Throws
// MissingPremise naming the absent cells.
MethodParams get_params(const BoundsTable& table, int m, int n);

struct IngestResult {
  BoundsTable table;
  std::vector<std::string> warnings;
};

// Builds a table from seed records. Symmetric duplicates merge by
// max(lower) / min(upper); a merged lower > upper throws InconsistentSeed.
// Seeds in the base-case region are discarded (base cases are exact), with a
// warning when they disagree.
IngestResult ingest_seeds(const std::vector<SeedRecord>& records,
                          std::string revision = {});

// Line-oriented CSV `m,n,lower,upper,source`; '?' stands for an unknown
// lower bound (treated as 1); '#' starts a comment; a comment of the form
// `# revision: <text>` sets the table's revision marker.
std::vector<SeedRecord> parse_seed_csv(std::istream& in,
                                       std::string* revision = nullptr);
IngestResult ingest_seed_csv(std::istream& in);

}  // namespace ramsey
