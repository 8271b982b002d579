#pragma once

#include <string>
#include <vector>

#include "ramsey/bounds.hpp"

namespace ramsey {

enum class OutputFormat { Csv, Json, Markdown, TexTable };

OutputFormat parse_format(const std::string& name);  // throws MalformedRecord

// Renders the cells with 3 <= m <= n within the limits. All formats carry
// the same numeric content; textable bolds cells the engine improved
// relative to their seed upper bound.
std::string format_table(const BoundsTable& table, int max_m, int max_n,
                         OutputFormat format);

// Human-readable derivation chain for (m,n), down to base cases and seeds.
std::string explain(const BoundsTable& table, int m, int n);

// Reads seeds back out of the JSON produced by format_table.
std::vector<SeedRecord> seeds_from_json(std::istream& in,
                                        std::string* revision = nullptr);

}  // namespace ramsey
