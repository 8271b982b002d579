#include "ramsey/format.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ramsey/classical.hpp"
#include "ramsey/edge_bounds.hpp"
#include "ramsey/int128.hpp"
#include "ramsey/triangle.hpp"

namespace ramsey {

namespace {

using nlohmann::json;

struct Cell {
  int m;
  int n;
  BoundEntry entry;
};

std::vector<Cell> collect_cells(const BoundsTable& table, int max_m,
                                int max_n) {
  std::vector<Cell> cells;
  for (int m = 3; m <= max_m; ++m) {
    for (int n = m; n <= max_n; ++n) {
      if (auto e = table.find(m, n)) cells.push_back({m, n, *e});
    }
  }
  return cells;
}

bool improved(const BoundEntry& e) {
  return e.seed_upper ? e.upper < *e.seed_upper
                      : e.provenance == Provenance::MethodA ||
                            e.provenance == Provenance::MethodB ||
                            e.provenance == Provenance::MethodC;
}

std::string method_string(Provenance p) {
  switch (p) {
    case Provenance::BaseCase: return "base";
    case Provenance::Seed: return "seed";
    case Provenance::MethodA: return "a";
    case Provenance::MethodB: return "b";
    case Provenance::MethodC: return "c";
  }
  return "?";
}

std::string format_csv(const BoundsTable& table,
                       const std::vector<Cell>& cells) {
  std::ostringstream out;
  out << "# revision: " << table.revision << "\n";
  out << "# m,n,upper,method\n";
  for (const auto& c : cells) {
    out << c.m << ',' << c.n << ',' << c.entry.upper << ','
        << method_string(c.entry.provenance) << "\n";
  }
  return out.str();
}

std::string format_json(const BoundsTable& table,
                        const std::vector<Cell>& cells) {
  json root;
  root["revision"] = table.revision;
  json jcells = json::array();
  for (const auto& c : cells) {
    json jc;
    jc["m"] = c.m;
    jc["n"] = c.n;
    jc["lower"] = c.entry.lower;
    jc["upper"] = c.entry.upper;
    jc["method"] = method_string(c.entry.provenance);
    jc["source"] = c.entry.source;
    jc["improved"] = improved(c.entry);
    if (c.entry.seed_upper) jc["seed_upper"] = *c.entry.seed_upper;
    if (c.entry.derivation) {
      const auto& d = *c.entry.derivation;
      json jd;
      jd["method"] = method_string(d.method);
      jd["failing_p"] = d.failing_p;
      jd["wave"] = d.wave;
      json prem = json::array();
      for (const auto& [pt, u] : d.premises) {
        prem.push_back({pt.m, pt.n, u});
      }
      jd["premises"] = std::move(prem);
      jc["derivation"] = std::move(jd);
    }
    jcells.push_back(std::move(jc));
  }
  root["cells"] = std::move(jcells);
  return root.dump(2) + "\n";
}

std::string format_markdown(const BoundsTable& table,
                            const std::vector<Cell>& cells, int max_m,
                            int max_n) {
  std::ostringstream out;
  out << "Upper bounds of R(m,n) — seeds: " << table.revision << "\n\n";
  out << "| m\\n |";
  for (int n = 3; n <= max_n; ++n) out << ' ' << n << " |";
  out << "\n|---|";
  for (int n = 3; n <= max_n; ++n) out << "---|";
  out << "\n";
  for (int m = 3; m <= max_m; ++m) {
    out << "| " << m << " |";
    for (int n = 3; n <= max_n; ++n) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const Cell& c) {
        return c.m == m && c.n == n;
      });
      if (it == cells.end() || n < m) {
        out << "  |";
      } else {
        out << ' ' << it->entry.upper << " ("
            << method_string(it->entry.provenance) << ") |";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string format_textable(const BoundsTable& table,
                            const std::vector<Cell>& cells, int max_m,
                            int max_n) {
  std::ostringstream out;
  out << "% seeds: " << table.revision << "\n";
  out << "\\begin{tabular}{|l||";
  for (int n = 3; n <= max_n; ++n) out << "c|";
  out << "}\n\\hline\n$m \\backslash n$";
  for (int n = 3; n <= max_n; ++n) out << " & " << n;
  out << " \\\\\n\\hline\n";
  for (int m = 3; m <= max_m; ++m) {
    out << m;
    for (int n = 3; n <= max_n; ++n) {
      out << " & ";
      auto it = std::find_if(cells.begin(), cells.end(), [&](const Cell& c) {
        return c.m == m && c.n == n;
      });
      if (it == cells.end() || n < m) continue;
      const auto& e = it->entry;
      if (improved(e)) {
        out << "\\textbf{" << e.upper << "}";
      } else {
        out << e.upper;
      }
      if (e.provenance == Provenance::MethodA ||
          e.provenance == Provenance::MethodB ||
          e.provenance == Provenance::MethodC) {
        out << "$^" << method_string(e.provenance) << "$";
      }
    }
    out << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

void explain_cell(const BoundsTable& table, int m, int n, int depth,
                  std::set<RamseyPoint>& expanded, std::ostringstream& out) {
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  RamseyPoint key = RamseyPoint::canonical(m, n);
  auto entry = table.find(m, n);
  if (!entry) {
    out << indent << "R(" << m << "," << n << "): not in table\n";
    return;
  }
  if (entry->provenance == Provenance::BaseCase) {
    out << indent << "base case: R(" << key.m << "," << key.n
        << ") = " << entry->upper << "\n";
    return;
  }
  if (entry->provenance == Provenance::Seed) {
    out << indent << "seed: R(" << key.m << "," << key.n
        << ") <= " << entry->upper;
    if (!entry->source.empty()) out << "  [" << entry->source << "]";
    out << "\n";
    return;
  }

  out << indent << "R(" << key.m << "," << key.n << ") <= " << entry->upper
      << " — method " << method_string(entry->provenance) << ": ";
  bool recurse = expanded.insert(key).second;
  if (entry->provenance == Provenance::MethodA) {
    auto ul = table.upper(key.m - 1, key.n);
    auto ur = table.upper(key.m, key.n - 1);
    if (ul && ur) {
      std::int64_t sum = gg_upper(*ul, *ur);
      out << *ul << " + " << *ur << " = " << sum;
      if (*ul % 2 == 0 && *ur % 2 == 0) {
        out << " (both even, strict inequality gains 1)";
      } else if (*ul % 2 != 0 && *ur % 2 != 0) {
        out << " (both odd, no parity gain)";
      } else {
        out << " (mixed parity, no parity gain)";
      }
    }
    out << "\n";
  } else {
    const std::int64_t p = entry->upper;
    try {
      MethodParams params = get_params(table, key.m, key.n);
      std::int64_t lo = p - 1 - params.delta;
      std::int64_t hi = params.gamma;
      out << "feasibility fails at p = " << p << "; degree interval [" << lo
          << "," << hi << "]";
      if (lo > hi) {
        out << " is empty";
      } else if (entry->provenance == Provenance::MethodB) {
        auto outcome = hwplus_holds(key.m, key.n, p, params);
        out << ", max " << to_string(outcome.rhs_value);
        if (outcome.witness_d) out << " at d = " << *outcome.witness_d;
        out << " < lhs "
            << to_string((i128{p} - 1) * (p - 2 - params.alpha));
      } else {
        EdgeBoundCache cache;
        auto outcome = mymain_holds(key.m, key.n, p, table, cache);
        if (outcome.witness_d) {
          out << ", max " << to_string(outcome.rhs_value) << " at d = "
              << *outcome.witness_d << " < lhs "
              << to_string((i128{p} - 1) * (p - 2));
        } else {
          out << ", no feasible degree";
        }
      }
      out << "\n";
    } catch (const MissingPremise&) {
      out << "premises no longer available\n";
    }
  }
  if (recurse && entry->derivation) {
    for (const auto& [pt, u] : entry->derivation->premises) {
      explain_cell(table, pt.m, pt.n, depth + 1, expanded, out);
    }
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "md" || name == "markdown") return OutputFormat::Markdown;
  if (name == "textable" || name == "tex") return OutputFormat::TexTable;
  throw MalformedRecord("unknown output format '" + name + "'");
}

std::string format_table(const BoundsTable& table, int max_m, int max_n,
                         OutputFormat format) {
  auto cells = collect_cells(table, max_m, max_n);
  switch (format) {
    case OutputFormat::Csv: return format_csv(table, cells);
    case OutputFormat::Json: return format_json(table, cells);
    case OutputFormat::Markdown:
      return format_markdown(table, cells, max_m, max_n);
    case OutputFormat::TexTable:
      return format_textable(table, cells, max_m, max_n);
  }
  throw RamseyError("unreachable format");
}

std::string explain(const BoundsTable& table, int m, int n) {
  std::ostringstream out;
  std::set<RamseyPoint> expanded;
  explain_cell(table, m, n, 0, expanded, out);
  return out.str();
}

std::vector<SeedRecord> seeds_from_json(std::istream& in,
                                        std::string* revision) {
  json root = json::parse(in);
  if (revision && root.contains("revision")) {
    *revision = root["revision"].get<std::string>();
  }
  std::vector<SeedRecord> records;
  for (const auto& jc : root.at("cells")) {
    SeedRecord r;
    r.m = jc.at("m").get<int>();
    r.n = jc.at("n").get<int>();
    r.lower = jc.at("lower").get<std::int64_t>();
    r.upper = jc.at("upper").get<std::int64_t>();
    r.source = jc.value("source", std::string{});
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace ramsey
