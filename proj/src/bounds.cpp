#include "ramsey/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ramsey {

char provenance_letter(Provenance p) {
  switch (p) {
    case Provenance::BaseCase: return '=';
    case Provenance::Seed: return 's';
    case Provenance::MethodA: return 'a';
    case Provenance::MethodB: return 'b';
    case Provenance::MethodC: return 'c';
  }
  return '?';
}

std::optional<std::int64_t> base_value(int m, int n) {
  if (m < 1 || n < 1) return std::nullopt;
  if (std::min(m, n) == 1) return 1;
  if (m == 2) return n;
  if (n == 2) return m;
  return std::nullopt;
}

std::optional<BoundEntry> BoundsTable::find(int m, int n) const {
  RamseyPoint key = RamseyPoint::canonical(m, n);
  if (auto bv = base_value(key.m, key.n)) {
    BoundEntry e;
    e.lower = *bv;
    e.upper = *bv;
    e.provenance = Provenance::BaseCase;
    return e;
  }
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> BoundsTable::upper(int m, int n) const {
  auto e = find(m, n);
  if (!e) return std::nullopt;
  return e->upper;
}

std::optional<std::int64_t> BoundsTable::lower_bound(int m, int n) const {
  auto e = find(m, n);
  if (!e) return std::nullopt;
  return e->lower;
}

void BoundsTable::set(int m, int n, BoundEntry entry) {
  RamseyPoint key = RamseyPoint::canonical(m, n);
  if (base_value(key.m, key.n)) {
    throw InconsistencyDetected("attempt to overwrite base case (" +
                                std::to_string(key.m) + "," +
                                std::to_string(key.n) + ")");
  }
  if (entry.lower > entry.upper) {
    throw InconsistencyDetected(
        "lower > upper at (" + std::to_string(key.m) + "," +
        std::to_string(key.n) + "): " + std::to_string(entry.lower) + " > " +
        std::to_string(entry.upper));
  }
  entries_[key] = std::move(entry);
}

MethodParams get_params(const BoundsTable& table, int m, int n) {
  if (m < 3 || n < 3) {
    throw MissingPremise("get_params requires m,n >= 3, got (" +
                         std::to_string(m) + "," + std::to_string(n) + ")");
  }
  const std::pair<int, int> cells[4] = {
      {m - 2, n}, {m, n - 2}, {m - 1, n}, {m, n - 1}};
  std::int64_t v[4];
  std::string missing;
  for (int i = 0; i < 4; ++i) {
    auto u = table.upper(cells[i].first, cells[i].second);
    if (!u) {
      missing += " (" + std::to_string(cells[i].first) + "," +
                 std::to_string(cells[i].second) + ")";
    } else {
      v[i] = *u;
    }
  }
  if (!missing.empty()) {
    throw MissingPremise("missing upper bounds for params of (" +
                         std::to_string(m) + "," + std::to_string(n) + "):" +
                         missing);
  }
  return MethodParams{v[0] - 1, v[1] - 1, v[2] - 1, v[3] - 1};
}

IngestResult ingest_seeds(const std::vector<SeedRecord>& records,
                          std::string revision) {
  IngestResult result;
  result.table.revision = std::move(revision);
  for (const auto& r : records) {
    if (r.m < 1 || r.n < 1 || r.lower < 1 || r.lower > r.upper) {
      throw MalformedRecord("bad seed record (" + std::to_string(r.m) + "," +
                            std::to_string(r.n) + "," +
                            std::to_string(r.lower) + "," +
                            std::to_string(r.upper) + ")");
    }
    RamseyPoint key = RamseyPoint::canonical(r.m, r.n);
    if (auto bv = base_value(key.m, key.n)) {
      if (r.upper != *bv || r.lower > *bv) {
        result.warnings.push_back(
            "seed for base case (" + std::to_string(key.m) + "," +
            std::to_string(key.n) + ") ignored: exact value is " +
            std::to_string(*bv));
      }
      continue;
    }
    auto existing = result.table.find(key.m, key.n);
    BoundEntry e;
    if (existing) {
      e = *existing;
      e.lower = std::max(e.lower, r.lower);
      e.upper = std::min(e.upper, r.upper);
      if (!r.source.empty() && e.source.find(r.source) == std::string::npos) {
        e.source += "; " + r.source;
      }
      if (e.lower > e.upper) {
        throw InconsistentSeed("merged seeds for (" + std::to_string(key.m) +
                               "," + std::to_string(key.n) +
                               ") give lower " + std::to_string(e.lower) +
                               " > upper " + std::to_string(e.upper));
      }
    } else {
      e.lower = r.lower;
      e.upper = r.upper;
      e.source = r.source;
    }
    e.provenance = Provenance::Seed;
    e.seed_upper = e.upper;
    result.table.set(key.m, key.n, std::move(e));
  }
  return result;
}

namespace {

std::string trim(std::string s) {
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::int64_t parse_int(const std::string& field, int lineno) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw MalformedRecord("line " + std::to_string(lineno) +
                          ": expected integer, got '" + field + "'");
  }
  return value;
}

}  // namespace

std::vector<SeedRecord> parse_seed_csv(std::istream& in,
                                       std::string* revision) {
  std::vector<SeedRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string body = trim(t.substr(1));
      constexpr std::string_view kRev = "revision:";
      if (revision && body.size() > kRev.size() &&
          body.compare(0, kRev.size(), kRev) == 0) {
        *revision = trim(body.substr(kRev.size()));
      }
      continue;
    }
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      std::size_t comma = t.find(',', pos);
      if (comma == std::string::npos) {
        throw MalformedRecord("line " + std::to_string(lineno) +
                              ": expected `m,n,lower,upper,source`");
      }
      fields.push_back(trim(t.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    std::string source = trim(t.substr(pos));

    SeedRecord r;
    r.m = static_cast<int>(parse_int(fields[0], lineno));
    r.n = static_cast<int>(parse_int(fields[1], lineno));
    r.lower = fields[2] == "?" ? 1 : parse_int(fields[2], lineno);
    r.upper = parse_int(fields[3], lineno);
    r.source = std::move(source);
    records.push_back(std::move(r));
  }
  return records;
}

IngestResult ingest_seed_csv(std::istream& in) {
  std::string revision = "unversioned";
  auto records = parse_seed_csv(in, &revision);
  return ingest_seeds(records, revision);
}

}  // namespace ramsey
