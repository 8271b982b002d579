#include <doctest.h>

#include <sstream>

#include "ramsey/engine.hpp"
#include "ramsey/format.hpp"

using namespace ramsey;

namespace {

BoundsTable small_table() {
  auto seeds = ingest_seeds({{3, 5, 14, 14, "exact"}, {4, 5, 1, 40, "survey"}},
                            "unit-test").table;
  EngineOptions opt;
  opt.max_m = 4;
  opt.max_n = 5;
  return run_fixpoint(seeds, opt).table;
}

}  // namespace

TEST_CASE("format name parsing") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("md") == OutputFormat::Markdown);
  CHECK(parse_format("markdown") == OutputFormat::Markdown);
  CHECK(parse_format("textable") == OutputFormat::TexTable);
  CHECK_THROWS_AS(parse_format("yaml"), MalformedRecord);
}

TEST_CASE("all formats carry the same numbers") {
  BoundsTable t = small_table();
  auto csv = format_table(t, 4, 5, OutputFormat::Csv);
  auto md = format_table(t, 4, 5, OutputFormat::Markdown);
  auto tex = format_table(t, 4, 5, OutputFormat::TexTable);
  auto js = format_table(t, 4, 5, OutputFormat::Json);
  for (const auto& [point, entry] : t.stored()) {
    std::string u = std::to_string(entry.upper);
    CHECK(csv.find("," + u + ",") != std::string::npos);
    CHECK(md.find(" " + u + " (") != std::string::npos);
    CHECK(tex.find(u) != std::string::npos);
    CHECK(js.find("\"upper\": " + u) != std::string::npos);
  }
  CHECK(csv.find("# revision: unit-test") == 0);
}

TEST_CASE("textable bolds engine improvements only") {
  BoundsTable t = small_table();
  auto tex = format_table(t, 4, 5, OutputFormat::TexTable);
  // (3,5) stays at its seed value: not bold. (4,5) improves from 40: bold.
  std::int64_t u45 = *t.upper(4, 5);
  CHECK(u45 < 40);
  CHECK(tex.find("\\textbf{" + std::to_string(u45) + "}") !=
        std::string::npos);
  CHECK(tex.find("\\textbf{14}") == std::string::npos);
  CHECK(tex.find("$^a$") != std::string::npos);
}

TEST_CASE("json round-trips as seeds") {
  BoundsTable t = small_table();
  auto js = format_table(t, 4, 5, OutputFormat::Json);
  std::istringstream in(js);
  std::string revision;
  auto seeds = seeds_from_json(in, &revision);
  CHECK(revision == "unit-test");
  auto again = ingest_seeds(seeds, revision).table;
  for (const auto& [point, entry] : t.stored()) {
    auto e = again.find(point.m, point.n);
    REQUIRE(e);
    CHECK(e->upper == entry.upper);
    CHECK(e->lower == entry.lower);
  }
}

TEST_CASE("explain renders each provenance kind") {
  BoundsTable t = small_table();
  auto base = explain(t, 2, 7);
  CHECK(base == "base case: R(2,7) = 7\n");

  auto seed = explain(t, 5, 3);  // symmetric lookup
  CHECK(seed == "seed: R(3,5) <= 14  [exact]\n");

  auto a = explain(t, 3, 3);
  CHECK(a.find("method a: 3 + 3 = 6") != std::string::npos);
  CHECK(a.find("(both odd, no parity gain)") != std::string::npos);

  auto deep = explain(t, 4, 5);
  CHECK(deep.find("R(4,5) <= ") == 0);
  CHECK(deep.find("feasibility fails at p = ") != std::string::npos);
  CHECK(deep.find("seed: R(3,5) <= 14") != std::string::npos);
}
