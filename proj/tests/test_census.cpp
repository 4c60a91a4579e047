#include "oracles.hpp"

#include "knotpoly/census.hpp"
#include "knotpoly/error.hpp"

#include <doctest.h>

#include <sstream>

using namespace knotpoly;

namespace {

std::string header() { return std::string(kCensusHeader) + "\n"; }

std::string row(const std::string &name, int c, const std::string &flags, const std::string &pd,
                const std::string &vol) {
  return name + "," + std::to_string(c) + "," + flags + ",\"" + pd + "\"," + vol + "\n";
}

struct Failure {
  ErrorCode code;
  std::string message;
};

Failure loadFailure(const std::string &text) {
  std::istringstream in(text);
  try {
    (void)loadCensus(in);
  } catch (const Error &e) {
    return {e.code(), e.what()};
  }
  FAIL("loadCensus accepted bad input");
  return {ErrorCode::BadArgument, ""};
}

} // namespace

TEST_CASE("csv reader") {
  std::istringstream in("a,\"b,c\",\"say \"\"hi\"\"\"\n\nx,\"multi\nline\",z\r\nlast,,\n");
  const auto rows = readCsv(in);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].fields == std::vector<std::string>{"a", "b,c", "say \"hi\""});
  CHECK(rows[1].line == 3);
  CHECK(rows[1].fields[1] == "multi\nline");
  CHECK(rows[2].line == 5);
  CHECK(rows[2].fields == std::vector<std::string>{"last", "", ""});
  CHECK(csvQuote("plain") == "plain");
  CHECK(csvQuote("a,b") == "\"a,b\"");
  CHECK(csvQuote("q\"") == "\"q\"\"\"");
}

TEST_CASE("load valid census") {
  std::istringstream in(header() + row("3_1", 3, "1,1,1", oracle::kTrefoil, "0") +
                        row("4_1", 4, "1,1,0", oracle::kFigureEight, "2.0298832128") +
                        row("3_1m", 3, "1,1,1", oracle::kTrefoilMirror, "0"));
  const auto records = loadCensus(in);
  REQUIRE(records.size() == 3);
  CHECK(records[1].name == "4_1");
  CHECK(records[1].crossings == 4);
  CHECK(records[1].flags.volumeHypothesis());
  CHECK(records[1].volume == doctest::Approx(2.0298832128));
  CHECK(records[0].flags.torus);
}

TEST_CASE("census validation errors") {
  CHECK(loadFailure("name,crossings\n").code == ErrorCode::CsvError);
  const auto mismatch = loadFailure(header() + row("3_1", 3, "1,1,1", oracle::kTrefoil, "0") +
                                    row("bad", 5, "1,1,0", oracle::kFigureEight, "1"));
  CHECK(mismatch.code == ErrorCode::CsvError);
  CHECK(mismatch.message.find("line 3") != std::string::npos);
  CHECK(loadFailure(header() + "x,3,1,1\n").code == ErrorCode::CsvError);
  CHECK(loadFailure(header() + row("x", 3, "2,1,1", oracle::kTrefoil, "0")).code == ErrorCode::CsvError);
  CHECK(loadFailure(header() + row("x", 3, "1,1,1", oracle::kTrefoil, "-1")).code == ErrorCode::CsvError);
  CHECK(loadFailure(header() + row("x", 3, "1,1,1", "X(1,2", "0")).code == ErrorCode::CsvError);
  CHECK(loadFailure(header() + row("x", 3, "1,1,1", oracle::kTrefoil, "abc")).code == ErrorCode::CsvError);
  try {
    (void)loadCensus(std::filesystem::path("/nonexistent/census.csv"));
    FAIL("expected IoError");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("shipped fixture loads") {
  const auto &records = oracle::census();
  CHECK(records.size() >= 20);
  for (const auto &r : records)
    CHECK(parsePD(r.pd).crossingCount() == r.crossings);
}

TEST_CASE("scan rows") {
  const auto &records = oracle::census();
  const auto rows = scan(records);
  REQUIRE(rows.size() == records.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(rows[i].name == records[i].name);

  const auto find = [&](const std::string &name) -> const ScatterRow & {
    return *std::find_if(rows.begin(), rows.end(), [&](const ScatterRow &r) { return r.name == name; });
  };
  const auto &k = find("13a_123");
  CHECK(k.twist(1) == Integer(8));
  CHECK(k.twist(2) == Integer(22));
  CHECK(k.volume == doctest::Approx(21.1052106828));
  CHECK(k.withinBounds == true);
  CHECK(k.routesAgree == true);

  const auto &torus = find("3_1");
  CHECK_FALSE(torus.withinBounds.has_value());
  CHECK(torus.routesAgree == true);

  const auto &nonAlt = find("8_19");
  CHECK_FALSE(nonAlt.withinBounds.has_value());
  CHECK_FALSE(nonAlt.routesAgree.has_value());
  CHECK(nonAlt.twist(1).has_value());

  const auto s = summarize(rows);
  CHECK(s.ok());
  CHECK(s.rows == rows.size());
  CHECK(s.boundChecks > 0);
  CHECK(s.boundViolations == 0);
  CHECK(s.routeDisagreements == 0);

  std::size_t bounded = 0;
  for (const auto &r : rows) {
    CHECK_FALSE(r.error.has_value());
    CHECK(r.withinBounds.has_value() == (r.flags.volumeHypothesis() && r.volume > 0));
    bounded += r.withinBounds.has_value();
  }
  CHECK(bounded == s.boundChecks);
}

TEST_CASE("scan filters") {
  const auto &records = oracle::census();
  const auto alt = scan(records, CensusFilter::Alternating);
  const auto non = scan(records, CensusFilter::NonAlternating);
  CHECK(alt.size() + non.size() == records.size());
  for (const auto &r : alt)
    CHECK(r.flags.alternating);
  for (const auto &r : non)
    CHECK_FALSE(r.flags.alternating);
}

TEST_CASE("scan records computation errors per row") {
  std::vector<CensusRecord> records{{"kink", 1, {true, true, false}, "X(1,1,2,2)", 1.0},
                                    {"4_1", 4, {true, true, false}, oracle::kFigureEight, 2.0298832128}};
  const auto rows = scan(records);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error.has_value());
  CHECK_FALSE(rows[1].error.has_value());
  CHECK(summarize(rows).errors == 1);
  CHECK_FALSE(summarize(rows).ok());
}

TEST_CASE("scatter output") {
  const auto rows = scan(oracle::census());
  std::ostringstream a, b;
  emitScatter(rows, 1, a);
  emitScatter(rows, 1, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("T1,volume\n", 0) == 0);
  const auto text = a.str();
  const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  CHECK(lines == rows.size() + 1);

  std::ostringstream empty;
  emitScatter({}, 3, empty);
  CHECK(empty.str() == "T3,volume\n");

  std::ostringstream ignored;
  try {
    emitScatter(rows, 5, ignored);
    FAIL("expected BadArgument");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BadArgument);
  }
  std::ostringstream extended;
  emitScatter(rows, 5, extended, true);
  CHECK(extended.str().rfind("T5,volume\n", 0) == 0);
  // T5 needs span >= 10, so small knots drop out
  const auto ext = extended.str();
  CHECK(static_cast<std::size_t>(std::count(ext.begin(), ext.end(), '\n')) < rows.size() + 1);

  try {
    emitScatter(rows, 1, std::filesystem::path("/nonexistent/dir/out.csv"));
    FAIL("expected IoError");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("report parses back with the csv reader") {
  const auto rows = scan(oracle::census());
  std::ostringstream out;
  emitReport(rows, out);
  std::istringstream in(out.str());
  const auto parsed = readCsv(in);
  REQUIRE(parsed.size() == rows.size() + 1);
  const auto width = parsed[0].fields.size();
  for (const auto &r : parsed)
    CHECK(r.fields.size() == width);
  CHECK(parsed[1].fields[0] == rows[0].name);
}

TEST_CASE("formatReal round trips") {
  for (double v : {0.0, 21.1052106828, 1.0149416064096536, 1e-9, 123456.789})
    CHECK(std::stod(formatReal(v)) == v);
  CHECK(formatReal(0.0) == "0");
  CHECK(formatReal(2.5) == "2.5");
}
