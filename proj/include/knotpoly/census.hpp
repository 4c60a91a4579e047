#pragma once

#include "knotpoly/invariants.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace knotpoly {

/// One census entry. A volume of 0 marks a non-hyperbolic (or unknown) knot.
struct CensusRecord {
  std::string name;
  int crossings = 0;
  KnotFlags flags;
  std::string pd;
  double volume = 0;
};

/// RFC 4180-style reader: comma separated, double-quoted fields with "" escapes.
struct CsvRow {
  std::size_t line = 0; // 1-based line where the row starts
  std::vector<std::string> fields;
};
std::vector<CsvRow> readCsv(std::istream &in);
std::string csvQuote(const std::string &field);

inline constexpr const char *kCensusHeader = "name,crossings,alternating,prime,torus,pd,volume";

/// Header required. Throws IoError, or CsvError naming the offending line.
std::vector<CensusRecord> loadCensus(const std::filesystem::path &path);
std::vector<CensusRecord> loadCensus(std::istream &in);

struct ScatterRow {
  std::string name;
  int crossings = 0;
  KnotFlags flags;
  double volume = 0;
  TwistProfile profile;
  std::optional<VolumeBounds> bounds;
  std::optional<bool> routesAgree; // set when the Tutte route also ran
  std::optional<bool> withinBounds; // set only for alternating, prime, non-torus, volume > 0
  std::optional<std::string> error; // computation failed or exceeded limits

  std::optional<Integer> twist(int i) const;
};

enum class CensusFilter { All, Alternating, NonAlternating };

/// Runs both Jones routes per record (the Tutte route only for alternating
/// diagrams), twist profiles and bounds. Output is in input order; per-record
/// failures land in ScatterRow::error instead of aborting the scan.
std::vector<ScatterRow> scan(const std::vector<CensusRecord> &records,
                             CensusFilter filter = CensusFilter::All);

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t errors = 0;
  std::size_t routeChecks = 0;
  std::size_t routeDisagreements = 0;
  std::size_t boundChecks = 0;
  std::size_t boundViolations = 0;

  bool ok() const noexcept { return errors == 0 && routeDisagreements == 0 && boundViolations == 0; }
};
ScanSummary summarize(const std::vector<ScatterRow> &rows);

inline constexpr int kDefaultMaxTwistIndex = 4;

/// Two-column "T<i>,volume" CSV, one line per row with T_i defined. Indices
/// above kDefaultMaxTwistIndex need allowExtended. Throws BadArgument / IoError.
void emitScatter(const std::vector<ScatterRow> &rows, int i, std::ostream &out, bool allowExtended = false);
void emitScatter(const std::vector<ScatterRow> &rows, int i, const std::filesystem::path &path,
                 bool allowExtended = false);

/// Full per-row report (twists T1..T4, bounds, checks, errors).
void emitReport(const std::vector<ScatterRow> &rows, std::ostream &out);

/// Shortest round-trip decimal text for a double.
std::string formatReal(double value);

} // namespace knotpoly
