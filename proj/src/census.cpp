#include "knotpoly/census.hpp"

#include "knotpoly/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace knotpoly {

namespace {

[[noreturn]] void csvFail(std::size_t line, const std::string &why) {
  throw Error(ErrorCode::CsvError, "line " + std::to_string(line) + ": " + why);
}

bool parseFlag(const std::string &field, std::size_t line, const char *column) {
  if (field == "0")
    return false;
  if (field == "1")
    return true;
  csvFail(line, std::string(column) + " must be 0 or 1, got '" + field + "'");
}

std::string joinHeader(const std::vector<std::string> &fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i)
    out += (i ? "," : "") + fields[i];
  return out;
}

} // namespace

std::vector<CsvRow> readCsv(std::istream &in) {
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  CsvRow row{line, {}};
  std::string field;
  bool quoted = false, fieldStarted = false, rowStarted = false;
  char ch;
  auto endField = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    fieldStarted = false;
  };
  auto endRow = [&] {
    if (rowStarted) {
      endField();
      rows.push_back(std::move(row));
    }
    row = CsvRow{line, {}};
    rowStarted = false;
  };
  while (in.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n')
          ++line;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
    case '"':
      if (fieldStarted)
        csvFail(line, "quote inside an unquoted field");
      quoted = fieldStarted = rowStarted = true;
      break;
    case ',':
      rowStarted = true;
      endField();
      break;
    case '\r':
      break;
    case '\n':
      ++line;
      endRow();
      break;
    default:
      field.push_back(ch);
      fieldStarted = rowStarted = true;
    }
  }
  if (quoted)
    csvFail(row.line, "unterminated quoted field");
  endRow();
  return rows;
}

std::string csvQuote(const std::string &field) {
  if (field.find_first_of(",\"\n") == std::string::npos && !field.empty())
    return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<CensusRecord> loadCensus(std::istream &in) {
  const auto rows = readCsv(in);
  if (rows.empty() || joinHeader(rows.front().fields) != kCensusHeader)
    csvFail(1, std::string("header must be '") + kCensusHeader + "'");
  std::vector<CensusRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    const auto &f = row.fields;
    if (f.size() != 7)
      csvFail(row.line, "expected 7 fields, got " + std::to_string(f.size()));
    CensusRecord rec;
    rec.name = f[0];
    if (rec.name.empty())
      csvFail(row.line, "empty name");
    try {
      std::size_t used = 0;
      rec.crossings = std::stoi(f[1], &used);
      if (used != f[1].size() || rec.crossings < 0)
        throw std::invalid_argument("crossings");
      rec.volume = std::stod(f[6], &used);
      if (used != f[6].size())
        throw std::invalid_argument("volume");
    } catch (const std::logic_error &) {
      csvFail(row.line, "crossings must be a nonnegative integer and volume a real");
    }
    if (!(rec.volume >= 0))
      csvFail(row.line, "volume must be >= 0");
    rec.flags = {parseFlag(f[2], row.line, "alternating"), parseFlag(f[3], row.line, "prime"),
                 parseFlag(f[4], row.line, "torus")};
    rec.pd = f[5];
    try {
      const auto d = parsePD(rec.pd);
      if (d.crossingCount() != rec.crossings)
        csvFail(row.line, "PD code has " + std::to_string(d.crossingCount()) +
                              " crossings, crossings column says " + std::to_string(rec.crossings));
    } catch (const Error &e) {
      if (e.code() == ErrorCode::CsvError)
        throw;
      csvFail(row.line, std::string("bad PD code: ") + e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CensusRecord> loadCensus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return loadCensus(in);
}

std::optional<Integer> ScatterRow::twist(int i) const {
  if (error || i < 1 || static_cast<std::size_t>(i) > profile.twists.size())
    return std::nullopt;
  return profile.twists[static_cast<std::size_t>(i - 1)];
}

std::vector<ScatterRow> scan(const std::vector<CensusRecord> &records, CensusFilter filter) {
  std::vector<ScatterRow> rows;
  for (const auto &rec : records) {
    if ((filter == CensusFilter::Alternating && !rec.flags.alternating) ||
        (filter == CensusFilter::NonAlternating && rec.flags.alternating))
      continue;
    ScatterRow row;
    row.name = rec.name;
    row.crossings = rec.crossings;
    row.flags = rec.flags;
    row.volume = rec.volume;
    try {
      const auto d = parsePD(rec.pd);
      const auto bracket = jonesViaBracket(d);
      if (rec.flags.alternating && isAlternating(d))
        row.routesAgree = jonesViaTutte(d).poly == bracket.poly;
      row.profile = twistProfile(bracket);
      if (row.profile.span >= 2) {
        row.bounds = volumeBounds(row.profile, rec.crossings, rec.flags);
        if (rec.flags.volumeHypothesis() && rec.volume > 0)
          row.withinBounds = row.bounds->volumeishHolds(rec.volume) && row.bounds->lackenbyHolds(rec.volume);
      }
    } catch (const Error &e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ScanSummary summarize(const std::vector<ScatterRow> &rows) {
  ScanSummary s;
  s.rows = rows.size();
  for (const auto &r : rows) {
    if (r.error)
      ++s.errors;
    if (r.routesAgree) {
      ++s.routeChecks;
      if (!*r.routesAgree)
        ++s.routeDisagreements;
    }
    if (r.withinBounds) {
      ++s.boundChecks;
      if (!*r.withinBounds)
        ++s.boundViolations;
    }
  }
  return s;
}

std::string formatReal(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void emitScatter(const std::vector<ScatterRow> &rows, int i, std::ostream &out, bool allowExtended) {
  if (i < 1 || (!allowExtended && i > kDefaultMaxTwistIndex))
    throw Error(ErrorCode::BadArgument, "twist index " + std::to_string(i) + " outside 1.." +
                                            std::to_string(kDefaultMaxTwistIndex));
  out << 'T' << i << ",volume\n";
  for (const auto &r : rows)
    if (auto t = r.twist(i))
      out << *t << ',' << formatReal(r.volume) << '\n';
}

void emitScatter(const std::vector<ScatterRow> &rows, int i, const std::filesystem::path &path,
                 bool allowExtended) {
  std::ostringstream buffer;
  emitScatter(rows, i, buffer, allowExtended);
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << buffer.str()))
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

void emitReport(const std::vector<ScatterRow> &rows, std::ostream &out) {
  out << "name,crossings,alternating,prime,torus,span,T1,T2,T3,T4,volume,"
         "lower,upper,lackenby_lower,lackenby_upper,routes_agree,within_bounds,error\n";
  auto opt = [](const std::optional<bool> &b) { return b ? std::string(*b ? "1" : "0") : std::string("n/a"); };
  for (const auto &r : rows) {
    out << csvQuote(r.name) << ',' << r.crossings << ',' << r.flags.alternating << ','
        << r.flags.prime << ',' << r.flags.torus << ',' << (r.error ? std::string() : std::to_string(r.profile.span));
    for (int i = 1; i <= kDefaultMaxTwistIndex; ++i) {
      out << ',';
      if (auto t = r.twist(i))
        out << *t;
    }
    out << ',' << formatReal(r.volume);
    if (r.bounds)
      out << ',' << formatReal(r.bounds->lower) << ',' << formatReal(r.bounds->upper) << ','
          << formatReal(r.bounds->lackenbyLower) << ',' << formatReal(r.bounds->lackenbyUpper);
    else
      out << ",,,,";
    out << ',' << opt(r.routesAgree) << ',' << opt(r.withinBounds) << ','
        << (r.error ? csvQuote(*r.error) : std::string()) << '\n';
  }
}

} // namespace knotpoly
