#include "cli.hpp"

#include "knotpoly/census.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/jones.hpp"
#include "knotpoly/tutte.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace knotpoly::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Format { Text, Csv, JsonLines };

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"csv", Format::Csv}, {"json-lines", Format::JsonLines}};

std::string readPdArgument(const std::string &arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in)
      throw Error(ErrorCode::IoError, "cannot read " + arg);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }
  return arg;
}

json integerJson(const Integer &v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

std::string coefficientList(const LaurentPoly &p) {
  std::string out;
  for (const auto &[e, c] : coefficients(p))
    out += (out.empty() ? "" : ",") + c.str();
  return out;
}

LaurentPoly polyFromCoeffArgs(const std::string &coeffs, int minExp) {
  std::vector<Integer> values;
  std::stringstream ss(coeffs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty())
      throw Error(ErrorCode::BadArgument, "empty entry in --coeffs");
    try {
      values.emplace_back(item);
    } catch (const std::exception &) {
      throw Error(ErrorCode::BadArgument, "bad coefficient '" + item + "'");
    }
  }
  auto p = LaurentPoly::fromCoefficients(values, minExp);
  if (p.isZero())
    throw Error(ErrorCode::ZeroPolynomial, "--coeffs describes the zero polynomial");
  return p;
}

// Output sink: stdout, or the --out file when given.
class Sink {
public:
  Sink(std::ostream &out, const std::string &path) : out_(&out), path_(path) {}
  std::ostream &stream() { return path_.empty() ? *out_ : buffer_; }
  void flush() {
    if (path_.empty())
      return;
    std::ofstream file(path_, std::ios::binary);
    if (!file || !(file << buffer_.str()))
      throw Error(ErrorCode::IoError, "cannot write " + path_);
  }

private:
  std::ostream *out_;
  std::string path_;
  std::ostringstream buffer_;
};

struct CommonOptions {
  std::string pd;
  std::string out;
  std::string format = "text";
};

void addCommon(CLI::App *cmd, CommonOptions &o, bool pdRequired) {
  auto *pd = cmd->add_option("--pd", o.pd, "PD code, inline or a file containing it");
  if (pdRequired)
    pd->required();
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
  cmd->add_option("--format", o.format, "text | csv | json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
}

// --------------------------------------------------------------------- jones

int cmdJones(const CommonOptions &o, const std::string &route, const std::string &order, Sink &sink,
             std::ostream &err) {
  const auto d = parsePD(readPdArgument(o.pd));
  std::optional<JonesPolynomial> viaTutte, viaBracket;
  const bool wantTutte = route == "tutte" || route == "both" || (route == "auto" && isAlternating(d));
  const bool wantBracket = route != "tutte";
  if (wantTutte)
    viaTutte = jonesViaTutte(d);
  if (wantBracket)
    viaBracket = jonesViaBracket(d);
  if (viaTutte && viaBracket && !(viaTutte->poly == viaBracket->poly)) {
    err << "route disagreement\n  tutte:   " << viaTutte->poly.toString()
        << "\n  bracket: " << viaBracket->poly.toString() << '\n';
    return kExitFailure;
  }
  const auto &poly = viaTutte ? viaTutte->poly : viaBracket->poly;
  const std::string routes = viaTutte && viaBracket ? "both" : viaTutte ? "tutte" : "bracket";
  const auto termOrder = order == "desc" ? TermOrder::Descending : TermOrder::Ascending;
  auto &out = sink.stream();
  switch (kFormats.at(o.format)) {
  case Format::Text:
    out << "V(t) = " << poly.toString(termOrder) << '\n';
    out << "route: " << routes << '\n';
    out << "min exponent: " << poly.minDegree() << '\n';
    out << "coefficients: " << coefficientList(poly) << '\n';
    break;
  case Format::Csv:
    out << "exponent,coefficient\n";
    for (const auto &[e, c] : coefficients(poly))
      out << e << ',' << c << '\n';
    break;
  case Format::JsonLines: {
    json coeffs = json::array();
    for (const auto &[e, c] : coefficients(poly))
      coeffs.push_back(integerJson(c));
    out << json{{"jones", poly.toString(termOrder)}, {"route", routes},
                {"min_exponent", poly.minDegree()}, {"coefficients", coeffs}}
               .dump()
        << '\n';
    break;
  }
  }
  return kExitOk;
}

// --------------------------------------------------------------------- tutte

int cmdTutte(const CommonOptions &o, std::string which, Sink &sink) {
  const auto d = parsePD(readPdArgument(o.pd));
  if (which.empty())
    which = isAlternating(d) ? "positive" : "purple";
  Multigraph g;
  if (which == "positive" || which == "negative") {
    auto signedGraphs = signedCheckerboards(d);
    g = which == "positive" ? signedGraphs.positive : signedGraphs.negative;
  } else {
    auto pair = checkerboardGraphs(d);
    g = which == "purple" ? pair.purple : pair.gold;
  }
  const auto tutte = tutteDeletionContraction(g);
  const auto atJones = evalTutteAtJonesPoint(tutte);
  auto &out = sink.stream();
  switch (kFormats.at(o.format)) {
  case Format::Text:
    out << "graph: " << which << " (" << g.vertexCount() << " vertices, " << g.edgeCount() << " edges)\n";
    out << "T(x,y) = " << tutte.toString() << '\n';
    out << "T(-t,-1/t) = " << atJones.toString() << '\n';
    break;
  case Format::Csv:
    out << "x_exponent,y_exponent,coefficient\n";
    for (auto it = tutte.terms().rbegin(); it != tutte.terms().rend(); ++it)
      out << it->first.first << ',' << it->first.second << ',' << it->second << '\n';
    break;
  case Format::JsonLines: {
    json terms = json::array();
    for (auto it = tutte.terms().rbegin(); it != tutte.terms().rend(); ++it)
      terms.push_back({it->first.first, it->first.second, integerJson(it->second)});
    out << json{{"graph", which}, {"vertices", g.vertexCount()}, {"edges", g.edgeCount()},
                {"tutte", tutte.toString()}, {"terms", terms}, {"jones_point", atJones.toString()}}
               .dump()
        << '\n';
    break;
  }
  }
  return kExitOk;
}

// ------------------------------------------------------------- twist, bounds

struct PolySource {
  std::string coeffs;
  int minExp = 0;
  std::optional<int> crossings;
};

LaurentPoly resolvePoly(const CommonOptions &o, const PolySource &src, std::optional<int> &crossings) {
  if (!o.pd.empty() == !src.coeffs.empty())
    throw CLI::ValidationError("exactly one of --pd or --coeffs is required");
  if (!o.pd.empty()) {
    const auto d = parsePD(readPdArgument(o.pd));
    if (!crossings)
      crossings = d.crossingCount();
    return jonesViaBracket(d).poly;
  }
  return polyFromCoeffArgs(src.coeffs, src.minExp);
}

int cmdTwist(const CommonOptions &o, PolySource src, Sink &sink) {
  const auto poly = resolvePoly(o, src, src.crossings);
  const auto p = twistProfile(poly);
  auto &out = sink.stream();
  switch (kFormats.at(o.format)) {
  case Format::Text:
    out << "V(t) = " << poly.toString() << '\n';
    out << "span: " << p.span << '\n';
    for (std::size_t i = 0; i < p.twists.size(); ++i)
      out << "T" << i + 1 << " = " << p.twists[i] << '\n';
    break;
  case Format::Csv:
    out << "i,T\n";
    for (std::size_t i = 0; i < p.twists.size(); ++i)
      out << i + 1 << ',' << p.twists[i] << '\n';
    break;
  case Format::JsonLines: {
    json t = json::array();
    for (const auto &v : p.twists)
      t.push_back(integerJson(v));
    out << json{{"span", p.span}, {"twists", t}, {"min_exponent", poly.minDegree()}}.dump() << '\n';
    break;
  }
  }
  return kExitOk;
}

int cmdBounds(const CommonOptions &o, PolySource src, std::optional<double> volume, Sink &sink) {
  const auto poly = resolvePoly(o, src, src.crossings);
  const auto p = twistProfile(poly);
  const auto b = volumeBounds(p, src.crossings);
  std::optional<bool> volumeish, lackenby;
  if (volume) {
    volumeish = b.volumeishHolds(*volume);
    lackenby = b.lackenbyHolds(*volume);
  }
  auto &out = sink.stream();
  auto fmt = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(10) << v;
    return s.str();
  };
  switch (kFormats.at(o.format)) {
  case Format::Text:
    out << "|a_{n+1}| = " << p.lowAbs(1) << ", |a_{m-1}| = " << p.highAbs(1) << ", T = " << p.twist(1) << '\n';
    out << "volume-ish lower   " << fmt(b.lower) << '\n';
    out << "volume-ish upper   " << fmt(b.upper) << '\n';
    out << "twist lower        " << fmt(b.lackenbyLower) << '\n';
    out << "twist upper        " << fmt(b.lackenbyUpper) << " (strict)\n";
    out << "crossing upper     " << (b.adamsUpper ? fmt(*b.adamsUpper) : std::string("n/a")) << '\n';
    if (volume) {
      out << "volume             " << fmt(*volume) << '\n';
      out << "volume-ish bounds  " << (*volumeish ? "hold" : "VIOLATED") << '\n';
      out << "twist bounds       " << (*lackenby ? "hold" : "VIOLATED") << '\n';
    }
    break;
  case Format::Csv:
    out << "lower,upper,lackenby_lower,lackenby_upper,adams_upper\n";
    out << formatReal(b.lower) << ',' << formatReal(b.upper) << ',' << formatReal(b.lackenbyLower) << ','
        << formatReal(b.lackenbyUpper) << ',' << (b.adamsUpper ? formatReal(*b.adamsUpper) : "") << '\n';
    break;
  case Format::JsonLines: {
    json j{{"lower", b.lower}, {"upper", b.upper}, {"lackenby_lower", b.lackenbyLower},
           {"lackenby_upper", b.lackenbyUpper}};
    j["adams_upper"] = b.adamsUpper ? json(*b.adamsUpper) : json(nullptr);
    if (volume) {
      j["volume"] = *volume;
      j["volumeish_holds"] = *volumeish;
      j["lackenby_holds"] = *lackenby;
    }
    out << j.dump() << '\n';
    break;
  }
  }
  return volume && !(*volumeish && *lackenby) ? kExitFailure : kExitOk;
}

// -------------------------------------------------------------------- verify

int cmdVerify(const CommonOptions &o, Sink &sink) {
  const auto d = parsePD(readPdArgument(o.pd));
  if (!isAlternating(d))
    throw Error(ErrorCode::NotAlternating, "verify needs an alternating diagram");
  const auto graphs = signedCheckerboards(d);
  const auto tutteRoute = jonesViaTutte(d);
  const auto bracketRoute = jonesViaBracket(d);
  const auto profile = twistProfile(tutteRoute);
  const int graphTwist = twistNumberFromGraphs(d);

  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("routes agree (tutte = bracket)", tutteRoute.poly == bracketRoute.poly);
  for (const auto *g : {&graphs.positive, &graphs.negative}) {
    const std::string tag = g == &graphs.positive ? "positive graph" : "negative graph";
    const auto s = simplify(*g);
    const auto pred = predictTopCoefficients(s, g->vertexCount());
    const auto [m1, m2] = traceCorollary(s, g->vertexCount());
    checks.emplace_back("top coefficients, " + tag, verifyPrediction(*g));
    checks.emplace_back("trace formulas, " + tag,
                        m1 == abs(pred.aTopMinus1) && m2 == abs(pred.aTopMinus2));
  }
  checks.emplace_back("T(K) from Jones = T(K) from graphs", profile.span >= 2 && profile.twist(1) == graphTwist);
  if (profile.span >= 2) {
    const auto sides = secondOrderSides(d);
    checks.emplace_back("second-order identity (" + sides.fromJones.str() + " = " + sides.fromGraphs.str() + ")",
                        sides.fromJones == sides.fromGraphs);
  }
  const auto structure = alternatingStructure(tutteRoute.poly, d.crossingCount());
  checks.emplace_back("span = crossings", structure.spanEqualsCrossings);
  checks.emplace_back("coefficient signs alternate", structure.signsAlternate);
  checks.emplace_back("|a_n| = |a_m| = 1", structure.extremeCoefficientsUnit);

  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.second; });
  auto &out = sink.stream();
  switch (kFormats.at(o.format)) {
  case Format::Text:
    out << "V(t) = " << tutteRoute.poly.toString() << '\n';
    out << "T(K)=" << graphTwist << '\n';
    for (const auto &[name, pass] : checks)
      out << (pass ? "PASS " : "FAIL ") << name << '\n';
    out << (ok ? "identity-check pass" : "identity-check FAIL") << '\n';
    break;
  case Format::Csv:
    out << "check,pass\n";
    for (const auto &[name, pass] : checks)
      out << csvQuote(name) << ',' << (pass ? 1 : 0) << '\n';
    break;
  case Format::JsonLines:
    for (const auto &[name, pass] : checks)
      out << json{{"check", name}, {"pass", pass}}.dump() << '\n';
    out << json{{"twist_number", graphTwist}, {"pass", ok}}.dump() << '\n';
    break;
  }
  return ok ? kExitOk : kExitFailure;
}

// --------------------------------------------------------------- census-scan

int cmdCensus(const std::string &in, const std::string &outDir, const std::vector<int> &tis,
              const std::string &filter, bool extended, std::ostream &out) {
  const auto records = loadCensus(fs::path(in));
  const auto f = filter == "alternating"      ? CensusFilter::Alternating
                 : filter == "nonalternating" ? CensusFilter::NonAlternating
                                              : CensusFilter::All;
  const auto rows = scan(records, f);
  for (int i : tis)
    if (i < 1 || (!extended && i > kDefaultMaxTwistIndex))
      throw Error(ErrorCode::BadArgument, "--ti " + std::to_string(i) + " outside 1.." +
                                              std::to_string(kDefaultMaxTwistIndex) + " (see --extended-ti)");
  std::error_code ec;
  fs::create_directories(outDir, ec);
  if (ec)
    throw Error(ErrorCode::IoError, "cannot create " + outDir + ": " + ec.message());
  for (int i : tis)
    emitScatter(rows, i, fs::path(outDir) / ("scatter_T" + std::to_string(i) + ".csv"), extended);
  {
    std::ofstream report(fs::path(outDir) / "report.csv", std::ios::binary);
    if (!report)
      throw Error(ErrorCode::IoError, "cannot write report.csv");
    emitReport(rows, report);
  }
  const auto s = summarize(rows);
  out << "records: " << s.rows << '\n';
  out << "computation errors: " << s.errors << '\n';
  out << "route checks: " << s.routeChecks << ", disagreements: " << s.routeDisagreements << '\n';
  out << "bound checks: " << s.boundChecks << ", violations: " << s.boundViolations << '\n';
  for (const auto &r : rows)
    if (r.error)
      out << "  error " << r.name << ": " << *r.error << '\n';
  return s.routeDisagreements == 0 && s.boundViolations == 0 ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Jones polynomials, twist numbers and volume bounds from PD codes", "knotpoly"};
  app.require_subcommand(1, 1);

  CommonOptions jonesOpts, tutteOpts, twistOpts, boundsOpts, verifyOpts;
  std::string route = "auto", order = "asc", graph;
  PolySource twistSrc, boundsSrc;
  std::optional<double> volume;
  std::string censusIn, censusOut, censusFilter = "all";
  std::vector<int> tis{1, 2, 3, 4};
  bool extended = false;

  auto *jones = app.add_subcommand("jones", "Jones polynomial of a PD code");
  addCommon(jones, jonesOpts, true);
  jones->add_option("--route", route, "tutte | bracket | both | auto")
      ->check(CLI::IsMember({"tutte", "bracket", "both", "auto"}));
  jones->add_option("--order", order, "asc | desc")->check(CLI::IsMember({"asc", "desc"}));

  auto *tutte = app.add_subcommand("tutte", "Tutte polynomial of a checkerboard graph");
  addCommon(tutte, tutteOpts, true);
  tutte->add_option("--graph", graph, "positive | negative | purple | gold")
      ->check(CLI::IsMember({"positive", "negative", "purple", "gold"}));

  auto addPolySource = [](CLI::App *cmd, PolySource &src) {
    cmd->add_option("--coeffs", src.coeffs, "comma-separated Jones coefficients, lowest degree first");
    cmd->add_option("--min-exp", src.minExp, "exponent of the first --coeffs entry");
  };
  auto *twist = app.add_subcommand("twist", "twist numbers T_i from Jones coefficients");
  addCommon(twist, twistOpts, false);
  addPolySource(twist, twistSrc);

  auto *bounds = app.add_subcommand("bounds", "volume bounds from Jones coefficients");
  addCommon(bounds, boundsOpts, false);
  addPolySource(bounds, boundsSrc);
  bounds->add_option("--crossings", boundsSrc.crossings, "crossing number (crossing-count upper bound)");
  bounds->add_option("--volume", volume, "hyperbolic volume to test against the bounds");

  auto *verify = app.add_subcommand("verify", "coefficient and twist identities for one PD code");
  addCommon(verify, verifyOpts, true);

  auto *census = app.add_subcommand("census-scan", "scan a census CSV and emit scatter data");
  census->add_option("--in", censusIn, "census CSV")->required();
  census->add_option("--out-dir", censusOut, "output directory")->required();
  census->add_option("--ti", tis, "twist indices to emit")->delimiter(',');
  census->add_option("--filter", censusFilter, "all | alternating | nonalternating")
      ->check(CLI::IsMember({"all", "alternating", "nonalternating"}));
  census->add_flag("--extended-ti", extended, "allow twist indices above 4");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  auto runWithSink = [&](const CommonOptions &o, auto &&body) {
    Sink sink(out, o.out);
    const int rc = body(sink);
    sink.flush();
    return rc;
  };

  try {
    if (jones->parsed())
      return runWithSink(jonesOpts, [&](Sink &s) { return cmdJones(jonesOpts, route, order, s, err); });
    if (tutte->parsed())
      return runWithSink(tutteOpts, [&](Sink &s) { return cmdTutte(tutteOpts, graph, s); });
    if (twist->parsed())
      return runWithSink(twistOpts, [&](Sink &s) { return cmdTwist(twistOpts, twistSrc, s); });
    if (bounds->parsed())
      return runWithSink(boundsOpts, [&](Sink &s) { return cmdBounds(boundsOpts, boundsSrc, volume, s); });
    if (verify->parsed())
      return runWithSink(verifyOpts, [&](Sink &s) { return cmdVerify(verifyOpts, s); });
    if (census->parsed())
      return cmdCensus(censusIn, censusOut, tis, censusFilter, extended, out);
  } catch (const CLI::ValidationError &e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

} // namespace knotpoly::cli
