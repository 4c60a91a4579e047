#include "knotpoly/tutte.hpp"

#include "knotpoly/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace knotpoly {

namespace {

// Binomial expansion of (z - 1)^n as coefficients of z^0..z^n.
std::vector<Integer> shiftedPowerCoefficients(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n + 1));
  Integer binom = 1;
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = ((n - k) % 2 == 0) ? binom : Integer(-binom);
    binom = binom * (n - k) / (k + 1);
  }
  return c;
}

// 1 + y + ... + y^(m-1)
TuttePoly yGeometric(int m) {
  TuttePoly::Terms t;
  for (int k = 0; k < m; ++k)
    t[{0, k}] = 1;
  return TuttePoly(std::move(t));
}

struct ClassGraph {
  int vertexCount = 0;
  std::vector<EdgeClass> classes; // sorted, u < v, no isolated vertices
};

// Drops isolated vertices, renumbers the rest in order and sorts classes,
// merging any that coincide.
ClassGraph compact(int vertexCount, std::vector<EdgeClass> classes) {
  std::vector<int> used(static_cast<std::size_t>(vertexCount), -1);
  for (const auto &c : classes)
    used[static_cast<std::size_t>(c.u)] = used[static_cast<std::size_t>(c.v)] = 0;
  int next = 0;
  for (auto &u : used)
    if (u == 0)
      u = next++;
  std::map<std::pair<int, int>, int> merged;
  for (const auto &c : classes) {
    auto uv = std::minmax(used[static_cast<std::size_t>(c.u)], used[static_cast<std::size_t>(c.v)]);
    merged[uv] += c.multiplicity;
  }
  ClassGraph out{next, {}};
  out.classes.reserve(merged.size());
  for (const auto &[uv, m] : merged)
    out.classes.push_back({uv.first, uv.second, m});
  return out;
}

std::u16string memoKey(const ClassGraph &g) {
  std::u16string key;
  key.reserve(3 * g.classes.size() + 1);
  key.push_back(static_cast<char16_t>(g.vertexCount));
  for (const auto &c : g.classes) {
    key.push_back(static_cast<char16_t>(c.u));
    key.push_back(static_cast<char16_t>(c.v));
    key.push_back(static_cast<char16_t>(c.multiplicity));
  }
  return key;
}

// Whether u and v stay connected once class `skip` is removed.
bool connectedWithout(const ClassGraph &g, std::size_t skip) {
  UnionFind uf(static_cast<std::size_t>(g.vertexCount));
  for (std::size_t i = 0; i < g.classes.size(); ++i)
    if (i != skip)
      uf.unite(static_cast<std::size_t>(g.classes[i].u), static_cast<std::size_t>(g.classes[i].v));
  return uf.find(static_cast<std::size_t>(g.classes[skip].u)) ==
         uf.find(static_cast<std::size_t>(g.classes[skip].v));
}

class DeletionContraction {
public:
  TuttePoly solve(const ClassGraph &g) {
    if (g.classes.empty())
      return TuttePoly::one();
    const std::u16string key = memoKey(g);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;

    const EdgeClass e = g.classes.front();
    const bool bridge = !connectedWithout(g, 0);

    // Contract the whole class: v merges into u, classes joining u and v
    // become loops (only the chosen class joins them, since classes are merged).
    std::vector<EdgeClass> contracted;
    contracted.reserve(g.classes.size() - 1);
    for (std::size_t i = 1; i < g.classes.size(); ++i) {
      EdgeClass c = g.classes[i];
      if (c.u == e.v)
        c.u = e.u;
      if (c.v == e.v)
        c.v = e.u;
      contracted.push_back(c);
    }
    TuttePoly result;
    const TuttePoly tContract = solve(compact(g.vertexCount, std::move(contracted)));
    if (bridge) {
      result = (TuttePoly::x() + yGeometric(e.multiplicity) - TuttePoly::one()) * tContract;
    } else {
      std::vector<EdgeClass> deleted(g.classes.begin() + 1, g.classes.end());
      result = solve(compact(g.vertexCount, std::move(deleted))) + yGeometric(e.multiplicity) * tContract;
    }
    memo_.emplace(key, result);
    return result;
  }

private:
  std::unordered_map<std::u16string, TuttePoly> memo_;
};

} // namespace

TuttePoly tutteBruteForce(const Multigraph &g) {
  const std::size_t m = g.edgeCount();
  if (m > kMaxSubsetEdges)
    throw Error(ErrorCode::TooLarge, "subset expansion limited to " +
                                         std::to_string(kMaxSubsetEdges) + " edges, got " +
                                         std::to_string(m));
  const int n = g.vertexCount();
  const int kFull = componentCount(g);
  // histogram[(k(F) - k(E), |F| - |V| + k(F))] = number of subsets F
  std::map<std::pair<int, int>, std::uint64_t> histogram;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    UnionFind uf(static_cast<std::size_t>(n));
    int size = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) {
        ++size;
        uf.unite(static_cast<std::size_t>(g.edges()[i].u), static_cast<std::size_t>(g.edges()[i].v));
      }
    const int k = static_cast<int>(uf.components());
    ++histogram[{k - kFull, size - n + k}];
  }
  TuttePoly::Terms terms;
  for (const auto &[exps, count] : histogram) {
    const auto xs = shiftedPowerCoefficients(exps.first);
    const auto ys = shiftedPowerCoefficients(exps.second);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j)
        terms[{static_cast<int>(i), static_cast<int>(j)}] += xs[i] * ys[j] * count;
  }
  return TuttePoly(std::move(terms));
}

TuttePoly tutteDeletionContraction(const Multigraph &g) {
  const auto s = simplify(g);
  DeletionContraction dc;
  TuttePoly core = dc.solve(compact(s.vertexCount(), s.base()));
  if (s.loopCount() > 0)
    core = core * TuttePoly::y().pow(static_cast<unsigned>(s.loopCount()));
  return core;
}

PSeries pSeries(int m) {
  if (m < 1)
    throw Error(ErrorCode::BadArgument, "P(m) needs m >= 1");
  LaurentPoly::Terms t;
  for (int k = 0; k < m; ++k)
    t[-k] = (k % 2 == 0) ? 1 : -1;
  return {m, LaurentPoly(std::move(t))};
}

LaurentPoly jonesEvalWeighted(const Multigraph &g) {
  const auto s = simplify(g);
  if (s.loopCount() > 0)
    throw Error(ErrorCode::HasLoops, "weighted evaluation needs a loop-free graph");
  const auto &base = s.base();
  if (base.size() > kMaxSubsetEdges)
    throw Error(ErrorCode::TooLarge, "weighted evaluation limited to " +
                                         std::to_string(kMaxSubsetEdges) + " simplified edges");
  const int n = s.vertexCount();
  const int kFull = componentCount(g);

  int maxMult = 1;
  for (const auto &c : base)
    maxMult = std::max(maxMult, c.multiplicity);

  // Group subsets by (k(F) - k(E), |F| - |V| + k(F), count of each multiplicity in F).
  std::map<std::tuple<int, int, std::vector<int>>, std::uint64_t> groups;
  const std::uint64_t subsets = std::uint64_t{1} << base.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    UnionFind uf(static_cast<std::size_t>(n));
    std::vector<int> profile(static_cast<std::size_t>(maxMult + 1), 0);
    int size = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask >> i & 1u) {
        ++size;
        ++profile[static_cast<std::size_t>(base[i].multiplicity)];
        uf.unite(static_cast<std::size_t>(base[i].u), static_cast<std::size_t>(base[i].v));
      }
    const int k = static_cast<int>(uf.components());
    ++groups[{k - kFull, size - n + k, std::move(profile)}];
  }

  const LaurentPoly xFactor = LaurentPoly::monomial(-1, 1) - LaurentPoly::constant(1);  // -t - 1
  const LaurentPoly yFactor = LaurentPoly::monomial(-1, -1) - LaurentPoly::constant(1); // -1/t - 1
  std::vector<LaurentPoly> p(static_cast<std::size_t>(maxMult + 1));
  for (int mu = 1; mu <= maxMult; ++mu)
    p[static_cast<std::size_t>(mu)] = pSeries(mu).value;

  LaurentPoly total;
  for (const auto &[key, count] : groups) {
    const auto &[xExp, yExp, profile] = key;
    LaurentPoly term = xFactor.pow(static_cast<unsigned>(xExp)) * yFactor.pow(static_cast<unsigned>(yExp));
    for (int mu = 2; mu <= maxMult; ++mu)
      if (profile[static_cast<std::size_t>(mu)] > 0)
        term *= p[static_cast<std::size_t>(mu)].pow(static_cast<unsigned>(profile[static_cast<std::size_t>(mu)]));
    total += term * LaurentPoly::constant(count);
  }
  return total;
}

LaurentPoly jonesEval(const Multigraph &g) { return evalTutteAtJonesPoint(tutteDeletionContraction(g)); }

} // namespace knotpoly
