#include "knotpoly/graph.hpp"

#include "knotpoly/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace knotpoly {

Multigraph::Multigraph(int vertexCount, std::vector<Edge> edges) : vertexCount_(vertexCount) {
  if (vertexCount < 0)
    throw Error(ErrorCode::BadArgument, "negative vertex count");
  for (const auto &e : edges)
    addEdge(e.u, e.v, e.sign);
}

void Multigraph::addEdge(int u, int v, int sign) {
  if (u < 0 || v < 0 || u >= vertexCount_ || v >= vertexCount_)
    throw Error(ErrorCode::BadArgument,
                "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of vertex range");
  edges_.push_back({u, v, sign});
}

std::size_t Multigraph::loopCount() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge &e) { return e.isLoop(); }));
}

bool Multigraph::isConnected() const { return vertexCount_ <= 1 || componentCount(*this) == 1; }

std::string Multigraph::toEdgeList() const {
  std::ostringstream out;
  out << "vertices " << vertexCount_ << '\n';
  for (const auto &e : edges_)
    out << e.u << '-' << e.v << '\n';
  return out.str();
}

Multigraph Multigraph::fromEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  int n = -1;
  if (!(in >> word >> n) || word != "vertices" || n < 0)
    throw Error(ErrorCode::ParseError, "edge list must start with 'vertices N'");
  Multigraph g(n);
  std::string token;
  while (in >> token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
      throw Error(ErrorCode::ParseError, "bad edge token '" + token + "'");
    try {
      g.addEdge(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::ParseError, "bad edge token '" + token + "'");
    }
  }
  return g;
}

SimplifiedGraph::SimplifiedGraph(int vertexCount, std::vector<EdgeClass> base,
                                 std::size_t loopCount)
    : vertexCount_(vertexCount), base_(std::move(base)), loopCount_(loopCount) {
  std::sort(base_.begin(), base_.end(), [](const EdgeClass &a, const EdgeClass &b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
}

SimplifiedGraph simplify(const Multigraph &g) {
  std::map<std::pair<int, int>, int> classes;
  std::size_t loops = 0;
  for (const auto &e : g.edges()) {
    if (e.isLoop()) {
      ++loops;
      continue;
    }
    ++classes[std::minmax(e.u, e.v)];
  }
  std::vector<EdgeClass> base;
  base.reserve(classes.size());
  for (const auto &[uv, mult] : classes)
    base.push_back({uv.first, uv.second, mult});
  return SimplifiedGraph(g.vertexCount(), std::move(base), loops);
}

int nCount(const SimplifiedGraph &s, int j) {
  if (j < 1)
    throw Error(ErrorCode::BadArgument, "n(j) needs j >= 1");
  return static_cast<int>(std::count_if(s.base().begin(), s.base().end(),
                                        [j](const EdgeClass &c) { return c.multiplicity >= j; }));
}

int componentCount(const Multigraph &g, std::span<const std::size_t> edgeSubset) {
  UnionFind uf(static_cast<std::size_t>(g.vertexCount()));
  for (auto idx : edgeSubset) {
    if (idx >= g.edgeCount())
      throw Error(ErrorCode::EdgeNotFound, "edge index " + std::to_string(idx));
    const auto &e = g.edges()[idx];
    uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
  }
  return static_cast<int>(uf.components());
}

int componentCount(const Multigraph &g) {
  UnionFind uf(static_cast<std::size_t>(g.vertexCount()));
  for (const auto &e : g.edges())
    uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
  return static_cast<int>(uf.components());
}

int triangleCount(const SimplifiedGraph &s) {
  const auto n = static_cast<std::size_t>(s.vertexCount());
  std::vector<std::vector<int>> higher(n);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto &c : s.base()) {
    higher[static_cast<std::size_t>(c.u)].push_back(c.v);
    adj[static_cast<std::size_t>(c.u)][static_cast<std::size_t>(c.v)] = 1;
    adj[static_cast<std::size_t>(c.v)][static_cast<std::size_t>(c.u)] = 1;
  }
  // Count each triangle once, from its smallest vertex.
  int count = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const auto &nbrs = higher[u];
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (adj[static_cast<std::size_t>(nbrs[i])][static_cast<std::size_t>(nbrs[j])])
          ++count;
  }
  return count;
}

AdjacencyTraces adjacencyTraces(const SimplifiedGraph &s) {
  const auto n = static_cast<std::size_t>(s.vertexCount());
  using Matrix = std::vector<std::vector<std::int64_t>>;
  Matrix a(n, std::vector<std::int64_t>(n, 0));
  AdjacencyTraces out;
  for (const auto &c : s.base()) {
    a[static_cast<std::size_t>(c.u)][static_cast<std::size_t>(c.v)] = 1;
    a[static_cast<std::size_t>(c.v)][static_cast<std::size_t>(c.u)] = 1;
    // Weighted matrix entry A_uv = multiplicity; both (u,v) and (v,u) count, halved below.
    if (c.multiplicity >= 2)
      out.nTwo += 2;
  }
  out.nTwo /= 2;
  Matrix sq(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          sq[i][j] += a[i][k] * a[k][j];
  for (std::size_t i = 0; i < n; ++i) {
    out.trace2 += sq[i][i];
    for (std::size_t k = 0; k < n; ++k)
      out.trace3 += sq[i][k] * a[k][i];
  }
  return out;
}

Multigraph deleteEdge(const Multigraph &g, std::size_t e) {
  if (e >= g.edgeCount())
    throw Error(ErrorCode::EdgeNotFound, "edge index " + std::to_string(e));
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return Multigraph(g.vertexCount(), std::move(edges));
}

Multigraph contractEdge(const Multigraph &g, std::size_t e) {
  if (e >= g.edgeCount())
    throw Error(ErrorCode::EdgeNotFound, "edge index " + std::to_string(e));
  const Edge target = g.edges()[e];
  if (target.isLoop())
    throw Error(ErrorCode::ContractLoop, "cannot contract a loop");
  const int keep = std::min(target.u, target.v);
  const int gone = std::max(target.u, target.v);
  auto relabel = [&](int w) {
    if (w == gone)
      w = keep;
    return w > gone ? w - 1 : w;
  };
  Multigraph out(g.vertexCount() - 1);
  for (std::size_t i = 0; i < g.edgeCount(); ++i) {
    if (i == e)
      continue;
    const auto &edge = g.edges()[i];
    out.addEdge(relabel(edge.u), relabel(edge.v), edge.sign);
  }
  return out;
}

} // namespace knotpoly
