#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotpoly {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when a and b were in different sets.
  bool unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (size_[a] < size_[b])
      std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  std::size_t components() const noexcept { return components_; }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

struct Edge {
  int u = 0;
  int v = 0;
  int sign = 0; // +1 / -1 for checkerboard edges, 0 when unsigned

  bool isLoop() const noexcept { return u == v; }
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Multigraph with parallel edges and loops. Derived quantities never depend
/// on the order of the edge list.
class Multigraph {
public:
  Multigraph() = default;
  explicit Multigraph(int vertexCount, std::vector<Edge> edges = {});

  int vertexCount() const noexcept { return vertexCount_; }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }

  void addEdge(int u, int v, int sign = 0);
  std::size_t loopCount() const noexcept;
  bool hasLoops() const noexcept { return loopCount() > 0; }
  bool isConnected() const;

  // Debug/fixture serialization: first line "vertices N", then one "u-v" line per edge.
  std::string toEdgeList() const;
  static Multigraph fromEdgeList(std::string_view text);

  friend bool operator==(const Multigraph &, const Multigraph &) = default;

private:
  int vertexCount_ = 0;
  std::vector<Edge> edges_;
};

struct EdgeClass {
  int u = 0; // u < v
  int v = 0;
  int multiplicity = 1;
  friend bool operator==(const EdgeClass &, const EdgeClass &) = default;
};

/// Spanning simple graph: parallel classes collapsed with multiplicities, loops
/// counted but kept out of the base edge set.
class SimplifiedGraph {
public:
  SimplifiedGraph(int vertexCount, std::vector<EdgeClass> base, std::size_t loopCount);

  int vertexCount() const noexcept { return vertexCount_; }
  const std::vector<EdgeClass> &base() const noexcept { return base_; }
  std::size_t baseEdgeCount() const noexcept { return base_.size(); }
  std::size_t loopCount() const noexcept { return loopCount_; }

private:
  int vertexCount_;
  std::vector<EdgeClass> base_; // sorted by (u, v)
  std::size_t loopCount_;
};

SimplifiedGraph simplify(const Multigraph &g);

/// n(j): number of base edges with multiplicity >= j. Throws BadArgument for j < 1.
int nCount(const SimplifiedGraph &s, int j);

/// Components of the spanning subgraph (all vertices, the chosen edge indices).
int componentCount(const Multigraph &g, std::span<const std::size_t> edgeSubset);
int componentCount(const Multigraph &g); // full edge set

int triangleCount(const SimplifiedGraph &s);

struct AdjacencyTraces {
  std::int64_t trace2 = 0; // trace of the 0/1 adjacency matrix squared
  std::int64_t trace3 = 0; // ... cubed
  int nTwo = 0;            // half the entries of the weighted adjacency matrix that are >= 2
};

AdjacencyTraces adjacencyTraces(const SimplifiedGraph &s);

/// Removes edge `e`. Throws EdgeNotFound.
Multigraph deleteEdge(const Multigraph &g, std::size_t e);
/// Merges the endpoints of edge `e`; surviving vertices are renumbered with
/// order-preserving compaction. Throws EdgeNotFound, or ContractLoop for a loop.
Multigraph contractEdge(const Multigraph &g, std::size_t e);

} // namespace knotpoly
