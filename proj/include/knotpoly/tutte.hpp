#pragma once

#include "knotpoly/graph.hpp"
#include "knotpoly/polynomial.hpp"

namespace knotpoly {

inline constexpr std::size_t kMaxSubsetEdges = 24;

/// Subset expansion sum_F (x-1)^(k(F)-k(E)) (y-1)^(|F|-|V|+k(F)).
/// Throws TooLarge above kMaxSubsetEdges edges.
TuttePoly tutteBruteForce(const Multigraph &g);

/// Deletion-contraction over parallel edge classes with memoization on the
/// compacted edge-class list.
TuttePoly tutteDeletionContraction(const Multigraph &g);

/// P(m) = 1 - t^-1 + t^-2 - ... +- t^-(m-1).
struct PSeries {
  int m = 1;
  LaurentPoly value;
};

/// Throws BadArgument for m < 1.
PSeries pSeries(int m);

/// T_G(-t,-1/t) summed over subsets of the simplified edge set, each parallel
/// class weighted by P(multiplicity). Throws HasLoops, or TooLarge when the
/// simplified graph has more than kMaxSubsetEdges edges.
LaurentPoly jonesEvalWeighted(const Multigraph &g);

/// T_G(-t,-1/t) via deletion-contraction.
LaurentPoly jonesEval(const Multigraph &g);

} // namespace knotpoly
