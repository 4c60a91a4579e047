#include "knotpoly/jones.hpp"

#include "knotpoly/error.hpp"
#include "knotpoly/tutte.hpp"

#include <map>

namespace knotpoly {

std::string_view routeName(JonesRoute route) noexcept {
  return route == JonesRoute::Tutte ? "tutte" : "bracket";
}

JonesPolynomial jonesViaTutte(const PlanarDiagram &d) {
  if (d.crossingCount() == 0)
    return {LaurentPoly::constant(1), JonesRoute::Tutte};
  const auto graphs = signedCheckerboards(d);
  if (graphs.positive.hasLoops() || graphs.negative.hasLoops())
    throw Error(ErrorCode::NotReduced, "diagram has a nugatory crossing (loop in a checkerboard graph)");
  const int a = graphs.positive.vertexCount();
  const int b = graphs.negative.vertexCount();
  const int w = writhe(d);
  const int numerator = b - a + 3 * w;
  if (numerator % 4 != 0)
    throw Error(ErrorCode::NonIntegralShift,
                "prefactor exponent (" + std::to_string(numerator) + ")/4 is not an integer");
  LaurentPoly v = jonesEval(graphs.positive).shifted(numerator / 4);
  if (w % 2 != 0)
    v = -v;
  return {std::move(v), JonesRoute::Tutte};
}

LaurentPoly kauffmanBracket(const PlanarDiagram &d) {
  const int c = d.crossingCount();
  if (c == 0)
    return LaurentPoly::constant(1);
  if (c > kMaxBracketCrossings)
    throw Error(ErrorCode::TooLarge, "bracket state sum limited to " +
                                         std::to_string(kMaxBracketCrossings) + " crossings");
  const auto &xs = d.crossings();
  // histogram[(number of B-smoothings, loops)] = number of states
  std::map<std::pair<int, int>, std::uint64_t> histogram;
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t state = 0; state < states; ++state) {
    UnionFind uf(static_cast<std::size_t>(2 * c));
    int bCount = 0;
    for (int i = 0; i < c; ++i) {
      const auto &s = xs[static_cast<std::size_t>(i)].slots;
      auto join = [&](int p, int q) {
        uf.unite(static_cast<std::size_t>(s[static_cast<std::size_t>(p)] - 1),
                 static_cast<std::size_t>(s[static_cast<std::size_t>(q)] - 1));
      };
      if (state >> i & 1u) {
        // B-smoothing: arcs a-d and b-c.
        ++bCount;
        join(0, 3);
        join(1, 2);
      } else {
        // A-smoothing opens the channel between the quadrants swept by turning
        // the over-strand counterclockwise, leaving arcs a-b and c-d.
        join(0, 1);
        join(2, 3);
      }
    }
    ++histogram[{bCount, static_cast<int>(uf.components())}];
  }

  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::map<int, LaurentPoly> deltaPowers;
  LaurentPoly bracket;
  for (const auto &[key, count] : histogram) {
    const auto [bCount, loops] = key;
    auto it = deltaPowers.find(loops);
    if (it == deltaPowers.end())
      it = deltaPowers.emplace(loops, delta.pow(static_cast<unsigned>(loops - 1))).first;
    bracket += it->second.shifted(c - 2 * bCount) * LaurentPoly::constant(count);
  }
  return bracket;
}

JonesPolynomial jonesViaBracket(const PlanarDiagram &d) {
  const int w = writhe(d);
  LaurentPoly inA = kauffmanBracket(d).shifted(-3 * w);
  if (w % 2 != 0)
    inA = -inA;
  LaurentPoly::Terms inT;
  for (const auto &[e, coeff] : inA.terms()) {
    if (e % 4 != 0)
      throw Error(ErrorCode::NonIntegralExponent,
                  "bracket exponent A^" + std::to_string(e) + " is not a multiple of 4");
    inT.emplace(-e / 4, coeff);
  }
  return {LaurentPoly(std::move(inT)), JonesRoute::Bracket};
}

} // namespace knotpoly
