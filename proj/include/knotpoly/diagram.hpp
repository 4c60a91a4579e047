#pragma once

#include "knotpoly/graph.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace knotpoly {

/// One crossing of a PD code. Slots hold edge labels counterclockwise starting
/// at the incoming under-strand: the under-strand runs slot 0 -> slot 2, the
/// over-strand occupies slots 1 and 3.
struct Crossing {
  std::array<int, 4> slots{};
  int sign = 0; // +1 right-handed, -1 left-handed
};

/// Corner (crossing, q) is the quadrant between slot q and slot q+1 (mod 4).
struct Corner {
  int crossing = 0;
  int quadrant = 0;
  friend bool operator==(const Corner &, const Corner &) = default;
};

enum class FaceColor { Purple, Gold };

struct Face {
  std::vector<Corner> boundary; // cyclic
  FaceColor color = FaceColor::Purple;
};

/// Validated single-component knot diagram. Immutable after construction.
class PlanarDiagram {
public:
  /// Crossingless unknot.
  PlanarDiagram() = default;

  /// Validates and normalizes labels to 1..2c (order-preserving). Throws
  /// InvalidDiagram when a label does not occur exactly twice, the under/over
  /// orientation is inconsistent, or the diagram has more than one component.
  explicit PlanarDiagram(std::vector<std::array<int, 4>> crossings);

  int crossingCount() const noexcept { return static_cast<int>(crossings_.size()); }
  int edgeCount() const noexcept { return 2 * crossingCount(); }
  const std::vector<Crossing> &crossings() const noexcept { return crossings_; }

  /// The (crossing, slot) pair at the other end of the edge leaving `crossing`
  /// through `slot`.
  std::pair<int, int> across(int crossing, int slot) const;

  /// Crossing visits in strand order; `over` is true when the strand passes over.
  struct Visit {
    int crossing;
    bool over;
  };
  const std::vector<Visit> &traversal() const noexcept { return traversal_; }

  std::string toPD() const;

private:
  std::vector<Crossing> crossings_;
  // ends_[label-1] = two (crossing, slot) occurrences
  std::vector<std::array<std::pair<int, int>, 2>> ends_;
  std::vector<Visit> traversal_;
};

/// Whitespace-separated "X(a,b,c,d)" terms, '#' starts a comment. The single
/// token "O" denotes the crossingless unknot. Throws ParseError / InvalidDiagram.
PlanarDiagram parsePD(std::string_view text);

int writhe(const PlanarDiagram &d);
bool isAlternating(const PlanarDiagram &d);

/// Faces as orbits of the corner-successor map; throws InvalidDiagram unless
/// there are exactly c + 2 of them and they admit a checkerboard coloring.
/// Purple is the color of the face containing corner (0, 0).
std::vector<Face> faces(const PlanarDiagram &d);

struct CheckerboardPair {
  Multigraph purple; // one vertex per purple face
  Multigraph gold;
};

/// One edge per crossing in each graph. An edge is positive when its faces sit
/// in the (b,c)/(d,a) quadrants of the crossing, negative for (a,b)/(c,d).
CheckerboardPair checkerboardGraphs(const PlanarDiagram &d);

struct SignedCheckerboards {
  Multigraph positive;
  Multigraph negative;
};

/// Requires an alternating diagram (NotAlternating); throws MixedSigns if a
/// graph carries both edge signs.
SignedCheckerboards signedCheckerboards(const PlanarDiagram &d);
Multigraph positiveCheckerboard(const PlanarDiagram &d);

/// The other checkerboard graph of `d`. Throws NotCheckerboard when `g` is not
/// one of the two graphs built from `d`.
Multigraph dual(const Multigraph &g, const PlanarDiagram &d);

} // namespace knotpoly
