#include "knotpoly/diagram.hpp"

#include "knotpoly/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>

namespace knotpoly {

namespace {

// Sign of the checkerboard edge whose faces fill the (a,b) and (c,d) quadrants.
// Pinned by requiring the checkerboard route to reproduce the bracket route.
constexpr int kAbQuadrantSign = -1;

[[noreturn]] void invalid(const std::string &why) { throw Error(ErrorCode::InvalidDiagram, why); }

class PdScanner {
public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  bool atEnd() {
    skipBlank();
    return pos_ >= text_.size();
  }

  char peek() {
    skipBlank();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skipBlank();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a positive integer label");
    if (pos_ - start > 9)
      fail("label too large");
    const int value = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (value <= 0)
      fail("labels must be positive");
    return value;
  }

  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string &what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_));
  }

private:
  void skipBlank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

PlanarDiagram parsePD(std::string_view text) {
  PdScanner scan(text);
  if (scan.atEnd())
    scan.fail("empty PD code");
  if (scan.peek() == 'O') {
    scan.advance();
    if (!scan.atEnd())
      scan.fail("the unknot token 'O' must stand alone");
    return PlanarDiagram{};
  }
  std::vector<std::array<int, 4>> crossings;
  while (!scan.atEnd()) {
    scan.expect('X');
    scan.expect('(');
    std::array<int, 4> slots{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0)
        scan.expect(',');
      slots[static_cast<std::size_t>(k)] = scan.integer();
    }
    scan.expect(')');
    crossings.push_back(slots);
  }
  return PlanarDiagram(std::move(crossings));
}

PlanarDiagram::PlanarDiagram(std::vector<std::array<int, 4>> raw) {
  const int c = static_cast<int>(raw.size());
  if (c == 0)
    return;

  std::map<int, int> occurrences;
  for (const auto &x : raw)
    for (int label : x) {
      if (label <= 0)
        invalid("labels must be positive");
      ++occurrences[label];
    }
  for (const auto &[label, count] : occurrences)
    if (count != 2)
      invalid("edge label " + std::to_string(label) + " appears " + std::to_string(count) +
              " times, expected exactly twice");

  std::map<int, int> normalized;
  int next = 1;
  for (const auto &[label, count] : occurrences)
    normalized[label] = next++;

  crossings_.resize(static_cast<std::size_t>(c));
  ends_.assign(static_cast<std::size_t>(2 * c), {std::pair{-1, -1}, std::pair{-1, -1}});
  for (int i = 0; i < c; ++i)
    for (int s = 0; s < 4; ++s) {
      const int label = normalized[raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]];
      crossings_[static_cast<std::size_t>(i)].slots[static_cast<std::size_t>(s)] = label;
      auto &e = ends_[static_cast<std::size_t>(label - 1)];
      (e[0].first < 0 ? e[0] : e[1]) = {i, s};
    }

  // Walk the strand from the incoming under-strand of crossing 0. The under
  // direction is fixed by the PD convention; the over direction is read off the
  // walk and determines the crossing sign.
  std::vector<int> visits(static_cast<std::size_t>(c), 0);
  int crossing = 0, inSlot = 0;
  for (int step = 0;; ++step) {
    if (step >= 2 * c)
      invalid("strand walk does not close after 2c crossing passes");
    auto &x = crossings_[static_cast<std::size_t>(crossing)];
    if (inSlot == 2)
      invalid("strand enters crossing " + std::to_string(crossing + 1) +
              " against the under-strand direction");
    if (inSlot == 1 || inSlot == 3) {
      // Over-strand running d -> b is a positive (right-handed) crossing.
      const int sign = inSlot == 3 ? +1 : -1;
      if (x.sign != 0 && x.sign != sign)
        invalid("inconsistent over-strand orientation");
      x.sign = sign;
    }
    ++visits[static_cast<std::size_t>(crossing)];
    traversal_.push_back({crossing, inSlot != 0});
    const int outSlot = (inSlot + 2) % 4;
    std::tie(crossing, inSlot) = across(crossing, outSlot);
    if (crossing == 0 && inSlot == 0)
      break;
  }
  if (static_cast<int>(traversal_.size()) != 2 * c ||
      std::any_of(visits.begin(), visits.end(), [](int v) { return v != 2; }))
    invalid("diagram is not a single connected knot component");
}

std::pair<int, int> PlanarDiagram::across(int crossing, int slot) const {
  const int label = crossings_.at(static_cast<std::size_t>(crossing)).slots.at(static_cast<std::size_t>(slot));
  const auto &e = ends_[static_cast<std::size_t>(label - 1)];
  return e[0] == std::pair{crossing, slot} ? e[1] : e[0];
}

std::string PlanarDiagram::toPD() const {
  if (crossings_.empty())
    return "O";
  std::ostringstream out;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto &s = crossings_[i].slots;
    out << (i ? " " : "") << "X(" << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << ')';
  }
  return out.str();
}

int writhe(const PlanarDiagram &d) {
  int w = 0;
  for (const auto &x : d.crossings())
    w += x.sign;
  return w;
}

bool isAlternating(const PlanarDiagram &d) {
  const auto &walk = d.traversal();
  for (std::size_t k = 0; k < walk.size(); ++k)
    if (walk[k].over == walk[(k + 1) % walk.size()].over)
      return false;
  return true;
}

std::vector<Face> faces(const PlanarDiagram &d) {
  const int c = d.crossingCount();
  if (c == 0)
    return {Face{{}, FaceColor::Purple}, Face{{}, FaceColor::Gold}};

  // Leaving corner (i, q) along slot q keeps the face on the left; entering the
  // next crossing through slot s' puts it in quadrant s' - 1.
  auto successor = [&](Corner k) {
    const auto [j, s] = d.across(k.crossing, k.quadrant);
    return Corner{j, (s + 3) % 4};
  };

  std::vector<int> faceOf(static_cast<std::size_t>(4 * c), -1);
  auto index = [](Corner k) { return static_cast<std::size_t>(4 * k.crossing + k.quadrant); };
  std::vector<Face> out;
  for (int i = 0; i < c; ++i)
    for (int q = 0; q < 4; ++q) {
      Corner start{i, q};
      if (faceOf[index(start)] >= 0)
        continue;
      Face f;
      Corner k = start;
      do {
        if (faceOf[index(k)] >= 0)
          invalid("corner successor map is not a permutation");
        faceOf[index(k)] = static_cast<int>(out.size());
        f.boundary.push_back(k);
        k = successor(k);
      } while (!(k == start));
      out.push_back(std::move(f));
    }
  if (static_cast<int>(out.size()) != c + 2)
    invalid("diagram has " + std::to_string(out.size()) + " faces, expected " +
            std::to_string(c + 2) + " (non-planar or corrupt PD code)");

  // Adjacent quadrants at a crossing lie on opposite sides of a strand.
  std::vector<int> color(out.size(), -1);
  std::vector<std::vector<std::pair<int, bool>>> constraints(out.size()); // (face, same color?)
  for (int i = 0; i < c; ++i)
    for (int q = 0; q < 4; ++q) {
      const int f = faceOf[index({i, q})];
      const int g = faceOf[index({i, (q + 1) % 4})];
      const int h = faceOf[index({i, (q + 2) % 4})];
      constraints[static_cast<std::size_t>(f)].push_back({g, false});
      constraints[static_cast<std::size_t>(f)].push_back({h, true});
    }
  std::queue<int> pending;
  color[static_cast<std::size_t>(faceOf[0])] = 0;
  pending.push(faceOf[0]);
  while (!pending.empty()) {
    const int f = pending.front();
    pending.pop();
    for (const auto &[g, same] : constraints[static_cast<std::size_t>(f)]) {
      const int want = same ? color[static_cast<std::size_t>(f)] : 1 - color[static_cast<std::size_t>(f)];
      if (color[static_cast<std::size_t>(g)] < 0) {
        color[static_cast<std::size_t>(g)] = want;
        pending.push(g);
      } else if (color[static_cast<std::size_t>(g)] != want) {
        invalid("faces admit no checkerboard coloring");
      }
    }
  }
  for (std::size_t f = 0; f < out.size(); ++f) {
    if (color[f] < 0)
      invalid("face graph is disconnected");
    out[f].color = color[f] == 0 ? FaceColor::Purple : FaceColor::Gold;
  }
  return out;
}

CheckerboardPair checkerboardGraphs(const PlanarDiagram &d) {
  const auto fs = faces(d);
  if (d.crossingCount() == 0)
    return {Multigraph(1), Multigraph(1)};

  std::vector<int> vertexOf(fs.size(), -1);
  int purpleCount = 0, goldCount = 0;
  std::map<std::pair<int, int>, int> faceAt; // (crossing, quadrant) -> face
  for (std::size_t f = 0; f < fs.size(); ++f) {
    vertexOf[f] = fs[f].color == FaceColor::Purple ? purpleCount++ : goldCount++;
    for (const auto &k : fs[f].boundary)
      faceAt[{k.crossing, k.quadrant}] = static_cast<int>(f);
  }
  CheckerboardPair pair{Multigraph(purpleCount), Multigraph(goldCount)};
  for (int i = 0; i < d.crossingCount(); ++i) {
    for (int q = 0; q < 2; ++q) {
      const int f = faceAt.at({i, q});
      const int g = faceAt.at({i, q + 2});
      const int sign = q == 0 ? kAbQuadrantSign : -kAbQuadrantSign;
      auto &target = fs[static_cast<std::size_t>(f)].color == FaceColor::Purple ? pair.purple : pair.gold;
      target.addEdge(vertexOf[static_cast<std::size_t>(f)], vertexOf[static_cast<std::size_t>(g)], sign);
    }
  }
  return pair;
}

SignedCheckerboards signedCheckerboards(const PlanarDiagram &d) {
  if (!isAlternating(d))
    throw Error(ErrorCode::NotAlternating, "checkerboard signs are uniform only for alternating diagrams");
  auto pair = checkerboardGraphs(d);
  auto uniformSign = [](const Multigraph &g) {
    if (g.edges().empty())
      return 0;
    const int s = g.edges().front().sign;
    for (const auto &e : g.edges())
      if (e.sign != s)
        throw Error(ErrorCode::MixedSigns, "checkerboard graph of an alternating diagram has mixed edge signs");
    return s;
  };
  const int purpleSign = uniformSign(pair.purple);
  const int goldSign = uniformSign(pair.gold);
  if (purpleSign != 0 && purpleSign == goldSign)
    throw Error(ErrorCode::MixedSigns, "both checkerboard graphs carry the same sign");
  if (purpleSign >= 0)
    return {std::move(pair.purple), std::move(pair.gold)};
  return {std::move(pair.gold), std::move(pair.purple)};
}

Multigraph positiveCheckerboard(const PlanarDiagram &d) { return signedCheckerboards(d).positive; }

Multigraph dual(const Multigraph &g, const PlanarDiagram &d) {
  auto pair = checkerboardGraphs(d);
  if (g == pair.purple)
    return pair.gold;
  if (g == pair.gold)
    return pair.purple;
  throw Error(ErrorCode::NotCheckerboard, "graph is not a checkerboard graph of this diagram");
}

} // namespace knotpoly
