#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidshear/motion.hpp"
#include "braidshear/triangulation.hpp"

namespace braidshear {

struct BraidLetter {
  int index = 1;  // generator s_index swaps slots index and index + 1
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int n = 0;
  std::vector<BraidLetter> letters;

  /// Canonical text, e.g. "s1 s2'".
  std::string to_string() const;
  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses whitespace-separated items "s" INDEX, optionally followed by "'"
/// or "^-1". Without `n` the strand count is max(index) + 1 (2 for the
/// empty word). Throws ParseError with the byte offset and the expected
/// token for malformed input, a zero index or an index >= n.
BraidWord parse_braid(std::string_view text, std::optional<int> n = std::nullopt);

/// Strands start on the slots (k, epsilon*k^2), k = 1..n.
struct SlotConfig {
  int n = 3;
  Rational epsilon{Integer(1), Integer(64)};
  Rational bulge{1};

  /// Throws ConfigError unless n >= 2, epsilon > 0 and bulge > 0.
  void validate() const;
  Point slot(int k) const;
  std::map<VertexId, Point> slots() const;
};

struct CompiledBraid {
  Motion motion;
  /// Final slot of each strand; strand k starts on slot k.
  std::map<VertexId, VertexId> permutation;
};

/// One stage per letter: the strands on slots i and i+1 make a half turn
/// about the midpoint of the two slots, counterclockwise for a positive
/// letter. Everybody else stands still.
CompiledBraid compile_motion(const BraidWord& word, const SlotConfig& cfg);

struct SlotTriangulation {
  Triangulation triangulation;
  /// Slot edges in lexicographic order; edge (i, j) carries a_{i,j}.
  std::vector<Edge> edges;
};

/// Delaunay triangulation of the slots. Needs n >= 3.
SlotTriangulation initial_triangulation(const SlotConfig& cfg);

/// True if no slot other than i and i+1 lies on or inside the full ellipse
/// that contains the arc of generator i.
bool arc_clear_of_slots(const SlotConfig& cfg, int i);

}  // namespace braidshear
