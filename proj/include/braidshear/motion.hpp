#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidshear/geometry.hpp"
#include "braidshear/triangulation.hpp"

namespace braidshear {

/// Path of one strand during one stage, over local time t in [0, 1].
///
/// An arc is a half turn about `center`, split into two quarter turns that
/// are each parametrized by the tan-half-angle map, so a rational t gives a
/// rational point. With d = start - center and Jd its counterclockwise
/// normal, the point is center + c*d + bulge*turn*s*Jd where (c, s) runs
/// from (1, 0) through (0, 1) to (-1, 0). `bulge` stretches the arc across
/// its chord; the endpoints do not depend on it.
struct Trajectory {
  enum class Kind { kStationary, kArc };

  Kind kind = Kind::kStationary;
  Point start;
  Point center;
  Rational bulge{1};
  int turn = 1;  // +1 counterclockwise, -1 clockwise

  static Trajectory stationary(Point at);
  static Trajectory arc(Point start, Point center, int turn, Rational bulge = Rational(1));

  Point at(const Rational& t) const;
  Point end() const { return at(Rational(1)); }
};

struct Stage {
  std::map<VertexId, Trajectory> strands;
};

/// Piecewise motion of strands 1..n. Global time T in [0, stages] maps to
/// stage floor(T) at local time T - floor(T).
class Motion {
 public:
  Motion() = default;
  /// Throws ConfigError when a stage misses a strand, a strand jumps between
  /// stages, or two strands coincide at a stage endpoint.
  Motion(int n, std::vector<Stage> stages);
  /// A motion with no stages holding every strand at its start.
  static Motion still(const std::map<VertexId, Point>& start);

  int n() const noexcept { return n_; }
  const std::vector<Stage>& stages() const noexcept { return stages_; }
  std::size_t stage_count() const noexcept { return stages_.size(); }

  /// Start positions, also defined for a motion without stages.
  const std::map<VertexId, Point>& initial() const noexcept { return initial_; }
  std::map<VertexId, Point> positions(std::size_t stage, const Rational& t) const;
  std::map<VertexId, Point> positions_at_global(const Rational& time) const;
  std::map<VertexId, Point> final_positions() const;

 private:
  int n_ = 0;
  std::vector<Stage> stages_;
  std::map<VertexId, Point> initial_;
};

/// Throws ConfigError for a bad stage index or t outside [0, 1].
Point position_at(const Motion& m, VertexId strand, std::size_t stage, const Rational& t);

/// JSON ingestion: a list of stages, each a list of records
/// {"strand", "kind": "stationary"|"arc", "center", "start", "turns": "+half"|"-half", "bulge"}
/// with coordinates as ["p/q", "p/q"]. Also accepts {"n": .., "stages": [..]}.
Motion motion_from_json(const std::string& text);
std::string motion_to_json(const Motion& m);

}  // namespace braidshear
