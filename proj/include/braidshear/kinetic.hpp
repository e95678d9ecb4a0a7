#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidshear/motion.hpp"
#include "braidshear/triangulation.hpp"

namespace braidshear {

/// One flip of the kinetic Delaunay triangulation. The flip happens inside
/// the local-time bracket (t_lo, t_hi) of `stage`; `quad` is quad_around
/// of `edge` in the complex just before the flip.
struct FlipEvent {
  std::size_t stage = 0;
  Rational t_lo;
  Rational t_hi;
  Edge edge;
  Quad quad;
};

struct KineticOptions {
  /// Every stage is sampled at least this finely before brackets are
  /// allowed to be accepted as flip-free.
  int grid = 64;
  /// Brackets narrower than this are reported as events.
  Rational min_width{Integer(1), Integer(1) << 20};
  /// Stages are independent given their start positions; scan them on
  /// separate threads.
  bool parallel = true;
};

/// Delaunay triangulation of `points` closed with kInfiniteVertex.
/// Besides the conditions of delaunay(), throws DegenerateInput of kind
/// kCollinear when a point lies on the line of a hull edge.
Triangulation closed_delaunay(const std::map<VertexId, Point>& points);

/// Flip events of the motion in time order. Complexes are compared on the
/// sphere, so a change of the convex hull shows up as a flip of an edge at
/// kInfiniteVertex.
///
/// Each stage is sampled on a uniform grid and every bracket whose end
/// triangulations differ is bisected until it is narrower than
/// options.min_width. Sample times where the configuration is degenerate
/// are moved inside the bracket. Two flips that stay in one bracket are
/// emitted in edge order when their quadrilaterals share no triangle;
/// otherwise DegeneracyError is thrown. Coinciding strands at a sample
/// raise CollisionError.
///
/// `initial` must be the Delaunay triangulation of the start positions,
/// open or closed.
std::vector<FlipEvent> detect_flips(const Motion& motion, const Triangulation& initial,
                                    const KineticOptions& options = {});

/// Applies the event flips to `initial` (closed first if needed) and returns
/// the closed result. Throws InvariantViolation if an event edge is absent
/// or not interior when its turn comes.
Triangulation replay(const Triangulation& initial, const std::vector<FlipEvent>& events);

/// JSON array of {stage, t_lo, t_hi, edge, quad}.
std::string events_to_json(const std::vector<FlipEvent>& events);

}  // namespace braidshear
