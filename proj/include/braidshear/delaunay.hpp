#pragma once

#include <map>

#include "braidshear/triangulation.hpp"

namespace braidshear {

/// Delaunay triangulation of a generic point set (no infinite vertex).
///
/// Points are inserted in lexicographic order, so each new point lies
/// outside the current hull and is fanned to its visible hull edges; illegal
/// edges are then flipped away. All predicates are exact.
///
/// Throws DegenerateInput for fewer than three points, a coincident pair,
/// an all-collinear set or any cocircular 4-tuple, naming the offending
/// vertices. Ids must be positive; id 0 is reserved for the infinite vertex.
Triangulation delaunay(const std::map<VertexId, Point>& points);

/// Every triangle's circumcircle excludes all other vertices (direct check).
bool is_delaunay(const Triangulation& tri);

}  // namespace braidshear
