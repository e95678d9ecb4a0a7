#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "braidshear/geometry.hpp"

namespace braidshear {

/// Strand (or slot) identifier. Real vertices are numbered from 1.
using VertexId = int;

/// The point at infinity that closes a planar triangulation into a sphere.
/// Hull edges become interior edges of the closed complex, so a change of
/// the convex hull is a flip like any other.
inline constexpr VertexId kInfiniteVertex = 0;

/// Unordered vertex pair, stored with a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool touches_infinity() const { return a == kInfiniteVertex; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << "(" << e.a << "," << e.b << ")";
  }
};

/// Counterclockwise vertex triple, rotated so the smallest id comes first.
struct Triangle {
  std::array<VertexId, 3> v{};

  Triangle() = default;
  Triangle(VertexId p, VertexId q, VertexId r);

  bool contains(VertexId id) const { return v[0] == id || v[1] == id || v[2] == id; }
  /// Vertex set in increasing order, forgetting orientation.
  std::array<VertexId, 3> vertex_set() const;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Quadrilateral around an interior edge, in counterclockwise order, with
/// the queried edge as the diagonal (u, w) and u the smaller id.
struct Quad {
  VertexId u = 0;
  VertexId v = 0;
  VertexId w = 0;
  VertexId z = 0;

  Edge diagonal() const { return {u, w}; }
  Edge other_diagonal() const { return {v, z}; }
  /// (u,v), (v,w), (w,z), (z,u).
  std::array<Edge, 4> sides() const { return {Edge(u, v), Edge(v, w), Edge(w, z), Edge(z, u)}; }
  friend bool operator==(const Quad&, const Quad&) = default;
};

/// A consistently oriented triangle complex on vertex ids, optionally with
/// coordinates. Every edge has one incident triangle (hull) or two
/// (interior); in the closed form every edge is interior. Triangulations
/// are values: operations return new ones.
class Triangulation {
 public:
  Triangulation() = default;
  /// Validates edge multiplicities and orientation consistency; throws
  /// InvariantViolation otherwise. `points` may be empty for purely
  /// combinatorial complexes.
  Triangulation(std::map<VertexId, Point> points, std::vector<Triangle> triangles);

  const std::map<VertexId, Point>& points() const noexcept { return points_; }
  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept { return incident_.size(); }

  bool has_edge(const Edge& e) const { return incident_.count(e) != 0; }
  std::vector<Triangle> incident(const Edge& e) const;
  bool is_interior(const Edge& e) const;
  /// Vertex opposite the directed edge (from, to), if that triangle exists.
  std::optional<VertexId> apex(VertexId from, VertexId to) const;

  std::vector<Edge> hull_edges() const;
  std::size_t hull_size() const { return hull_edges().size(); }
  bool has_infinite_vertex() const;

  /// Adds kInfiniteVertex with one triangle per hull edge.
  Triangulation closed() const;
  /// Drops every triangle touching kInfiniteVertex.
  Triangulation finite_part() const;
  /// Same triangles as unordered vertex sets.
  bool same_complex(const Triangulation& other) const;
  /// Renames vertices; kInfiniteVertex is kept. Coordinates move along.
  Triangulation relabeled(const std::map<VertexId, VertexId>& rename) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.triangles_ == b.triangles_;
  }

 private:
  std::map<VertexId, Point> points_;
  std::vector<Triangle> triangles_;  // sorted
  std::map<Edge, std::vector<std::size_t>> incident_;
  std::map<std::pair<VertexId, VertexId>, VertexId> apex_;
};

/// Throws HullEdgeError when the edge is missing or has one triangle.
Quad quad_around(const Triangulation& tri, const Edge& edge);

enum class FlipCheck {
  /// Require a strictly convex quadrilateral when all four vertices carry
  /// coordinates.
  kGeometric,
  /// Only the combinatorial preconditions. Used when stored coordinates are
  /// stale, e.g. while replaying a motion.
  kCombinatorial,
};

/// Replaces triangles (u,v,w), (u,w,z) by (u,v,z), (v,w,z). Throws
/// HullEdgeError, NonConvexQuad, or InvariantViolation if (v,z) already
/// exists.
Triangulation flip(const Triangulation& tri, const Edge& edge, FlipCheck check = FlipCheck::kGeometric);

std::ostream& operator<<(std::ostream& os, const Triangulation& tri);

}  // namespace braidshear
