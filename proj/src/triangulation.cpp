#include "braidshear/triangulation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "braidshear/errors.hpp"

namespace braidshear {

Triangle::Triangle(VertexId p, VertexId q, VertexId r) : v{p, q, r} {
  if (p == q || q == r || p == r) throw InvariantViolation("triangle with a repeated vertex");
  while (v[0] > v[1] || v[0] > v[2]) std::rotate(v.begin(), v.begin() + 1, v.end());
}

std::array<VertexId, 3> Triangle::vertex_set() const {
  auto s = v;
  std::sort(s.begin(), s.end());
  return s;
}

Triangulation::Triangulation(std::map<VertexId, Point> points, std::vector<Triangle> triangles)
    : points_(std::move(points)), triangles_(std::move(triangles)) {
  std::sort(triangles_.begin(), triangles_.end());
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const auto& t = triangles_[i].v;
    for (int k = 0; k < 3; ++k) {
      const VertexId from = t[k];
      const VertexId to = t[(k + 1) % 3];
      if (!apex_.emplace(std::pair{from, to}, t[(k + 2) % 3]).second) {
        throw InvariantViolation("directed edge used by two triangles: inconsistent orientation");
      }
      auto& list = incident_[Edge(from, to)];
      list.push_back(i);
      if (list.size() > 2) throw InvariantViolation("edge with more than two incident triangles");
    }
  }
}

std::vector<VertexId> Triangulation::vertices() const {
  std::set<VertexId> ids;
  for (const auto& [id, p] : points_) ids.insert(id);
  for (const auto& t : triangles_) ids.insert(t.v.begin(), t.v.end());
  return {ids.begin(), ids.end()};
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(incident_.size());
  for (const auto& [e, list] : incident_) out.push_back(e);
  return out;
}

std::vector<Triangle> Triangulation::incident(const Edge& e) const {
  std::vector<Triangle> out;
  auto it = incident_.find(e);
  if (it == incident_.end()) return out;
  for (auto i : it->second) out.push_back(triangles_[i]);
  return out;
}

bool Triangulation::is_interior(const Edge& e) const {
  auto it = incident_.find(e);
  return it != incident_.end() && it->second.size() == 2;
}

std::optional<VertexId> Triangulation::apex(VertexId from, VertexId to) const {
  auto it = apex_.find({from, to});
  if (it == apex_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Triangulation::hull_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, list] : incident_) {
    if (list.size() == 1) out.push_back(e);
  }
  return out;
}

bool Triangulation::has_infinite_vertex() const {
  return std::any_of(triangles_.begin(), triangles_.end(),
                     [](const Triangle& t) { return t.contains(kInfiniteVertex); });
}

Triangulation Triangulation::closed() const {
  std::vector<Triangle> tris = triangles_;
  for (const auto& [key, apex] : apex_) {
    const auto [from, to] = key;
    // The interior lies left of from->to; infinity goes on the other side.
    if (!apex_.count({to, from})) tris.emplace_back(to, from, kInfiniteVertex);
  }
  return Triangulation(points_, std::move(tris));
}

Triangulation Triangulation::finite_part() const {
  std::vector<Triangle> tris;
  for (const auto& t : triangles_) {
    if (!t.contains(kInfiniteVertex)) tris.push_back(t);
  }
  return Triangulation(points_, std::move(tris));
}

bool Triangulation::same_complex(const Triangulation& other) const {
  if (triangles_.size() != other.triangles_.size()) return false;
  auto sets = [](const std::vector<Triangle>& ts) {
    std::vector<std::array<VertexId, 3>> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(t.vertex_set());
    std::sort(out.begin(), out.end());
    return out;
  };
  return sets(triangles_) == sets(other.triangles_);
}

Triangulation Triangulation::relabeled(const std::map<VertexId, VertexId>& rename) const {
  auto map_id = [&](VertexId id) {
    if (id == kInfiniteVertex) return id;
    auto it = rename.find(id);
    if (it == rename.end()) throw InvariantViolation("relabeling misses vertex " + std::to_string(id));
    return it->second;
  };
  std::map<VertexId, Point> points;
  for (const auto& [id, p] : points_) points.emplace(map_id(id), p);
  std::vector<Triangle> tris;
  for (const auto& t : triangles_) tris.emplace_back(map_id(t.v[0]), map_id(t.v[1]), map_id(t.v[2]));
  return Triangulation(std::move(points), std::move(tris));
}

Quad quad_around(const Triangulation& tri, const Edge& edge) {
  const auto z = tri.apex(edge.a, edge.b);
  const auto v = tri.apex(edge.b, edge.a);
  if (!z || !v) {
    std::ostringstream msg;
    msg << "edge " << edge << (tri.has_edge(edge) ? " is a hull edge" : " is not in the triangulation");
    throw HullEdgeError(msg.str());
  }
  return {edge.a, *v, edge.b, *z};
}

Triangulation flip(const Triangulation& tri, const Edge& edge, FlipCheck check) {
  const Quad q = quad_around(tri, edge);
  if (check == FlipCheck::kGeometric) {
    const auto& pts = tri.points();
    const bool all_finite = pts.count(q.u) && pts.count(q.v) && pts.count(q.w) && pts.count(q.z);
    if (all_finite && (orient(pts.at(q.u), pts.at(q.v), pts.at(q.z)) <= 0 ||
                       orient(pts.at(q.v), pts.at(q.w), pts.at(q.z)) <= 0)) {
      std::ostringstream msg;
      msg << "quadrilateral around " << edge << " is not strictly convex";
      throw NonConvexQuad(msg.str());
    }
  }
  if (tri.has_edge(q.other_diagonal())) {
    throw InvariantViolation("flip would duplicate edge (" + std::to_string(q.v) + "," + std::to_string(q.z) + ")");
  }
  const Triangle old1(q.u, q.v, q.w);
  const Triangle old2(q.u, q.w, q.z);
  std::vector<Triangle> tris;
  tris.reserve(tri.triangles().size());
  for (const auto& t : tri.triangles()) {
    if (t != old1 && t != old2) tris.push_back(t);
  }
  tris.emplace_back(q.u, q.v, q.z);
  tris.emplace_back(q.v, q.w, q.z);
  return Triangulation(tri.points(), std::move(tris));
}

std::ostream& operator<<(std::ostream& os, const Triangulation& tri) {
  os << "{";
  bool first = true;
  for (const auto& t : tri.triangles()) {
    os << (first ? "" : " ") << "(" << t.v[0] << "," << t.v[1] << "," << t.v[2] << ")";
    first = false;
  }
  return os << "}";
}

}  // namespace braidshear
