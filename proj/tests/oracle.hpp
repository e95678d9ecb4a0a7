#pragma once

// Test-only reference implementations. They share nothing with the library
// code paths they check beyond the exact predicates.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "braidshear/geometry.hpp"
#include "braidshear/triangulation.hpp"

namespace braidshear::oracle {

using TriangleSet = std::set<std::array<VertexId, 3>>;

/// O(n^4) Delaunay: a triple is a triangle iff its circumcircle is empty.
inline TriangleSet brute_force_delaunay(const std::map<VertexId, Point>& pts) {
  std::vector<VertexId> ids;
  for (const auto& [id, p] : pts) ids.push_back(id);
  TriangleSet out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      for (std::size_t k = j + 1; k < ids.size(); ++k) {
        const Point& a = pts.at(ids[i]);
        const Point& b = pts.at(ids[j]);
        const Point& c = pts.at(ids[k]);
        if (orient(a, b, c) == 0) continue;
        bool empty = true;
        for (const auto& [id, p] : pts) {
          if (id == ids[i] || id == ids[j] || id == ids[k]) continue;
          if (incircle(a, b, c, p) >= 0) {
            empty = false;
            break;
          }
        }
        if (empty) out.insert({ids[i], ids[j], ids[k]});
      }
    }
  }
  return out;
}

/// Brute-force Delaunay closed with the infinite vertex: hull edges are the
/// triangle edges used exactly once.
inline TriangleSet brute_force_closed_delaunay(const std::map<VertexId, Point>& pts) {
  TriangleSet tris = brute_force_delaunay(pts);
  std::map<std::pair<VertexId, VertexId>, int> uses;
  for (const auto& t : tris) {
    ++uses[{t[0], t[1]}];
    ++uses[{t[0], t[2]}];
    ++uses[{t[1], t[2]}];
  }
  TriangleSet closed = tris;
  for (const auto& [e, count] : uses) {
    if (count == 1) closed.insert({kInfiniteVertex, e.first, e.second});
  }
  return closed;
}

inline TriangleSet triangle_sets(const Triangulation& tri) {
  TriangleSet out;
  for (const auto& t : tri.triangles()) out.insert(t.vertex_set());
  return out;
}

/// Removed and added triangles between two complexes.
struct ComplexDiff {
  TriangleSet removed;
  TriangleSet added;
};

inline ComplexDiff diff(const TriangleSet& before, const TriangleSet& after) {
  ComplexDiff d;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::inserter(d.removed, d.removed.end()));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::inserter(d.added, d.added.end()));
  return d;
}

/// True iff the diff is a single flip: two triangles sharing an edge replaced
/// by two triangles on the same four vertices sharing the other diagonal.
inline bool is_single_flip(const ComplexDiff& d) {
  if (d.removed.size() != 2 || d.added.size() != 2) return false;
  std::set<VertexId> rv;
  std::set<VertexId> av;
  for (const auto& t : d.removed) rv.insert(t.begin(), t.end());
  for (const auto& t : d.added) av.insert(t.begin(), t.end());
  return rv.size() == 4 && rv == av;
}

}  // namespace braidshear::oracle
