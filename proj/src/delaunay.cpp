#include "braidshear/delaunay.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "braidshear/errors.hpp"

namespace braidshear {

namespace {

struct IntPoint {
  Integer x;
  Integer y;
};

int orient_int(const IntPoint& p, const IntPoint& q, const IntPoint& r) {
  return detail::orient_sign(p.x, p.y, q.x, q.y, r.x, r.y);
}

int incircle_int(const IntPoint& p, const IntPoint& q, const IntPoint& r, const IntPoint& s) {
  return detail::incircle_sign(p.x, p.y, q.x, q.y, r.x, r.y, s.x, s.y);
}

std::string describe(const std::vector<VertexId>& ids) {
  std::string out;
  for (auto id : ids) out += (out.empty() ? "" : ", ") + std::to_string(id);
  return "{" + out + "}";
}

// Directed-edge mesh over indices into the sorted point array.
class Mesh {
 public:
  explicit Mesh(const std::vector<IntPoint>& pts) : pts_(pts) {}

  void add(int a, int b, int c) {
    apex_[{a, b}] = c;
    apex_[{b, c}] = a;
    apex_[{c, a}] = b;
  }

  void remove(int a, int b, int c) {
    apex_.erase({a, b});
    apex_.erase({b, c});
    apex_.erase({c, a});
  }

  std::vector<std::pair<int, int>> hull_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [e, c] : apex_) {
      if (!apex_.count({e.second, e.first})) out.push_back(e);
    }
    return out;
  }

  bool illegal(int u, int w) const {
    auto z = apex_.find({u, w});
    auto v = apex_.find({w, u});
    if (z == apex_.end() || v == apex_.end()) return false;
    // (u, v, w) is counterclockwise; z is illegal if inside its circumcircle.
    return incircle_int(pts_[u], pts_[v->second], pts_[w], pts_[z->second]) > 0;
  }

  void legalize(std::vector<std::pair<int, int>> stack) {
    while (!stack.empty()) {
      const auto [u, w] = stack.back();
      stack.pop_back();
      if (!illegal(u, w)) continue;
      const int z = apex_.at({u, w});
      const int v = apex_.at({w, u});
      remove(u, w, z);
      remove(w, u, v);
      add(u, v, z);
      add(v, w, z);
      stack.insert(stack.end(), {{u, v}, {v, w}, {w, z}, {z, u}});
    }
  }

  std::vector<std::pair<int, int>> all_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [e, c] : apex_) {
      if (e.first < e.second) out.push_back(e);
    }
    return out;
  }

  std::vector<std::array<int, 3>> triangles() const {
    std::vector<std::array<int, 3>> out;
    for (const auto& [e, c] : apex_) {
      if (e.first < e.second && e.first < c) out.push_back({e.first, e.second, c});
    }
    return out;
  }

 private:
  const std::vector<IntPoint>& pts_;
  std::map<std::pair<int, int>, int> apex_;
};

}  // namespace

Triangulation delaunay(const std::map<VertexId, Point>& points) {
  if (points.size() < 3) {
    std::vector<VertexId> ids;
    for (const auto& [id, p] : points) ids.push_back(id);
    throw DegenerateInput(DegenerateInput::Kind::kTooFewPoints, ids,
                          "delaunay needs at least 3 points, got " + std::to_string(points.size()));
  }
  for (const auto& [id, p] : points) {
    if (id <= 0) throw ConfigError("vertex ids must be positive, got " + std::to_string(id));
  }

  // Scale to a common denominator; the predicates are homogeneous.
  Integer scale = 1;
  for (const auto& [id, p] : points) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.x.get().get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.y.get().get_den_mpz_t());
  }
  struct Entry {
    VertexId id;
    IntPoint p;
  };
  std::vector<Entry> entries;
  for (const auto& [id, p] : points) {
    const mpq_class sx = p.x.get() * scale;
    const mpq_class sy = p.y.get() * scale;
    entries.push_back({id, {sx.get_num(), sy.get_num()}});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    const int c = cmp(a.p.x, b.p.x);
    return c != 0 ? c < 0 : cmp(a.p.y, b.p.y) < 0;
  });
  const int n = static_cast<int>(entries.size());
  std::vector<IntPoint> pts;
  std::vector<VertexId> ids;
  for (const auto& e : entries) {
    pts.push_back(e.p);
    ids.push_back(e.id);
  }

  for (int i = 0; i + 1 < n; ++i) {
    if (pts[i].x == pts[i + 1].x && pts[i].y == pts[i + 1].y) {
      std::vector<VertexId> pair{std::min(ids[i], ids[i + 1]), std::max(ids[i], ids[i + 1])};
      throw DegenerateInput(DegenerateInput::Kind::kCoincident, pair, "coincident points " + describe(pair));
    }
  }
  int apex = 2;
  while (apex < n && orient_int(pts[0], pts[1], pts[apex]) == 0) ++apex;
  if (apex == n) {
    std::vector<VertexId> all(ids);
    std::sort(all.begin(), all.end());
    throw DegenerateInput(DegenerateInput::Kind::kCollinear, all, "all points collinear " + describe(all));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (orient_int(pts[a], pts[b], pts[c]) == 0) continue;  // a circle meets a line twice at most
        for (int d = c + 1; d < n; ++d) {
          if (incircle_int(pts[a], pts[b], pts[c], pts[d]) == 0) {
            std::vector<VertexId> quad{ids[a], ids[b], ids[c], ids[d]};
            std::sort(quad.begin(), quad.end());
            throw DegenerateInput(DegenerateInput::Kind::kCocircular, quad,
                                  "cocircular points " + describe(quad));
          }
        }
      }
    }
  }

  Mesh mesh(pts);
  // Points 0..apex-1 are collinear in sorted order; fan them to `apex`.
  std::vector<std::pair<int, int>> stack;
  const bool ccw = orient_int(pts[0], pts[1], pts[apex]) > 0;
  for (int i = 0; i + 1 < apex; ++i) {
    if (ccw) {
      mesh.add(i, i + 1, apex);
    } else {
      mesh.add(i + 1, i, apex);
    }
    stack.emplace_back(i, i + 1);
  }
  mesh.legalize(std::move(stack));

  for (int p = apex + 1; p < n; ++p) {
    std::vector<std::pair<int, int>> fresh;
    for (const auto& [a, b] : mesh.hull_edges()) {
      if (orient_int(pts[a], pts[b], pts[p]) < 0) {
        mesh.add(b, a, p);
        fresh.emplace_back(a, b);
      }
    }
    if (fresh.empty()) throw InvariantViolation("delaunay: inserted point sees no hull edge");
    mesh.legalize(std::move(fresh));
  }
  // Local legalization suffices in theory; this pass makes the result
  // independent of that argument.
  while (true) {
    std::vector<std::pair<int, int>> bad;
    for (const auto& [u, w] : mesh.all_edges()) {
      if (mesh.illegal(u, w)) bad.emplace_back(u, w);
    }
    if (bad.empty()) break;
    mesh.legalize(std::move(bad));
  }

  std::vector<Triangle> tris;
  for (const auto& t : mesh.triangles()) tris.emplace_back(ids[t[0]], ids[t[1]], ids[t[2]]);
  return Triangulation(points, std::move(tris));
}

bool is_delaunay(const Triangulation& tri) {
  const auto& pts = tri.points();
  for (const auto& t : tri.triangles()) {
    if (t.contains(kInfiniteVertex)) continue;
    for (const auto& [id, p] : pts) {
      if (t.contains(id)) continue;
      if (incircle(pts.at(t.v[0]), pts.at(t.v[1]), pts.at(t.v[2]), p) >= 0) return false;
    }
  }
  return true;
}

}  // namespace braidshear
