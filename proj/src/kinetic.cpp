#include "braidshear/kinetic.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "braidshear/delaunay.hpp"
#include "braidshear/errors.hpp"

namespace braidshear {

Triangulation closed_delaunay(const std::map<VertexId, Point>& points) {
  const Triangulation tri = delaunay(points);
  for (const auto& e : tri.hull_edges()) {
    const Point& a = points.at(e.a);
    const Point& b = points.at(e.b);
    for (const auto& [id, p] : points) {
      if (id == e.a || id == e.b) continue;
      if (orient(a, b, p) == 0) {
        std::vector<int> ids{e.a, e.b, id};
        std::sort(ids.begin(), ids.end());
        throw DegenerateInput(DegenerateInput::Kind::kCollinear, ids, "point on the line of a hull edge");
      }
    }
  }
  return tri.closed();
}

namespace {

using TriangleSet = std::set<std::array<VertexId, 3>>;

TriangleSet vertex_sets(const Triangulation& tri) {
  TriangleSet out;
  for (const auto& t : tri.triangles()) out.insert(t.vertex_set());
  return out;
}

// An edge flip found inside one bracket; quads are filled in during replay.
struct RawEvent {
  Rational t_lo;
  Rational t_hi;
  Edge edge;
};

struct Sample {
  Rational t;
  Triangulation tri;
};

class StageScanner {
 public:
  StageScanner(const Motion& motion, std::size_t stage, const KineticOptions& options)
      : motion_(motion), stage_(stage), options_(options), grid_width_(Integer(1), Integer(options.grid)) {}

  std::vector<RawEvent> scan() {
    Sample lo{Rational(0), at_endpoint(Rational(0))};
    Sample hi{Rational(1), at_endpoint(Rational(1))};
    resolve(lo, hi);
    return std::move(events_);
  }

 private:
  Triangulation at_endpoint(const Rational& t) {
    auto tri = try_sample(t);
    if (!tri) {
      throw DegeneracyError("degenerate configuration at local time " + t.to_string() + " of stage " +
                            std::to_string(stage_));
    }
    return *tri;
  }

  std::optional<Triangulation> try_sample(const Rational& t) {
    try {
      return closed_delaunay(motion_.positions(stage_, t));
    } catch (const DegenerateInput& e) {
      if (e.kind() == DegenerateInput::Kind::kCoincident) {
        throw CollisionError("strands " + std::to_string(e.vertices().at(0)) + " and " +
                             std::to_string(e.vertices().at(1)) + " collide at local time " + t.to_string() +
                             " of stage " + std::to_string(stage_));
      }
      return std::nullopt;
    }
  }

  // A generic split point of (lo, hi), preferring the midpoint.
  Sample split(const Rational& lo, const Rational& hi) {
    static constexpr int kOffsets[] = {8, 7, 9, 6, 10, 5, 11, 4, 12, 3, 13, 2, 14, 1, 15};
    const Rational step = (hi - lo) / Rational(16);
    for (int k : kOffsets) {
      const Rational t = lo + step * Rational(k);
      if (auto tri = try_sample(t)) return {t, std::move(*tri)};
    }
    throw DegeneracyError("no generic sample time in (" + lo.to_string() + ", " + hi.to_string() + ") of stage " +
                          std::to_string(stage_));
  }

  void resolve(const Sample& lo, const Sample& hi) {
    const Rational width = hi.t - lo.t;
    if (width <= grid_width_) {
      if (lo.tri.same_complex(hi.tri)) return;
      if (width < options_.min_width) {
        emit(lo, hi);
        return;
      }
    }
    const Sample mid = split(lo.t, hi.t);
    resolve(lo, mid);
    resolve(mid, hi);
  }

  void emit(const Sample& lo, const Sample& hi) {
    const TriangleSet after = vertex_sets(hi.tri);
    std::vector<Edge> flips;
    std::set<std::array<VertexId, 3>> touched;
    for (const auto& e : lo.tri.edges()) {
      if (hi.tri.has_edge(e)) continue;
      const Quad q = quad_around(lo.tri, e);
      if (lo.tri.has_edge(q.other_diagonal()) || !hi.tri.has_edge(q.other_diagonal())) throw_unseparated(lo, hi);
      for (const auto& t : {Triangle(q.u, q.v, q.w), Triangle(q.u, q.w, q.z)}) {
        if (!touched.insert(t.vertex_set()).second) throw_unseparated(lo, hi);
      }
      flips.push_back(e);
    }
    Triangulation cur = lo.tri;
    for (const auto& e : flips) cur = flip(cur, e, FlipCheck::kCombinatorial);
    if (flips.empty() || vertex_sets(cur) != after) throw_unseparated(lo, hi);
    for (const auto& e : flips) events_.push_back({lo.t, hi.t, e});
  }

  [[noreturn]] void throw_unseparated(const Sample& lo, const Sample& hi) const {
    throw DegeneracyError("flips in (" + lo.t.to_string() + ", " + hi.t.to_string() + ") of stage " +
                          std::to_string(stage_) + " cannot be separated and overlap");
  }

  const Motion& motion_;
  std::size_t stage_;
  const KineticOptions& options_;
  Rational grid_width_;
  std::vector<RawEvent> events_;
};

}  // namespace

std::vector<FlipEvent> detect_flips(const Motion& motion, const Triangulation& initial,
                                    const KineticOptions& options) {
  if (options.grid < 1) throw ConfigError("kinetic grid must be positive");
  if (options.min_width <= Rational(0)) throw ConfigError("minimum bracket width must be positive");
  Triangulation state = initial.has_infinite_vertex() ? initial : initial.closed();
  if (!state.same_complex(closed_delaunay(motion.initial()))) {
    throw ConfigError("initial triangulation is not the Delaunay triangulation of the start positions");
  }

  const std::size_t count = motion.stage_count();
  std::vector<std::vector<RawEvent>> per_stage(count);
  if (options.parallel && count > 1) {
    std::vector<std::future<std::vector<RawEvent>>> jobs;
    for (std::size_t s = 0; s < count; ++s) {
      jobs.push_back(std::async(std::launch::async, [&, s] { return StageScanner(motion, s, options).scan(); }));
    }
    for (std::size_t s = 0; s < count; ++s) per_stage[s] = jobs[s].get();
  } else {
    for (std::size_t s = 0; s < count; ++s) per_stage[s] = StageScanner(motion, s, options).scan();
  }

  std::vector<FlipEvent> events;
  for (std::size_t s = 0; s < count; ++s) {
    for (const auto& raw : per_stage[s]) {
      const Quad q = quad_around(state, raw.edge);
      state = flip(state, raw.edge, FlipCheck::kCombinatorial);
      events.push_back({s, raw.t_lo, raw.t_hi, raw.edge, q});
    }
    const auto end = motion.positions(s, Rational(1));
    if (!state.same_complex(closed_delaunay(end))) {
      throw InvariantViolation("replayed flips of stage " + std::to_string(s) + " miss the final triangulation");
    }
  }
  return events;
}

Triangulation replay(const Triangulation& initial, const std::vector<FlipEvent>& events) {
  Triangulation state = initial.has_infinite_vertex() ? initial : initial.closed();
  for (const auto& ev : events) {
    if (!state.has_edge(ev.edge) || !state.is_interior(ev.edge)) {
      std::ostringstream msg;
      msg << "event edge " << ev.edge << " cannot be flipped in " << state;
      throw InvariantViolation(msg.str());
    }
    state = flip(state, ev.edge, FlipCheck::kCombinatorial);
  }
  return state;
}

std::string events_to_json(const std::vector<FlipEvent>& events) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& ev : events) {
    out.push_back({{"stage", ev.stage},
                   {"t_lo", ev.t_lo.to_string()},
                   {"t_hi", ev.t_hi.to_string()},
                   {"edge", {ev.edge.a, ev.edge.b}},
                   {"quad", {ev.quad.u, ev.quad.v, ev.quad.w, ev.quad.z}}});
  }
  return out.dump(2);
}

}  // namespace braidshear
