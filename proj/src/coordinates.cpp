#include "braidshear/coordinates.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "braidshear/errors.hpp"
#include "braidshear/poly_format.hpp"

namespace braidshear {

std::string to_string(LabelSystem system) { return system == LabelSystem::kPtolemy ? "ptolemy" : "shear"; }

LabelSystem parse_label_system(const std::string& text) {
  if (text == "ptolemy") return LabelSystem::kPtolemy;
  if (text == "shear") return LabelSystem::kShear;
  throw ConfigError("unknown label system \"" + text + "\"; expected ptolemy or shear");
}

LabelState LabelState::seeded(Triangulation tri) {
  LabelState state{std::move(tri), {}};
  for (const auto& e : state.triangulation.edges()) {
    state.labels.emplace(e, RationalFunction::variable(edge_variable(e.a, e.b)));
  }
  return state;
}

void LabelState::validate() const {
  const auto edges = triangulation.edges();
  bool ok = edges.size() == labels.size();
  for (std::size_t k = 0; ok && k < edges.size(); ++k) ok = labels.count(edges[k]) != 0;
  if (!ok) throw InvariantViolation("label keys differ from the triangulation's edges");
}

namespace {

const RationalFunction& label(const LabelState& state, const Edge& e) {
  auto it = state.labels.find(e);
  if (it == state.labels.end()) {
    std::ostringstream msg;
    msg << "edge " << e << " has no label";
    throw InvariantViolation(msg.str());
  }
  return it->second;
}

void check_quad(const LabelState& state, const Quad& quad) {
  if (!(quad_around(state.triangulation, quad.diagonal()) == quad)) {
    std::ostringstream msg;
    msg << "quad (" << quad.u << "," << quad.v << "," << quad.w << "," << quad.z << ") does not surround "
        << quad.diagonal();
    throw InvariantViolation(msg.str());
  }
}

LabelState flipped(const LabelState& state, const Quad& quad) {
  LabelState out{flip(state.triangulation, quad.diagonal(), FlipCheck::kCombinatorial), state.labels};
  out.labels.erase(quad.diagonal());
  return out;
}

}  // namespace

LabelState apply_ptolemy_flip(const LabelState& state, const Quad& quad) {
  check_quad(state, quad);
  const auto& x = label(state, quad.diagonal());
  const auto sides = quad.sides();
  const auto& a = label(state, sides[0]);
  const auto& b = label(state, sides[1]);
  const auto& c = label(state, sides[2]);
  const auto& d = label(state, sides[3]);
  LabelState out = flipped(state, quad);
  out.labels.emplace(quad.other_diagonal(), (a * c + b * d) / x);
  return out;
}

LabelState apply_shear_flip(const LabelState& state, const Quad& quad, ShearConvention convention) {
  check_quad(state, quad);
  const RationalFunction e = label(state, quad.diagonal());
  const auto sides = quad.sides();
  for (const auto& s : sides) label(state, s);
  const RationalFunction grow = RationalFunction(1) + e;
  const RationalFunction shrink = e / grow;
  const bool standard = convention == ShearConvention::kStandard;
  LabelState out = flipped(state, quad);
  for (std::size_t k = 0; k < 4; ++k) {
    const bool gets_grow = (k % 2 == 0) == standard;
    auto& l = out.labels.at(sides[k]);
    l = l * (gets_grow ? grow : shrink);
  }
  out.labels.emplace(quad.other_diagonal(), rf_inv(e));
  return out;
}

LabelState apply_flip(const LabelState& state, LabelSystem system, const Quad& quad, ShearConvention convention) {
  return system == LabelSystem::kPtolemy ? apply_ptolemy_flip(state, quad)
                                         : apply_shear_flip(state, quad, convention);
}

bool same_labels(const LabelState& a, const LabelState& b, const EqualityOptions& options) {
  if (a.labels.size() != b.labels.size()) return false;
  for (const auto& [e, f] : a.labels) {
    auto it = b.labels.find(e);
    if (it == b.labels.end() || !rf_equal(f, it->second, options)) return false;
  }
  return true;
}

InvariantMap run_invariant(const BraidWord& word, const SlotConfig& cfg, LabelSystem system,
                           const InvariantOptions& options) {
  cfg.validate();
  if (cfg.n < 3) throw ConfigError("n must be at least 3 for a triangulation, got " + std::to_string(cfg.n));
  const Triangulation initial = initial_triangulation(cfg).triangulation.closed();

  CompiledBraid compiled;
  std::vector<FlipEvent> events;
  int attempt = 0;
  for (;; ++attempt) {
    SlotConfig trial = cfg;
    if (attempt > 0) {
      if (static_cast<std::size_t>(attempt) > options.jitter.size()) {
        throw ConfigError("jitter schedule is shorter than the retry budget");
      }
      trial.bulge = cfg.bulge + options.jitter[attempt - 1];
    }
    try {
      compiled = compile_motion(word, trial);
      events = detect_flips(compiled.motion, initial, options.kinetic);
      break;
    } catch (const DegeneracyError&) {
      if (attempt >= options.max_retries) throw;
    }
  }

  LabelState state = LabelState::seeded(initial);
  for (std::size_t k = 0; k < events.size(); ++k) {
    const FlipEvent& ev = events[k];
    const bool paired = k + 1 < events.size() && events[k + 1].stage == ev.stage && events[k + 1].t_lo == ev.t_lo;
    if (paired) {
      const Quad other = quad_around(state.triangulation, events[k + 1].edge);
      const LabelState ab = apply_flip(apply_flip(state, system, ev.quad), system, events[k + 1].quad);
      const LabelState ba = apply_flip(apply_flip(state, system, other), system,
                                       quad_around(apply_flip(state, system, other).triangulation, ev.edge));
      if (!same_labels(ab, ba)) throw InvariantViolation("simultaneous flips do not commute");
    }
    state = apply_flip(state, system, ev.quad);
  }
  state.validate();

  std::map<VertexId, VertexId> rename = compiled.permutation;
  rename[kInfiniteVertex] = kInfiniteVertex;
  if (!state.triangulation.relabeled(rename).same_complex(initial)) {
    throw InvariantViolation("final triangulation differs from the initial one");
  }
  InvariantMap out;
  out.n = cfg.n;
  out.system = system;
  out.word = word.to_string();
  out.retries = attempt;
  for (const auto& [e, f] : state.labels) {
    const Edge slot_edge(rename.at(e.a), rename.at(e.b));
    (slot_edge.touches_infinity() ? out.hull_entries : out.entries).emplace(slot_edge, f);
  }
  return out;
}

namespace {

bool same_entries(const std::map<Edge, RationalFunction>& a, const std::map<Edge, RationalFunction>& b,
                  const EqualityOptions& options, std::optional<Edge>* first) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    Edge e;
    bool differ = false;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      e = (ia++)->first;
      differ = true;
    } else if (ia == a.end() || ib->first < ia->first) {
      e = (ib++)->first;
      differ = true;
    } else {
      e = ia->first;
      differ = !rf_equal(ia->second, ib->second, options);
      ++ia;
      ++ib;
    }
    if (differ) {
      if (first) *first = e;
      return false;
    }
  }
  return true;
}

}  // namespace

bool invariants_equal(const InvariantMap& a, const InvariantMap& b, const EqualityOptions& options) {
  return same_entries(a.hull_entries, b.hull_entries, options, nullptr) &&
         same_entries(a.entries, b.entries, options, nullptr);
}

std::optional<Edge> first_difference(const InvariantMap& a, const InvariantMap& b, const EqualityOptions& options) {
  std::optional<Edge> first;
  // Hull edges start with 0 and so sort first.
  if (!same_entries(a.hull_entries, b.hull_entries, options, &first)) return first;
  same_entries(a.entries, b.entries, options, &first);
  return first;
}

std::string invariant_to_json(const InvariantMap& map) {
  auto entries = [](const std::map<Edge, RationalFunction>& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [e, f] : m) {
      out.push_back({{"edge", {e.a, e.b}},
                     {"value", {{"num", format_polynomial(f.num())}, {"den", format_polynomial(f.den())}}}});
    }
    return out;
  };
  nlohmann::ordered_json doc{{"n", map.n},
                     {"system", to_string(map.system)},
                     {"word", map.word},
                     {"entries", entries(map.entries)},
                     {"hull_entries", entries(map.hull_entries)}};
  return doc.dump(2);
}

namespace {

Triangulation polygon(std::vector<Triangle> triangles) { return Triangulation({}, std::move(triangles)); }

LabelState flip_edge(const LabelState& s, LabelSystem system, const Edge& e, ShearConvention convention) {
  return apply_flip(s, system, quad_around(s.triangulation, e), convention);
}

}  // namespace

PentagonPaths pentagon_paths(LabelSystem system, ShearConvention convention) {
  const LabelState start =
      LabelState::seeded(polygon({Triangle(1, 2, 3), Triangle(1, 3, 4), Triangle(1, 4, 5)}));
  PentagonPaths out{start, start};
  for (const Edge& e : {Edge(1, 4), Edge(1, 3)}) out.two_flip = flip_edge(out.two_flip, system, e, convention);
  for (const Edge& e : {Edge(1, 3), Edge(1, 4), Edge(2, 4)}) {
    out.three_flip = flip_edge(out.three_flip, system, e, convention);
  }
  return out;
}

bool check_pentagon(LabelSystem system, ShearConvention convention) {
  const PentagonPaths p = pentagon_paths(system, convention);
  return p.two_flip.triangulation.same_complex(p.three_flip.triangulation) && same_labels(p.two_flip, p.three_flip);
}

bool check_commutativity(LabelSystem system, bool shared_edge, ShearConvention convention) {
  LabelState start;
  Edge first;
  Edge second;
  if (shared_edge) {
    start = LabelState::seeded(
        polygon({Triangle(1, 2, 3), Triangle(1, 3, 4), Triangle(1, 4, 5), Triangle(1, 5, 6)}));
    first = {1, 3};
    second = {1, 5};
  } else {
    start = LabelState::seeded(polygon({Triangle(1, 2, 3), Triangle(1, 3, 4), Triangle(1, 4, 5), Triangle(1, 5, 8),
                                        Triangle(5, 6, 7), Triangle(5, 7, 8)}));
    first = {1, 3};
    second = {5, 7};
  }
  const LabelState ab =
      flip_edge(flip_edge(start, system, first, convention), system, second, convention);
  const LabelState ba =
      flip_edge(flip_edge(start, system, second, convention), system, first, convention);
  return ab.triangulation.same_complex(ba.triangulation) && same_labels(ab, ba);
}

bool check_involution(LabelSystem system, ShearConvention convention) {
  const LabelState start = LabelState::seeded(polygon({Triangle(1, 2, 3), Triangle(1, 3, 4)}));
  const LabelState once = flip_edge(start, system, {1, 3}, convention);
  const LabelState twice = flip_edge(once, system, {2, 4}, convention);
  return twice.triangulation == start.triangulation && same_labels(twice, start);
}

}  // namespace braidshear
