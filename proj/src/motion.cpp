#include "braidshear/motion.hpp"

#include <nlohmann/json.hpp>

#include "braidshear/errors.hpp"

namespace braidshear {

namespace {

// Tan-half-angle map of the quarter circle: s in [0, 1] to (cos, sin).
std::pair<Rational, Rational> quarter(const Rational& s) {
  const Rational s2 = s * s;
  const Rational den = Rational(1) + s2;
  return {(Rational(1) - s2) / den, Rational(2) * s / den};
}

}  // namespace

Trajectory Trajectory::stationary(Point at) {
  Trajectory tr;
  tr.kind = Kind::kStationary;
  tr.start = at;
  tr.center = std::move(at);
  return tr;
}

Trajectory Trajectory::arc(Point start, Point center, int turn, Rational bulge) {
  if (turn != 1 && turn != -1) throw ConfigError("arc turn must be +1 or -1");
  if (start == center) throw ConfigError("arc start coincides with its center");
  if (bulge <= Rational(0)) throw ConfigError("arc bulge must be positive");
  Trajectory tr;
  tr.kind = Kind::kArc;
  tr.start = std::move(start);
  tr.center = std::move(center);
  tr.turn = turn;
  tr.bulge = std::move(bulge);
  return tr;
}

Point Trajectory::at(const Rational& t) const {
  if (kind == Kind::kStationary) return start;
  Rational c;
  Rational s;
  if (t <= Rational(1, 2)) {
    std::tie(c, s) = quarter(Rational(2) * t);
  } else {
    auto [c0, s0] = quarter(Rational(2) * t - Rational(1));
    c = -s0;
    s = c0;
  }
  const Rational dx = start.x - center.x;
  const Rational dy = start.y - center.y;
  const Rational k = bulge * Rational(turn) * s;
  return {center.x + c * dx - k * dy, center.y + c * dy + k * dx};
}

Motion::Motion(int n, std::vector<Stage> stages) : n_(n), stages_(std::move(stages)) {
  if (n < 1) throw ConfigError("motion needs at least one strand");
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    const auto& strands = stages_[s].strands;
    if (strands.size() != static_cast<std::size_t>(n) || strands.begin()->first != 1 ||
        strands.rbegin()->first != n) {
      throw ConfigError("stage " + std::to_string(s) + " must list strands 1.." + std::to_string(n));
    }
    if (s == 0) continue;
    for (const auto& [id, tr] : strands) {
      if (!(stages_[s - 1].strands.at(id).end() == tr.start)) {
        throw ConfigError("strand " + std::to_string(id) + " jumps at the start of stage " + std::to_string(s));
      }
    }
  }
  if (!stages_.empty()) {
    for (const auto& [id, tr] : stages_.front().strands) initial_[id] = tr.start;
  }
  auto check_distinct = [](const std::map<VertexId, Point>& pts, const std::string& where) {
    for (auto a = pts.begin(); a != pts.end(); ++a) {
      for (auto b = std::next(a); b != pts.end(); ++b) {
        if (a->second == b->second) {
          throw ConfigError("strands " + std::to_string(a->first) + " and " + std::to_string(b->first) +
                            " coincide " + where);
        }
      }
    }
  };
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    check_distinct(positions(s, Rational(0)), "at the start of stage " + std::to_string(s));
  }
  if (!stages_.empty()) check_distinct(final_positions(), "at the end of the motion");
}

Motion Motion::still(const std::map<VertexId, Point>& start) {
  Motion m;
  m.n_ = static_cast<int>(start.size());
  m.initial_ = start;
  return m;
}

std::map<VertexId, Point> Motion::positions(std::size_t stage, const Rational& t) const {
  if (stage >= stages_.size()) throw ConfigError("stage index " + std::to_string(stage) + " out of range");
  if (t < Rational(0) || t > Rational(1)) throw ConfigError("local time " + t.to_string() + " outside [0, 1]");
  std::map<VertexId, Point> out;
  for (const auto& [id, tr] : stages_[stage].strands) out[id] = tr.at(t);
  return out;
}

std::map<VertexId, Point> Motion::positions_at_global(const Rational& time) const {
  if (time < Rational(0) || time > Rational(static_cast<long>(stages_.size()))) {
    throw ConfigError("time " + time.to_string() + " outside [0, " + std::to_string(stages_.size()) + "]");
  }
  if (stages_.empty()) return initial_;
  const mpz_class whole = time.get().get_num() / time.get().get_den();
  std::size_t stage = whole.get_ui();
  if (stage == stages_.size()) --stage;
  return positions(stage, time - Rational(static_cast<long>(stage)));
}

std::map<VertexId, Point> Motion::final_positions() const {
  if (stages_.empty()) return initial_;
  return positions(stages_.size() - 1, Rational(1));
}

Point position_at(const Motion& m, VertexId strand, std::size_t stage, const Rational& t) {
  const auto pts = m.positions(stage, t);
  auto it = pts.find(strand);
  if (it == pts.end()) throw ConfigError("unknown strand " + std::to_string(strand));
  return it->second;
}

namespace {

using nlohmann::json;

Point parse_point(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw ConfigError(std::string("field '") + field + "' must be [\"p/q\", \"p/q\"]");
  }
  return {Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>())};
}

json point_json(const Point& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

}  // namespace

Motion motion_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("motion JSON: ") + e.what(), e.byte, "JSON value");
  }
  json stages = doc;
  int n = 0;
  if (doc.is_object()) {
    stages = doc.value("stages", json::array());
    n = doc.value("n", 0);
  }
  if (!stages.is_array()) throw ConfigError("motion must be a list of stages");
  std::vector<Stage> out;
  try {
    for (const auto& stage : stages) {
      Stage st;
      for (const auto& rec : stage) {
        const int id = rec.at("strand").get<int>();
        const std::string kind = rec.at("kind").get<std::string>();
        Trajectory tr;
        if (kind == "stationary") {
          tr = Trajectory::stationary(parse_point(rec.contains("start") ? rec["start"] : rec.at("center"), "start"));
        } else if (kind == "arc") {
          const std::string turns = rec.at("turns").get<std::string>();
          int turn = 0;
          if (turns == "+half") {
            turn = 1;
          } else if (turns == "-half" || turns == "−half") {
            turn = -1;
          } else {
            throw ConfigError("turns must be \"+half\" or \"-half\", got \"" + turns + "\"");
          }
          Rational bulge(1);
          if (rec.contains("bulge")) bulge = Rational::parse(rec["bulge"].get<std::string>());
          tr = Trajectory::arc(parse_point(rec.at("start"), "start"), parse_point(rec.at("center"), "center"), turn,
                               bulge);
        } else {
          throw ConfigError("unknown trajectory kind \"" + kind + "\"");
        }
        if (!st.strands.emplace(id, tr).second) throw ConfigError("strand listed twice in one stage");
        n = std::max(n, id);
      }
      out.push_back(std::move(st));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("motion JSON: ") + e.what());
  }
  if (out.empty()) throw ConfigError("motion has no stages; use Motion::still for a static point set");
  return Motion(n, std::move(out));
}

std::string motion_to_json(const Motion& m) {
  json stages = json::array();
  for (const auto& stage : m.stages()) {
    json recs = json::array();
    for (const auto& [id, tr] : stage.strands) {
      json rec{{"strand", id}};
      if (tr.kind == Trajectory::Kind::kStationary) {
        rec["kind"] = "stationary";
        rec["start"] = point_json(tr.start);
      } else {
        rec["kind"] = "arc";
        rec["start"] = point_json(tr.start);
        rec["center"] = point_json(tr.center);
        rec["turns"] = tr.turn > 0 ? "+half" : "-half";
        rec["bulge"] = tr.bulge.to_string();
      }
      recs.push_back(std::move(rec));
    }
    stages.push_back(std::move(recs));
  }
  return json{{"n", m.n()}, {"stages", stages}}.dump(2);
}

}  // namespace braidshear
