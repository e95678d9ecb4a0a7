#include "braidshear/braid.hpp"

#include <algorithm>
#include <cctype>

#include "braidshear/delaunay.hpp"
#include "braidshear/errors.hpp"

namespace braidshear {

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.index) + (l.sign < 0 ? "'" : "");
  }
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out{n, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->index, -it->sign});
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord out{std::max(a.n, b.n), a.letters};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord parse_braid(std::string_view text, std::optional<int> n) {
  BraidWord word;
  std::vector<std::size_t> positions;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != 's') {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' at position " + std::to_string(i), i,
                       "\"s\"");
    }
    ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("missing generator index at position " + std::to_string(i), i, "INT");
    if (i - start > 6) throw ParseError("generator index too large at position " + std::to_string(start), start, "INT");
    const int index = std::stoi(std::string(text.substr(start, i - start)));
    if (index == 0) throw ParseError("generator index 0 at position " + std::to_string(start), start, "INT >= 1");
    int sign = 1;
    if (i < text.size() && text[i] == '\'') {
      sign = -1;
      ++i;
    } else if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 3) != "^-1") throw ParseError("malformed inverse at position " + std::to_string(i), i, "\"^-1\"");
      sign = -1;
      i += 3;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' at position " + std::to_string(i), i,
                       "whitespace, \"'\" or \"^-1\"");
    }
    word.letters.push_back({index, sign});
    positions.push_back(start);
    skip_space();
  }
  int max_index = 0;
  for (const auto& l : word.letters) max_index = std::max(max_index, l.index);
  word.n = n ? *n : std::max(max_index + 1, 2);
  if (word.n < 2) throw ConfigError("a braid needs at least 2 strands");
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    if (word.letters[k].index >= word.n) {
      throw ParseError("generator s" + std::to_string(word.letters[k].index) + " out of range for n = " +
                           std::to_string(word.n),
                       positions[k], "INT in [1, " + std::to_string(word.n - 1) + "]");
    }
  }
  return word;
}

void SlotConfig::validate() const {
  if (n < 2) throw ConfigError("n must be at least 2, got " + std::to_string(n));
  if (epsilon <= Rational(0)) throw ConfigError("epsilon must be positive");
  if (bulge <= Rational(0)) throw ConfigError("bulge must be positive");
}

Point SlotConfig::slot(int k) const { return {Rational(k), epsilon * Rational(static_cast<long>(k) * k)}; }

std::map<VertexId, Point> SlotConfig::slots() const {
  std::map<VertexId, Point> out;
  for (int k = 1; k <= n; ++k) out[k] = slot(k);
  return out;
}

CompiledBraid compile_motion(const BraidWord& word, const SlotConfig& cfg) {
  cfg.validate();
  if (word.n > cfg.n) {
    throw ConfigError("word on " + std::to_string(word.n) + " strands does not fit n = " + std::to_string(cfg.n));
  }
  std::vector<VertexId> strand_at(cfg.n + 1);
  for (int k = 1; k <= cfg.n; ++k) strand_at[k] = k;
  std::vector<Stage> stages;
  for (const auto& letter : word.letters) {
    const int i = letter.index;
    if (i < 1 || i >= cfg.n) throw ConfigError("generator s" + std::to_string(i) + " out of range");
    const Point left = cfg.slot(i);
    const Point right = cfg.slot(i + 1);
    const Point center{(left.x + right.x) / Rational(2), (left.y + right.y) / Rational(2)};
    Stage stage;
    for (int k = 1; k <= cfg.n; ++k) {
      const VertexId strand = strand_at[k];
      if (k == i || k == i + 1) {
        stage.strands[strand] = Trajectory::arc(cfg.slot(k), center, letter.sign, cfg.bulge);
      } else {
        stage.strands[strand] = Trajectory::stationary(cfg.slot(k));
      }
    }
    stages.push_back(std::move(stage));
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  CompiledBraid out;
  out.motion = stages.empty() ? Motion::still(cfg.slots()) : Motion(cfg.n, std::move(stages));
  for (int k = 1; k <= cfg.n; ++k) out.permutation[strand_at[k]] = k;
  return out;
}

SlotTriangulation initial_triangulation(const SlotConfig& cfg) {
  cfg.validate();
  SlotTriangulation out{delaunay(cfg.slots()), {}};
  out.edges = out.triangulation.edges();
  return out;
}

bool arc_clear_of_slots(const SlotConfig& cfg, int i) {
  cfg.validate();
  const Point a = cfg.slot(i);
  const Point b = cfg.slot(i + 1);
  const Point m{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
  const Rational dx = a.x - m.x;
  const Rational dy = a.y - m.y;
  const Rational d2 = dx * dx + dy * dy;
  for (int k = 1; k <= cfg.n; ++k) {
    if (k == i || k == i + 1) continue;
    const Point p = cfg.slot(k);
    const Rational px = p.x - m.x;
    const Rational py = p.y - m.y;
    // Coordinates along the chord and across it, in units of the semi-axes.
    const Rational u = (px * dx + py * dy) / d2;
    const Rational v = (py * dx - px * dy) / (d2 * cfg.bulge);
    if (u * u + v * v <= Rational(1)) return false;
  }
  return true;
}

}  // namespace braidshear
