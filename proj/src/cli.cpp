#include "braidshear/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "braidshear/coordinates.hpp"
#include "braidshear/delaunay.hpp"
#include "braidshear/errors.hpp"
#include "braidshear/svg.hpp"

namespace braidshear {

namespace {

using nlohmann::json;

struct Flags {
  std::optional<int> n;
  std::optional<std::string> system;
  std::optional<std::string> epsilon;
  std::optional<std::string> bulge;
  std::string config;
  std::string out;
};

struct RunConfig {
  SlotConfig slots;
  LabelSystem system = LabelSystem::kPtolemy;
  InvariantOptions options;
  std::string out;
};

int max_retries_from_env(std::size_t schedule) {
  const char* raw = std::getenv("BRAIDSHEAR_MAX_RETRIES");
  if (raw == nullptr || *raw == '\0') return 3;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > static_cast<long>(schedule)) {
    throw ConfigError("BRAIDSHEAR_MAX_RETRIES must be an integer in [0, " + std::to_string(schedule) + "]");
  }
  return static_cast<int>(value);
}

// Flags win over the config file; n falls back to the word's largest index + 1.
RunConfig resolve(const Flags& flags, const std::vector<BraidWord>& words) {
  json file = json::object();
  if (!flags.config.empty()) {
    std::ifstream in(flags.config);
    if (!in) throw ConfigError("cannot read config file " + flags.config);
    try {
      file = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("config file: ") + e.what(), e.byte, "JSON object");
    }
    if (!file.is_object()) throw ConfigError("config file must hold a JSON object");
  }
  auto text_field = [&](const std::optional<std::string>& flag, const char* key) -> std::optional<std::string> {
    if (flag) return flag;
    if (!file.contains(key)) return std::nullopt;
    if (!file[key].is_string()) throw ConfigError(std::string("config field '") + key + "' must be a string");
    return file[key].get<std::string>();
  };

  RunConfig cfg;
  if (flags.n) {
    cfg.slots.n = *flags.n;
  } else if (file.contains("n")) {
    if (!file["n"].is_number_integer()) throw ConfigError("config field 'n' must be an integer");
    cfg.slots.n = file["n"].get<int>();
  } else {
    cfg.slots.n = 0;
    for (const auto& w : words) cfg.slots.n = std::max(cfg.slots.n, w.n);
    if (words.empty()) cfg.slots.n = 3;
  }
  if (auto eps = text_field(flags.epsilon, "epsilon")) cfg.slots.epsilon = Rational::parse(*eps);
  if (auto bulge = text_field(flags.bulge, "bulge")) cfg.slots.bulge = Rational::parse(*bulge);
  if (auto system = text_field(flags.system, "system")) cfg.system = parse_label_system(*system);
  cfg.out = flags.out;
  if (cfg.slots.n == 2) throw ConfigError("n = 2 has no triangulation; use at least 3 strands");
  if (cfg.slots.n < 3) throw ConfigError("n must be at least 3, got " + std::to_string(cfg.slots.n));
  cfg.slots.validate();
  for (const auto& w : words) {
    for (const auto& l : w.letters) {
      if (l.index >= cfg.slots.n) {
        throw ConfigError("generator s" + std::to_string(l.index) + " out of range for n = " +
                          std::to_string(cfg.slots.n));
      }
    }
  }
  cfg.options.max_retries = max_retries_from_env(cfg.options.jitter.size());
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw ConfigError("cannot write " + cfg.out);
  file << text << "\n";
}

void add_common(CLI::App* cmd, Flags& flags, bool with_system) {
  cmd->add_option("--n", flags.n, "Number of strands");
  if (with_system) cmd->add_option("--system", flags.system, "Label system: ptolemy or shear");
  cmd->add_option("--epsilon", flags.epsilon, "Slot parabola flattening P/Q (default 1/64)");
  cmd->add_option("--bulge", flags.bulge, "Arc height factor P/Q (default 1)");
  cmd->add_option("--config", flags.config, "JSON file with n, epsilon, bulge and system");
  cmd->add_option("--out", flags.out, "Write the result to this file instead of standard output");
}

int cmd_invariant(const std::string& word_text, const Flags& flags, std::ostream& out) {
  const BraidWord word = parse_braid(word_text, flags.n);
  const RunConfig cfg = resolve(flags, {word});
  emit(cfg, invariant_to_json(run_invariant(word, cfg.slots, cfg.system, cfg.options)), out);
  return 0;
}

int cmd_equal(const std::string& a_text, const std::string& b_text, const Flags& flags, std::ostream& out) {
  const BraidWord a = parse_braid(a_text, flags.n);
  const BraidWord b = parse_braid(b_text, flags.n);
  const RunConfig cfg = resolve(flags, {a, b});
  const InvariantMap ta = run_invariant(a, cfg.slots, cfg.system, cfg.options);
  const InvariantMap tb = run_invariant(b, cfg.slots, cfg.system, cfg.options);
  if (const auto diff = first_difference(ta, tb)) {
    std::ostringstream line;
    line << "DIFFERENT " << *diff;
    emit(cfg, line.str(), out);
    return 1;
  }
  emit(cfg, "EQUAL", out);
  return 0;
}

int cmd_verify(const Flags& flags, std::ostream& out) {
  std::vector<LabelSystem> systems{LabelSystem::kPtolemy, LabelSystem::kShear};
  if (flags.system) systems = {parse_label_system(*flags.system)};
  std::ostringstream report;
  bool all = true;
  for (auto system : systems) {
    const std::pair<const char*, bool> checks[] = {
        {"pentagon", check_pentagon(system)},
        {"commutativity-disjoint", check_commutativity(system, false)},
        {"commutativity-shared-edge", check_commutativity(system, true)},
        {"back-and-forth", check_involution(system)},
    };
    for (const auto& [name, ok] : checks) {
      report << (ok ? "PASS " : "FAIL ") << to_string(system) << " " << name << "\n";
      all = all && ok;
    }
  }
  RunConfig cfg;
  cfg.out = flags.out;
  std::string text = report.str();
  text.pop_back();
  emit(cfg, text, out);
  return all ? 0 : 1;
}

struct Scenario {
  Motion motion;
  Triangulation initial;
  RunConfig cfg;
};

Scenario scenario(const std::string& word_text, const std::string& motion_path, const Flags& flags) {
  Scenario s;
  if (!motion_path.empty()) {
    std::ifstream in(motion_path);
    if (!in) throw ConfigError("cannot read motion file " + motion_path);
    std::stringstream buf;
    buf << in.rdbuf();
    s.motion = motion_from_json(buf.str());
    s.cfg.out = flags.out;
    s.cfg.options.max_retries = 0;
    if (flags.system) s.cfg.system = parse_label_system(*flags.system);
    if (s.motion.n() < 3) throw ConfigError("n = 2 has no triangulation; use at least 3 strands");
    s.initial = delaunay(s.motion.initial());
    return s;
  }
  const BraidWord word = parse_braid(word_text, flags.n);
  s.cfg = resolve(flags, {word});
  s.initial = initial_triangulation(s.cfg.slots).triangulation;
  // Same retry policy as the invariant, so both see the same motion.
  for (int attempt = 0;; ++attempt) {
    SlotConfig trial = s.cfg.slots;
    if (attempt > 0) trial.bulge += s.cfg.options.jitter[attempt - 1];
    s.motion = compile_motion(word, trial).motion;
    try {
      detect_flips(s.motion, s.initial, s.cfg.options.kinetic);
      return s;
    } catch (const DegeneracyError&) {
      if (attempt >= s.cfg.options.max_retries) throw;
    }
  }
}

int cmd_flips(const std::string& word_text, const std::string& motion_path, const Flags& flags, std::ostream& out) {
  const Scenario s = scenario(word_text, motion_path, flags);
  emit(s.cfg, events_to_json(detect_flips(s.motion, s.initial, s.cfg.options.kinetic)), out);
  return 0;
}

int cmd_snapshot(const std::string& word_text, const std::string& motion_path, const std::string& time_text,
                 bool no_labels, const Flags& flags, std::ostream& out) {
  const Scenario s = scenario(word_text, motion_path, flags);
  const Rational time = Rational::parse(time_text);
  const auto positions = s.motion.positions_at_global(time);
  const auto events = detect_flips(s.motion, s.initial, s.cfg.options.kinetic);

  // Flips whose bracket ends by `time`; the stored stage-local times are
  // shifted to global time.
  LabelState state = LabelState::seeded(s.initial.closed());
  for (const auto& ev : events) {
    if (Rational(static_cast<long>(ev.stage)) + ev.t_hi > time) break;
    state = apply_flip(state, s.cfg.system, ev.quad);
  }
  const Triangulation drawn(positions, state.triangulation.triangles());
  std::map<Edge, std::string> labels;
  if (!no_labels) {
    for (const auto& [e, f] : state.labels) labels[e] = f.to_string();
  }
  emit(s.cfg, render_svg(drawn, labels), out);
  return 0;
}

int fail(std::ostream& err, int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  json doc{{"error", kind}, {"message", message}};
  doc.update(extra);
  err << doc.dump() << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid invariants from flips of a moving Delaunay triangulation", "braidshear"};
  app.require_subcommand(1);
  Flags flags;
  std::string word_a;
  std::string word_b;
  std::string motion_path;
  std::string time_text = "0";
  bool no_labels = false;

  auto* invariant = app.add_subcommand("invariant", "Print T(word) as JSON");
  invariant->add_option("word", word_a, "Braid word, e.g. \"s1 s2'\"")->required();
  add_common(invariant, flags, true);

  auto* equal = app.add_subcommand("equal", "Compare the invariants of two words");
  equal->add_option("word_a", word_a)->required();
  equal->add_option("word_b", word_b)->required();
  add_common(equal, flags, true);

  auto* verify = app.add_subcommand("verify-relations", "Check the flip relations symbolically");
  verify->add_option("--system", flags.system, "Only this label system");
  verify->add_option("--out", flags.out, "Write the report to this file");

  auto* flips = app.add_subcommand("flips", "Print the flip events of a word's motion as JSON");
  flips->add_option("word", word_a, "Braid word");
  flips->add_option("--motion", motion_path, "Read the motion from a JSON file instead of a word");
  add_common(flips, flags, false);

  auto* snapshot = app.add_subcommand("snapshot", "Draw the triangulation at a time as SVG");
  snapshot->add_option("word", word_a, "Braid word (default empty)");
  snapshot->add_option("--t", time_text, "Global time P/Q in [0, number of letters]");
  snapshot->add_option("--motion", motion_path, "Read the motion from a JSON file instead of a word");
  snapshot->add_flag("--no-labels", no_labels, "Leave edge labels out");
  add_common(snapshot, flags, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(err, 2, "usage", e.what());
  }

  try {
    if (invariant->parsed()) return cmd_invariant(word_a, flags, out);
    if (equal->parsed()) return cmd_equal(word_a, word_b, flags, out);
    if (verify->parsed()) return cmd_verify(flags, out);
    if (flips->parsed()) return cmd_flips(word_a, motion_path, flags, out);
    return cmd_snapshot(word_a, motion_path, time_text, no_labels, flags, out);
  } catch (const ParseError& e) {
    return fail(err, 2, "parse", e.what(), {{"position", e.position()}, {"expected", e.expected()}});
  } catch (const ConfigError& e) {
    return fail(err, 2, "config", e.what());
  } catch (const DegeneracyError& e) {
    return fail(err, 3, "degeneracy", e.what());
  } catch (const CollisionError& e) {
    return fail(err, 3, "collision", e.what());
  } catch (const DegenerateInput& e) {
    return fail(err, 3, "degenerate-input", e.what(), {{"vertices", e.vertices()}});
  } catch (const InvariantViolation& e) {
    return fail(err, 4, "invariant-violation", e.what());
  } catch (const Error& e) {
    return fail(err, 4, "internal", e.what());
  }
}

}  // namespace braidshear
