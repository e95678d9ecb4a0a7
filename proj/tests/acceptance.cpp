// Acceptance suite: one line per criterion. With arguments, runs only the
// listed criterion numbers. Exit status is 0 iff every selected criterion
// passed within its time budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "braidshear/cli.hpp"
#include "braidshear/coordinates.hpp"
#include "braidshear/delaunay.hpp"
#include "braidshear/errors.hpp"
#include "oracle.hpp"

namespace braidshear {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const LabelSystem kSystems[] = {LabelSystem::kPtolemy, LabelSystem::kShear};

std::string cli_equal(int n, LabelSystem system, const std::string& a, const std::string& b, int* code) {
  std::ostringstream out;
  std::ostringstream err;
  *code = run_cli({"equal", "--n", std::to_string(n), "--system", to_string(system), "--epsilon", "1/64", "--bulge",
                   "1", a, b},
                  out, err);
  std::string text = out.str() + err.str();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

Outcome equal_in_both_systems(int n, const std::string& a, const std::string& b) {
  Outcome o{true, ""};
  for (auto system : kSystems) {
    int code = 0;
    const std::string text = cli_equal(n, system, a, b, &code);
    o.pass = o.pass && code == 0 && text == "EQUAL";
    o.detail += to_string(system) + "=" + text + " ";
  }
  return o;
}

Outcome pentagon_ptolemy() {
  const PentagonPaths p = pentagon_paths(LabelSystem::kPtolemy);
  const bool ends = p.two_flip.triangulation.same_complex(p.three_flip.triangulation);
  const bool ok = ends && p.two_flip.labels.size() == 7 && check_pentagon(LabelSystem::kPtolemy);
  return {ok, "7 labels, paths of 2 and 3 flips"};
}

Outcome pentagon_shear() {
  const bool standard = check_pentagon(LabelSystem::kShear, ShearConvention::kStandard);
  const bool mirrored = check_pentagon(LabelSystem::kShear, ShearConvention::kMirrored);
  std::string detail = std::string("standard convention ") + (standard ? "passes" : "fails") +
                       "; mirrored convention " + (mirrored ? "also passes (expected to fail)" : "fails");
  return {standard && !mirrored, detail};
}

Outcome far_commutativity() {
  Outcome o{true, ""};
  for (auto system : kSystems) {
    const bool ok = check_commutativity(system, false);
    o.pass = o.pass && ok;
    o.detail += "disjoint/" + to_string(system) + (ok ? "=ok " : "=FAIL ");
  }
  const bool shared = check_commutativity(LabelSystem::kShear, true);
  o.pass = o.pass && shared;
  o.detail += std::string("shared-side/shear") + (shared ? "=ok" : "=FAIL");
  return o;
}

Outcome back_and_forth() {
  Outcome o{true, ""};
  for (auto system : kSystems) {
    const bool ok = check_involution(system);
    o.pass = o.pass && ok;
    o.detail += to_string(system) + (ok ? "=ok " : "=FAIL ");
  }
  return o;
}

Outcome laurent() {
  SlotConfig cfg;
  cfg.n = 3;
  std::size_t checked = 0;
  for (const char* word : {"s1", "s1 s2", "s1 s2 s1"}) {
    const InvariantMap m = run_invariant(parse_braid(word, 3), cfg, LabelSystem::kPtolemy);
    for (const auto& table : {m.entries, m.hull_entries}) {
      for (const auto& [e, f] : table) {
        if (!rf_is_laurent(f)) {
          std::ostringstream msg;
          msg << word << " entry " << e << " = " << f << " is not Laurent";
          return {false, msg.str()};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " entries"};
}

Outcome isotopy() {
  Outcome o{true, ""};
  for (auto system : kSystems) {
    SlotConfig low;
    low.n = 3;
    SlotConfig high = low;
    high.bulge = Rational(2);
    const BraidWord word = parse_braid("s1 s2", 3);
    const bool ok = invariants_equal(run_invariant(word, low, system), run_invariant(word, high, system));
    o.pass = o.pass && ok;
    o.detail += to_string(system) + (ok ? "=equal " : "=DIFFERENT ");
  }
  return o;
}

Outcome geometry_oracle() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(3, 8);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  int sets = 0;
  int filtered = 0;
  while (sets < 200) {
    std::map<VertexId, Point> pts;
    const int n = size(rng);
    for (int k = 1; k <= n; ++k) {
      pts[k] = {Rational(Integer(num(rng)), Integer(den(rng))), Rational(Integer(num(rng)), Integer(den(rng)))};
    }
    Triangulation tri;
    try {
      tri = delaunay(pts);
    } catch (const DegenerateInput&) {
      ++filtered;
      continue;
    }
    ++sets;
    if (oracle::triangle_sets(tri) != oracle::brute_force_delaunay(pts)) {
      return {false, "mismatch with the brute-force oracle on set " + std::to_string(sets)};
    }
    const std::size_t expected = 3 * pts.size() - 3 - tri.hull_size();
    if (tri.edge_count() != expected) return {false, "edge count differs from 3n-3-h on set " + std::to_string(sets)};
  }
  return {true, "200 sets, " + std::to_string(filtered) + " degenerate sets filtered"};
}

Outcome kinetic_certification() {
  struct TestMotion {
    std::string name;
    Motion motion;
  };
  std::vector<TestMotion> motions;
  for (const auto& [n, word] : std::vector<std::pair<int, const char*>>{{3, "s1 s2 s1"},
                                                                        {4, "s1"},
                                                                        {4, "s1 s3' s2"},
                                                                        {4, "s2 s2'"},
                                                                        {5, "s1 s2 s3 s4"},
                                                                        {5, "s4' s2 s3 s1"}}) {
    for (const Rational& bulge : {Rational(1), Rational(2)}) {
      SlotConfig cfg;
      cfg.n = n;
      cfg.bulge = bulge;
      motions.push_back({std::to_string(n) + ":" + word + "@" + bulge.to_string(),
                         compile_motion(parse_braid(word, n), cfg).motion});
    }
  }
  {
    SlotConfig cfg;
    cfg.n = 4;
    auto mid = [&](int k) {
      return Point{(cfg.slot(k).x + cfg.slot(k + 1).x) / Rational(2), (cfg.slot(k).y + cfg.slot(k + 1).y) / Rational(2)};
    };
    motions.push_back({"4:simultaneous", Motion(4, {Stage{{{1, Trajectory::arc(cfg.slot(1), mid(1), 1)},
                                                           {2, Trajectory::arc(cfg.slot(2), mid(1), 1)},
                                                           {3, Trajectory::arc(cfg.slot(3), mid(3), 1)},
                                                           {4, Trajectory::arc(cfg.slot(4), mid(3), 1)}}}})});
  }

  std::mt19937_64 rng(99);
  std::size_t total_events = 0;
  for (const auto& tm : motions) {
    const Triangulation initial = delaunay(tm.motion.initial());
    const auto events = detect_flips(tm.motion, initial);
    total_events += events.size();
    if (!replay(initial, events).same_complex(closed_delaunay(tm.motion.final_positions()))) {
      return {false, tm.name + ": replay misses the final triangulation"};
    }
    const long stages = static_cast<long>(tm.motion.stage_count());
    std::uniform_int_distribution<long> pick(1, (stages << 24) - 1);
    int samples = 0;
    while (samples < 50) {
      const Rational time(Integer(pick(rng)), Integer(1L << 24));
      std::vector<FlipEvent> prefix;
      bool inside = false;
      for (const auto& ev : events) {
        const Rational lo = Rational(static_cast<long>(ev.stage)) + ev.t_lo;
        const Rational hi = Rational(static_cast<long>(ev.stage)) + ev.t_hi;
        if (hi <= time) {
          prefix.push_back(ev);
        } else if (lo < time) {
          inside = true;
        }
      }
      if (inside) continue;
      Triangulation direct;
      try {
        direct = closed_delaunay(tm.motion.positions_at_global(time));
      } catch (const DegenerateInput&) {
        continue;
      }
      ++samples;
      if (!replay(initial, prefix).same_complex(direct)) {
        return {false, tm.name + ": replayed prefix differs at time " + time.to_string()};
      }
    }
  }
  return {true, std::to_string(motions.size()) + " motions, " + std::to_string(total_events) +
                    " events, 50 samples each"};
}

std::vector<Criterion> criteria() {
  return {
      {1, "pentagon relation, ptolemy", 1, pentagon_ptolemy},
      {2, "pentagon relation, shear; mirrored convention rejected", 1, pentagon_shear},
      {3, "far commutativity", 1, far_commutativity},
      {4, "back-and-forth", 1, back_and_forth},
      {5, "braid relation s1 s2 s1 = s2 s1 s2, n=3", 2 * 60, [] { return equal_in_both_systems(3, "s1 s2 s1", "s2 s1 s2"); }},
      {6, "inverse cancellation s1 s1' = empty, n=3", 2 * 30, [] { return equal_in_both_systems(3, "s1 s1'", ""); }},
      {7, "generator far commutativity s1 s3 = s3 s1, n=4", 2 * 120, [] { return equal_in_both_systems(4, "s1 s3", "s3 s1"); }},
      {8, "Laurent entries, ptolemy", 60, laurent},
      {9, "isotopy robustness, bulge 1 vs 2", 120, isotopy},
      {10, "Delaunay against brute-force oracle", 60, geometry_oracle},
      {11, "kinetic certification", 120, kinetic_certification},
  };
}

}  // namespace
}  // namespace braidshear

int main(int argc, char** argv) {
  using braidshear::Outcome;
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : braidshear::criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    all_pass = all_pass && pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ["
              << std::fixed << std::setprecision(3) << seconds << " s / " << c.budget_seconds << " s"
              << (in_time ? "" : " OVER BUDGET") << "]  " << outcome.detail << "\n";
  }
  return all_pass ? 0 : 1;
}
