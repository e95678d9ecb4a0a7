#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "braidshear/coordinates.hpp"
#include "braidshear/errors.hpp"
#include "braidshear/poly_format.hpp"
#include "test_support.hpp"

namespace braidshear {
namespace {

using testing::var;
using Numeric = std::map<Edge, Rational>;

// Plain rational arithmetic on concrete labels, independent of the symbolic
// layer: the shadow the symbolic results must agree with after evaluation.
Numeric numeric_flip(Numeric labels, LabelSystem system, const Quad& q, bool mirrored = false) {
  const Rational x = labels.at(q.diagonal());
  const auto s = q.sides();
  labels.erase(q.diagonal());
  if (system == LabelSystem::kPtolemy) {
    labels[q.other_diagonal()] = (labels.at(s[0]) * labels.at(s[2]) + labels.at(s[1]) * labels.at(s[3])) / x;
  } else {
    const Rational grow = Rational(1) + x;
    const Rational shrink = x / grow;
    for (int k = 0; k < 4; ++k) labels.at(s[k]) *= ((k % 2 == 0) != mirrored) ? grow : shrink;
    labels[q.other_diagonal()] = Rational(1) / x;
  }
  return labels;
}

std::map<VarId, Rational> random_point(std::mt19937_64& rng, const std::vector<Edge>& edges) {
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 9);
  std::map<VarId, Rational> out;
  for (const auto& e : edges) out[edge_variable(e.a, e.b)] = Rational(Integer(num(rng)), Integer(den(rng)));
  return out;
}

LabelState square() {
  return LabelState::seeded(Triangulation({}, {Triangle(1, 2, 3), Triangle(1, 3, 4)}));
}

LabelState hexagon() {
  return LabelState::seeded(
      Triangulation({}, {Triangle(1, 2, 3), Triangle(1, 3, 4), Triangle(1, 4, 5), Triangle(1, 5, 6)}));
}

TEST(PtolemyFlip, FreshVariables) {
  const LabelState out = apply_ptolemy_flip(square(), {1, 2, 3, 4});
  const auto x = var(1, 3);
  const auto a = var(1, 2);
  const auto b = var(2, 3);
  const auto c = var(3, 4);
  const auto d = var(1, 4);
  EXPECT_EQ(out.labels.at({2, 4}), (a * c + b * d) / x);
  EXPECT_EQ(out.labels.at({2, 4}).to_string(), "(a_{1,2}*a_{3,4} + a_{1,4}*a_{2,3})/(a_{1,3})");
  EXPECT_EQ(out.labels.count({1, 3}), 0u);
  for (const Edge& e : {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(1, 4)}) EXPECT_EQ(out.labels.at(e), square().labels.at(e));
  out.validate();
}

TEST(PtolemyFlip, TwiceIsIdentityAndOutsideLabelsStay) {
  const LabelState start = hexagon();
  const LabelState once = apply_ptolemy_flip(start, quad_around(start.triangulation, {1, 3}));
  const LabelState twice = apply_ptolemy_flip(once, quad_around(once.triangulation, {2, 4}));
  EXPECT_TRUE(same_labels(twice, start));
  EXPECT_EQ(twice.triangulation, start.triangulation);
  for (const auto& [e, f] : once.labels) {
    if (e != Edge(2, 4)) EXPECT_EQ(f, start.labels.at(e)) << e;
  }
}

TEST(ShearFlip, FreshVariables) {
  const LabelState out = apply_shear_flip(square(), {1, 2, 3, 4});
  const auto e = var(1, 3);
  const RationalFunction one(1);
  EXPECT_EQ(out.labels.at({2, 4}), one / e);
  EXPECT_EQ(out.labels.at({1, 2}), var(1, 2) * (one + e));
  EXPECT_EQ(out.labels.at({2, 3}), var(2, 3) * e / (one + e));
  EXPECT_EQ(out.labels.at({3, 4}), var(3, 4) * (one + e));
  EXPECT_EQ(out.labels.at({1, 4}), var(1, 4) * e / (one + e));
  EXPECT_EQ(out.labels.at({2, 3}).to_string(), "(a_{1,3}*a_{2,3})/(a_{1,3} + 1)");
}

TEST(ShearFlip, UnitDiagonal) {
  const LabelState out = apply_shear_flip(square(), {1, 2, 3, 4});
  std::map<VarId, Rational> at;
  for (const auto& e : square().triangulation.edges()) at[edge_variable(e.a, e.b)] = Rational(5);
  at[edge_variable(1, 3)] = Rational(1);
  EXPECT_EQ(rf_eval(out.labels.at({2, 4}), at), Rational(1));
  EXPECT_EQ(rf_eval(out.labels.at({1, 2}), at), Rational(10));
  EXPECT_EQ(rf_eval(out.labels.at({2, 3}), at), Rational(5, 2));
}

TEST(ShearFlip, TwiceIsIdentityAndSupportIsLocal) {
  for (auto convention : {ShearConvention::kStandard, ShearConvention::kMirrored}) {
    const LabelState start = hexagon();
    const LabelState once = apply_shear_flip(start, quad_around(start.triangulation, {1, 3}), convention);
    const LabelState twice = apply_shear_flip(once, quad_around(once.triangulation, {2, 4}), convention);
    EXPECT_TRUE(same_labels(twice, start));
    for (const Edge& e : {Edge(1, 5), Edge(1, 6), Edge(4, 5), Edge(5, 6)}) EXPECT_EQ(once.labels.at(e), start.labels.at(e));
  }
}

TEST(Flips, RejectInconsistentInput) {
  LabelState s = square();
  EXPECT_THROW(apply_ptolemy_flip(s, {1, 4, 3, 2}), InvariantViolation);
  s.labels.erase({1, 2});
  EXPECT_THROW(apply_shear_flip(s, {1, 2, 3, 4}), InvariantViolation);
  EXPECT_THROW(s.validate(), InvariantViolation);
  EXPECT_THROW(apply_ptolemy_flip(square(), quad_around(square().triangulation, {1, 2})), HullEdgeError);
}

TEST(Flips, AgreeWithNumericShadowProperty) {
  std::mt19937_64 rng(21);
  const LabelState start = hexagon();
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    for (int trial = 0; trial < 20; ++trial) {
      LabelState sym = start;
      const auto point = random_point(rng, start.triangulation.edges());
      Numeric num;
      for (const auto& e : start.triangulation.edges()) num[e] = point.at(edge_variable(e.a, e.b));
      for (int step = 0; step < 6; ++step) {
        std::vector<Edge> interior;
        for (const auto& e : sym.triangulation.edges()) {
          if (sym.triangulation.is_interior(e)) interior.push_back(e);
        }
        const Edge e = interior[rng() % interior.size()];
        const Quad q = quad_around(sym.triangulation, e);
        sym = apply_flip(sym, system, q);
        num = numeric_flip(num, system, q);
      }
      for (const auto& [e, f] : sym.labels) EXPECT_EQ(rf_eval(f, point), num.at(e));
    }
  }
}

TEST(Relations, Pentagon) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    const PentagonPaths p = pentagon_paths(system);
    EXPECT_TRUE(p.two_flip.triangulation.same_complex(p.three_flip.triangulation));
    EXPECT_TRUE(p.two_flip.triangulation.has_edge({2, 5}));
    EXPECT_TRUE(p.two_flip.triangulation.has_edge({3, 5}));
    EXPECT_EQ(p.two_flip.labels.size(), 7u);
    EXPECT_TRUE(check_pentagon(system)) << to_string(system);
  }
}

TEST(Relations, PentagonShearFixture) {
  // Flipping 14 gives 35 = 1/x14 and 13 = x13 (1 + x14); flipping 13 next
  // gives 25 = 1/(x13 (1 + x14)) and 35 = (1 + x13 (1 + x14)) / x14.
  const PentagonPaths p = pentagon_paths(LabelSystem::kShear);
  EXPECT_EQ(p.two_flip.labels.at({2, 5}).to_string(), "(1)/(a_{1,3}*a_{1,4} + a_{1,3})");
  EXPECT_EQ(p.two_flip.labels.at({3, 5}).to_string(), "(a_{1,3}*a_{1,4} + a_{1,3} + 1)/(a_{1,4})");
}

TEST(Relations, MirroredShearConventionAlsoSatisfiesPentagon) {
  // Reflecting the plane exchanges the two conventions and maps a pentagon of
  // flips onto a pentagon of flips, so the check does not separate them.
  EXPECT_TRUE(check_pentagon(LabelSystem::kShear, ShearConvention::kMirrored));
  const PentagonPaths standard = pentagon_paths(LabelSystem::kShear);
  const PentagonPaths mirrored = pentagon_paths(LabelSystem::kShear, ShearConvention::kMirrored);
  EXPECT_FALSE(same_labels(standard.two_flip, mirrored.two_flip));
}

TEST(Relations, CommutativityAndInvolution) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    EXPECT_TRUE(check_commutativity(system, false)) << to_string(system);
    EXPECT_TRUE(check_commutativity(system, true)) << to_string(system);
    EXPECT_TRUE(check_involution(system)) << to_string(system);
  }
}

TEST(Relations, SharedSideReceivesBothFactors) {
  const LabelState start = hexagon();
  const LabelState both = apply_shear_flip(apply_shear_flip(start, {1, 2, 3, 4}), {1, 4, 5, 6});
  const RationalFunction one(1);
  const auto e1 = var(1, 3);
  const auto e2 = var(1, 5);
  EXPECT_TRUE(rf_equal(both.labels.at({1, 4}), var(1, 4) * e1 / (one + e1) * (one + e2)));
}

SlotConfig slots(int n, Rational bulge = Rational(1)) {
  SlotConfig cfg;
  cfg.n = n;
  cfg.bulge = bulge;
  return cfg;
}

InvariantMap invariant(int n, const char* word, LabelSystem system, Rational bulge = Rational(1)) {
  return run_invariant(parse_braid(word, n), slots(n, bulge), system);
}

TEST(RunInvariant, EmptyWordIsIdentity) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    const InvariantMap m = invariant(4, "", system);
    ASSERT_EQ(m.entries.size(), 5u);
    for (const auto& [e, f] : m.entries) EXPECT_EQ(f, var(e.a, e.b));
    for (const auto& [e, f] : m.hull_entries) EXPECT_EQ(f, var(e.a, e.b));
  }
}

// On three slots nothing flips, so T is the renaming of variables along the
// strand permutation: entry (pi(p), pi(q)) holds a_{p,q}.
TEST(RunInvariant, ThreeStrandsRenameVariables) {
  const InvariantMap m = invariant(3, "s1 s2 s1", LabelSystem::kPtolemy);
  std::map<int, int> pi{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 2}}) {
    for (auto& [strand, slot] : pi) {
      if (slot == i) {
        slot = j;
      } else if (slot == j) {
        slot = i;
      }
    }
  }
  EXPECT_EQ(m.entries.size(), 3u);
  for (int p = 0; p <= 3; ++p) {
    for (int q = p + 1; q <= 3; ++q) {
      const Edge slot_edge(pi[p], pi[q]);
      const auto& table = slot_edge.touches_infinity() ? m.hull_entries : m.entries;
      EXPECT_EQ(table.at(slot_edge), var(p, q));
    }
  }
  EXPECT_EQ(m.entries.at({1, 2}).to_string(), "a_{2,3}");
}

TEST(RunInvariant, InverseCancels) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    EXPECT_TRUE(invariants_equal(invariant(3, "s1 s1'", system), invariant(3, "", system)));
    EXPECT_TRUE(invariants_equal(invariant(4, "s2 s2'", system), invariant(4, "", system)));
  }
}

TEST(RunInvariant, BraidRelations) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    EXPECT_TRUE(invariants_equal(invariant(3, "s1 s2 s1", system), invariant(3, "s2 s1 s2", system)));
    EXPECT_TRUE(invariants_equal(invariant(4, "s1 s2 s1", system), invariant(4, "s2 s1 s2", system)));
    EXPECT_TRUE(invariants_equal(invariant(4, "s2 s3 s2", system), invariant(4, "s3 s2 s3", system)));
    EXPECT_TRUE(invariants_equal(invariant(4, "s1 s3", system), invariant(4, "s3 s1", system)));
  }
}

TEST(RunInvariant, DistinguishesGeneratorsOnThreeStrands) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    const InvariantMap a = invariant(3, "s1", system);
    const InvariantMap b = invariant(3, "s2", system);
    EXPECT_FALSE(invariants_equal(a, b));
    EXPECT_EQ(first_difference(a, b), Edge(0, 1));
  }
  // s1 and its inverse have the same permutation and different labels on four strands.
  const InvariantMap pos = invariant(4, "s2", LabelSystem::kPtolemy);
  const InvariantMap neg = invariant(4, "s2'", LabelSystem::kPtolemy);
  EXPECT_FALSE(invariants_equal(pos, neg));
}

TEST(RunInvariant, IsotopyInvariance) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    for (const char* word : {"s1 s2", "s1 s3' s2"}) {
      EXPECT_TRUE(invariants_equal(invariant(4, word, system), invariant(4, word, system, Rational(2))))
          << word << " " << to_string(system);
    }
  }
}

TEST(RunInvariant, PtolemyEntriesAreLaurent) {
  for (const auto& [n, word] : std::vector<std::pair<int, const char*>>{
           {3, "s1"}, {3, "s1 s2"}, {3, "s1 s2 s1"}, {4, "s1 s2"}, {4, "s2 s1' s3"}, {5, "s1 s2 s3 s4"}}) {
    const InvariantMap m = invariant(n, word, LabelSystem::kPtolemy);
    for (const auto& table : {m.entries, m.hull_entries}) {
      for (const auto& [e, f] : table) EXPECT_TRUE(rf_is_laurent(f)) << word << " " << e << " " << f;
    }
  }
}

TEST(RunInvariant, ShearEntriesNeedNotBeLaurent) {
  const InvariantMap m = invariant(4, "s1 s2", LabelSystem::kShear);
  bool all = true;
  for (const auto& table : {m.entries, m.hull_entries}) {
    for (const auto& [e, f] : table) all = all && rf_is_laurent(f);
  }
  EXPECT_FALSE(all);
}

TEST(RunInvariant, KeysAndUntouchedEdges) {
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    const BraidWord word = parse_braid("s4", 6);
    const SlotConfig cfg = slots(6);
    const InvariantMap m = run_invariant(word, cfg, system);
    const auto init = initial_triangulation(cfg);
    std::vector<Edge> keys;
    for (const auto& [e, f] : m.entries) keys.push_back(e);
    EXPECT_EQ(keys, init.edges);
    EXPECT_EQ(m.hull_entries.size(), init.triangulation.hull_size());

    // Strand edges outside every event's support keep their variable.
    const auto compiled = compile_motion(word, cfg);
    const auto events = detect_flips(compiled.motion, init.triangulation);
    std::set<Edge> touched;
    for (const auto& ev : events) {
      touched.insert(ev.edge);
      touched.insert(ev.quad.other_diagonal());
      if (system == LabelSystem::kShear) {
        for (const auto& s : ev.quad.sides()) touched.insert(s);
      }
    }
    auto pi = compiled.permutation;
    pi[0] = 0;
    int untouched = 0;
    for (const auto& e : init.triangulation.closed().edges()) {
      if (touched.count(e)) continue;
      ++untouched;
      const Edge slot_edge(pi.at(e.a), pi.at(e.b));
      const auto& table = slot_edge.touches_infinity() ? m.hull_entries : m.entries;
      EXPECT_EQ(table.at(slot_edge), var(e.a, e.b));
    }
    if (system == LabelSystem::kPtolemy) EXPECT_GT(untouched, 0);
  }
}

TEST(RunInvariant, AgreesWithNumericShadow) {
  std::mt19937_64 rng(5);
  for (auto system : {LabelSystem::kPtolemy, LabelSystem::kShear}) {
    const BraidWord word = parse_braid("s1 s2 s3 s1'", 4);
    const SlotConfig cfg = slots(4);
    const InvariantMap m = run_invariant(word, cfg, system);
    const auto init = initial_triangulation(cfg).triangulation.closed();
    const auto compiled = compile_motion(word, cfg);
    const auto events = detect_flips(compiled.motion, init);
    const auto point = random_point(rng, init.edges());
    Numeric num;
    for (const auto& e : init.edges()) num[e] = point.at(edge_variable(e.a, e.b));
    for (const auto& ev : events) num = numeric_flip(num, system, ev.quad);
    auto pi = compiled.permutation;
    pi[0] = 0;
    for (const auto& [e, value] : num) {
      const Edge slot_edge(pi.at(e.a), pi.at(e.b));
      const auto& table = slot_edge.touches_infinity() ? m.hull_entries : m.entries;
      EXPECT_EQ(rf_eval(table.at(slot_edge), point), value);
    }
  }
}

TEST(RunInvariant, RejectsTwoStrands) {
  EXPECT_THROW(run_invariant(parse_braid("s1", 2), slots(2), LabelSystem::kShear), ConfigError);
}

TEST(RunInvariant, DegeneracyExhaustsRetries) {
  InvariantOptions options;
  // One bracket per stage, holding every flip of the swap.
  options.kinetic.min_width = Rational(2);
  options.kinetic.grid = 1;
  options.max_retries = 1;
  EXPECT_THROW(run_invariant(parse_braid("s1 s2", 4), slots(4), LabelSystem::kPtolemy, options), DegeneracyError);
}

TEST(InvariantMap, JsonSchema) {
  const InvariantMap m = invariant(4, "s1 s2'", LabelSystem::kShear);
  const auto doc = nlohmann::json::parse(invariant_to_json(m));
  EXPECT_EQ(doc.at("n"), 4);
  EXPECT_EQ(doc.at("system"), "shear");
  EXPECT_EQ(doc.at("word"), "s1 s2'");
  ASSERT_EQ(doc.at("entries").size(), 5u);
  std::vector<std::pair<int, int>> edges;
  for (const auto& entry : doc.at("entries")) {
    edges.emplace_back(entry.at("edge")[0], entry.at("edge")[1]);
    const auto num = parse_polynomial(entry.at("value").at("num").get<std::string>());
    const auto den = parse_polynomial(entry.at("value").at("den").get<std::string>());
    EXPECT_EQ(RationalFunction(num, den), m.entries.at({edges.back().first, edges.back().second}));
  }
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  EXPECT_EQ(doc.at("hull_entries").size(), 4u);
}

TEST(InvariantMap, EqualityNeedsSameKeys) {
  const InvariantMap a = invariant(4, "", LabelSystem::kPtolemy);
  InvariantMap b = a;
  EXPECT_TRUE(invariants_equal(a, a));
  b.entries.erase(b.entries.begin());
  EXPECT_FALSE(invariants_equal(a, b));
  EXPECT_EQ(first_difference(a, b), a.entries.begin()->first);
}

}  // namespace
}  // namespace braidshear
