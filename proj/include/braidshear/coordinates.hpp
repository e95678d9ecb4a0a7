#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidshear/braid.hpp"
#include "braidshear/kinetic.hpp"
#include "braidshear/rational_function.hpp"
#include "braidshear/triangulation.hpp"

namespace braidshear {

enum class LabelSystem { kPtolemy, kShear };

std::string to_string(LabelSystem system);
/// "ptolemy" or "shear"; throws ConfigError otherwise.
LabelSystem parse_label_system(const std::string& text);

/// Which pair of quad sides receives the factor (1 + e) in a shear flip of
/// quad (u, v, w, z) with diagonal (u, w). kStandard scales (u,v) and (w,z)
/// by 1 + e and (v,w), (z,u) by e / (1 + e); kMirrored swaps the pairs.
enum class ShearConvention { kStandard, kMirrored };

/// A triangulation together with one label per edge.
struct LabelState {
  Triangulation triangulation;
  std::map<Edge, RationalFunction> labels;

  /// Labels every edge (i, j) with the variable a_{i,j}.
  static LabelState seeded(Triangulation tri);
  /// Throws InvariantViolation unless the label keys are exactly the edges.
  void validate() const;
};

/// New diagonal (v, z) gets (a*c + b*d) / x with x = (u,w), a = (u,v),
/// b = (v,w), c = (w,z), d = (z,u). Nothing else changes.
LabelState apply_ptolemy_flip(const LabelState& state, const Quad& quad);

/// New diagonal gets 1/e, e = label(u, w); the four sides are rescaled as
/// described for ShearConvention.
LabelState apply_shear_flip(const LabelState& state, const Quad& quad,
                            ShearConvention convention = ShearConvention::kStandard);

LabelState apply_flip(const LabelState& state, LabelSystem system, const Quad& quad,
                      ShearConvention convention = ShearConvention::kStandard);

/// T(beta): final labels keyed by slot edges.
struct InvariantMap {
  int n = 0;
  LabelSystem system = LabelSystem::kPtolemy;
  std::string word;
  /// Finite slot edges of the initial triangulation.
  std::map<Edge, RationalFunction> entries;
  /// Edges (0, k) from the point at infinity to the hull slots.
  std::map<Edge, RationalFunction> hull_entries;
  /// Bulge perturbations needed before the motion became generic.
  int retries = 0;
};

struct InvariantOptions {
  /// Bulge offsets tried in turn after a DegeneracyError.
  std::vector<Rational> jitter{Rational(1, 37), Rational(-1, 41), Rational(2, 43), Rational(-2, 47),
                               Rational(3, 53), Rational(-3, 59), Rational(4, 61), Rational(-4, 67)};
  int max_retries = 3;
  KineticOptions kinetic;
};

/// Seeds the closed slot triangulation with variables, folds the flip rule
/// over the events of the compiled motion and renames every strand edge
/// (p, q) to the slot edge (pi(p), pi(q)). Flips reported in one bracket are
/// checked to commute. A DegeneracyError is retried with the next bulge
/// offset, at most options.max_retries times.
InvariantMap run_invariant(const BraidWord& word, const SlotConfig& cfg, LabelSystem system,
                           const InvariantOptions& options = {});

/// Same keys and rf_equal values, hull entries included.
bool invariants_equal(const InvariantMap& a, const InvariantMap& b, const EqualityOptions& options = {});
/// Smallest edge where the maps differ, if any.
std::optional<Edge> first_difference(const InvariantMap& a, const InvariantMap& b,
                                     const EqualityOptions& options = {});

std::string invariant_to_json(const InvariantMap& map);

// Relation checks on abstract configurations with fresh variables.

struct PentagonPaths {
  LabelState two_flip;
  LabelState three_flip;
};

/// Fan (1,2,3), (1,3,4), (1,4,5) taken to diagonals {25, 35} by flipping
/// 14, 13 and, the long way round, 13, 14, 24.
PentagonPaths pentagon_paths(LabelSystem system, ShearConvention convention = ShearConvention::kStandard);
bool check_pentagon(LabelSystem system, ShearConvention convention = ShearConvention::kStandard);

/// Two flips applied in both orders: quads 1234 and 5678 of an octagon, or
/// with `shared_edge` quads 1234 and 1456 of a hexagon, which share side 14.
bool check_commutativity(LabelSystem system, bool shared_edge,
                         ShearConvention convention = ShearConvention::kStandard);

/// Flipping the diagonal of a square twice restores every label.
bool check_involution(LabelSystem system, ShearConvention convention = ShearConvention::kStandard);

/// Entrywise rf_equal on identical key sets.
bool same_labels(const LabelState& a, const LabelState& b, const EqualityOptions& options = {});

}  // namespace braidshear
