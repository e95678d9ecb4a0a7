#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "braidshear/rational.hpp"

namespace braidshear {

/// Identifier of an indeterminate. Edge variables a_{i,j} are packed as
/// (i << 16) | j, so the numeric order of ids is the lexicographic order of
/// the index pairs.
using VarId = std::uint32_t;

VarId edge_variable(int i, int j);
std::pair<int, int> variable_edge(VarId var);

/// Power product x1^e1 * ... stored sparsely, sorted by variable id, with
/// every exponent positive.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(VarId var, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(VarId var) const;
  bool is_one() const noexcept { return factors_.empty(); }
  bool divides(const Monomial& other) const;

  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order; among equal total degrees the smaller variable
/// id is the most significant.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct Term {
  Monomial monomial;
  Integer coefficient;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coefficient == b.coefficient;
  }
};

/// Sparse multivariate polynomial over the integers. Terms are kept in
/// strictly decreasing grlex order with nonzero coefficients, so structural
/// equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);            // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(VarId var);
  static Polynomial monomial(Monomial m, Integer coefficient = 1);
  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coefficient == 1; }

  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Integer& leading_coefficient() const { return leading_term().coefficient; }
  /// The constant value; requires is_constant().
  Integer constant_value() const;

  /// Positive gcd of the coefficients; zero for the zero polynomial.
  Integer content() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  /// Sorted ids of the variables that occur.
  std::vector<VarId> variables() const;
  std::uint32_t degree(VarId var) const;
  std::uint32_t total_degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial scaled(const Integer& factor) const;
  Polynomial shifted(const Monomial& factor) const;
  /// Exact division of every coefficient; requires factor | content().
  Polynomial divided_by(const Integer& factor) const;
  /// Requires factor to divide every term.
  Polynomial divided_by(const Monomial& factor) const;

  /// Throws MissingVariable if some occurring variable is unassigned.
  Rational evaluate(const std::map<VarId, Rational>& assignment) const;

  /// Coefficients as a univariate polynomial in `var`, index = degree.
  std::vector<Polynomial> coefficients_in(VarId var) const;
  static Polynomial from_coefficients(VarId var, std::span<const Polynomial> coefficients);

 private:
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// f / g if g divides f exactly in Z[x...], otherwise nullopt. Throws
/// DivisionByZero when g is zero.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace braidshear
