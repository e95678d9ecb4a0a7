#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "braidshear/polynomial.hpp"

namespace braidshear {

/// Quotient of integer polynomials in canonical form: numerator and
/// denominator coprime (common polynomial and integer content removed) and
/// the denominator's grlex-leading coefficient positive. Canonical forms are
/// unique, so structural equality decides equality of functions.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Reduces num/den; throws DivisionByZero if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(VarId var) { return RationalFunction(Polynomial::variable(var)); }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// "num" when the denominator is 1, else "(num)/(den)".
  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  friend RationalFunction rf_mul(const RationalFunction&, const RationalFunction&);

  Polynomial num_;
  Polynomial den_;
};

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_sub(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g);
/// Throws DivisionByZero if g is the zero function.
RationalFunction rf_div(const RationalFunction& f, const RationalFunction& g);
/// Throws DivisionByZero if f is the zero function.
RationalFunction rf_inv(const RationalFunction& f);

inline RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) { return rf_add(f, g); }
inline RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return rf_sub(f, g); }
inline RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) { return rf_mul(f, g); }
inline RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) { return rf_div(f, g); }

struct EqualityOptions {
  /// Random-evaluation pre-screen trials; 0 disables the pre-screen.
  int probabilistic_trials = 0;
  std::uint64_t seed = 1;
};

/// Exact equality of functions. With probabilistic trials enabled, a sample
/// point where both sides are finite and differ returns false early; any
/// other outcome is settled by the exact comparison.
bool rf_equal(const RationalFunction& f, const RationalFunction& g, const EqualityOptions& options = {});

/// True iff the denominator is a single term (any nonzero coefficient).
bool rf_is_laurent(const RationalFunction& f);

/// Throws MissingVariable for an unassigned variable and PoleError when the
/// denominator vanishes at the point.
Rational rf_eval(const RationalFunction& f, const std::map<VarId, Rational>& assignment);

}  // namespace braidshear
