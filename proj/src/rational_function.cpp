#include "braidshear/rational_function.hpp"

#include <random>

#include "braidshear/errors.hpp"
#include "braidshear/poly_format.hpp"
#include "braidshear/polynomial_gcd.hpp"

namespace braidshear {

namespace {

Polynomial exact(const Polynomial& f, const Polynomial& g) {
  auto q = divide_exact(f, g);
  if (!q) throw InvariantViolation("gcd does not divide its argument");
  return *std::move(q);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  if (!g.is_one()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  if (den.leading_coefficient() < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return format_polynomial(num_);
  return "(" + format_polynomial(num_) + ")/(" + format_polynomial(den_) + ")";
}

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.den() == g.den()) return RationalFunction(f.num() + g.num(), f.den());
  // Henrici: only the common part of the denominators can cancel.
  const Polynomial d = gcd(f.den(), g.den());
  const Polynomial fd = exact(f.den(), d);
  const Polynomial gd = exact(g.den(), d);
  return RationalFunction(f.num() * gd + g.num() * fd, fd * g.den());
}

RationalFunction rf_sub(const RationalFunction& f, const RationalFunction& g) {
  return rf_add(f, RationalFunction(-g.num(), g.den()));
}

RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) return RationalFunction();
  // With f and g reduced, cross-cancellation is all that is needed.
  const Polynomial g1 = gcd(f.num(), g.den());
  const Polynomial g2 = gcd(g.num(), f.den());
  Polynomial num = exact(f.num(), g1) * exact(g.num(), g2);
  Polynomial den = exact(f.den(), g2) * exact(g.den(), g1);
  if (den.leading_coefficient() < 0) {
    num = -num;
    den = -den;
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction rf_inv(const RationalFunction& f) {
  if (f.is_zero()) throw DivisionByZero("inverse of the zero function");
  return RationalFunction(f.den(), f.num());
}

RationalFunction rf_div(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero function");
  return rf_mul(f, rf_inv(g));
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g, const EqualityOptions& options) {
  if (options.probabilistic_trials > 0) {
    std::vector<VarId> vars = f.num().variables();
    for (const auto* p : {&f.den(), &g.num(), &g.den()}) {
      const auto v = p->variables();
      vars.insert(vars.end(), v.begin(), v.end());
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long long> dist(-(1LL << 31), (1LL << 31) - 1);
    for (int trial = 0; trial < options.probabilistic_trials; ++trial) {
      std::map<VarId, Rational> point;
      for (VarId v : vars) point.emplace(v, Rational(static_cast<long>(dist(rng))));
      const Rational fd = f.den().evaluate(point);
      const Rational gd = g.den().evaluate(point);
      if (fd.is_zero() || gd.is_zero()) continue;
      if (f.num().evaluate(point) / fd != g.num().evaluate(point) / gd) return false;
    }
  }
  // Cross-multiplication does not rely on either side being reduced.
  return f.num() * g.den() == g.num() * f.den();
}

bool rf_is_laurent(const RationalFunction& f) { return f.den().is_monomial(); }

Rational rf_eval(const RationalFunction& f, const std::map<VarId, Rational>& assignment) {
  const Rational num = f.num().evaluate(assignment);
  const Rational den = f.den().evaluate(assignment);
  if (den.is_zero()) throw PoleError("denominator " + format_polynomial(f.den()) + " vanishes");
  return num / den;
}

}  // namespace braidshear
