#include "braidshear/polynomial.hpp"

#include <algorithm>

#include "braidshear/errors.hpp"

namespace braidshear {

VarId edge_variable(int i, int j) {
  if (i > j) std::swap(i, j);
  return (static_cast<VarId>(i) << 16) | static_cast<VarId>(j);
}

std::pair<int, int> variable_edge(VarId var) {
  return {static_cast<int>(var >> 16), static_cast<int>(var & 0xffffu)};
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [var, exp] : factors) {
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == var) {
      factors_.back().second += exp;
    } else {
      factors_.emplace_back(var, exp);
    }
    degree_ += exp;
  }
}

Monomial Monomial::variable(VarId var, std::uint32_t exponent) {
  return Monomial({{var, exponent}});
}

std::uint32_t Monomial::exponent(VarId var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
  return (it != factors_.end() && it->first == var) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [var, exp] : factors_) {
    while (it != other.factors_.end() && it->first < var) ++it;
    if (it == other.factors_.end() || it->first != var || it->second < exp) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial result;
  auto it = divisor.factors_.begin();
  for (const auto& [var, exp] : factors_) {
    std::uint32_t e = exp;
    if (it != divisor.factors_.end() && it->first == var) {
      e -= it->second;
      ++it;
    }
    if (e > 0) {
      result.factors_.emplace_back(var, e);
      result.degree_ += e;
    }
  }
  return result;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial result;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      const auto e = std::min(ia->second, ib->second);
      result.factors_.emplace_back(ia->first, e);
      result.degree_ += e;
      ++ia;
      ++ib;
    }
  }
  return result;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial result;
  result.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      result.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      result.factors_.push_back(*ib++);
    } else {
      result.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  result.degree_ = a.degree_ + b.degree_;
  return result;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) {
      // The monomial carrying the smaller variable has the larger exponent there.
      return fa[i].first < fb[j].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (fa[i].second != fb[j].second) return fa[i].second <=> fb[j].second;
    ++i;
    ++j;
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (j < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.push_back({Monomial(), constant});
}

Polynomial Polynomial::variable(VarId var) { return monomial(Monomial::variable(var)); }

Polynomial Polynomial::monomial(Monomial m, Integer coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.push_back({std::move(m), std::move(coefficient)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.monomial, y.monomial) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvariantViolation("leading term of the zero polynomial");
  return terms_.front();
}

Integer Polynomial::constant_value() const {
  if (!is_constant()) throw InvariantViolation("constant_value of a nonconstant polynomial");
  return terms_.empty() ? Integer(0) : terms_[0].coefficient;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_[0].monomial;
  for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) {
    g = Monomial::gcd(g, terms_[i].monomial);
  }
  return g;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::uint32_t Polynomial::degree(VarId var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) {
      c = std::strong_ordering::less;
    } else if (j == b.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = grlex_compare(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Integer sum = subtract ? Integer(a[i].coefficient - b[j].coefficient)
                             : Integer(a[i].coefficient + b[j].coefficient);
      if (sum != 0) out.push_back({a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.is_constant()) return b.scaled(a.terms_[0].coefficient);
  if (b.is_constant()) return a.scaled(b.terms_[0].coefficient);
  std::map<Monomial, Integer, GrlexGreater> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Integer& slot = acc[x.monomial * y.monomial];
      mpz_addmul(slot.get_mpz_t(), x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
    }
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  }
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial Polynomial::scaled(const Integer& factor) const {
  if (factor == 0) return Polynomial();
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= factor;
  return p;
}

Polynomial Polynomial::shifted(const Monomial& factor) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.monomial = t.monomial * factor;
  return p;
}

Polynomial Polynomial::divided_by(const Integer& factor) const {
  if (factor == 0) throw DivisionByZero("polynomial divided by integer zero");
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    if (!mpz_divisible_p(t.coefficient.get_mpz_t(), factor.get_mpz_t())) {
      throw InvariantViolation("inexact integer division of a polynomial");
    }
    mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), factor.get_mpz_t());
  }
  return p;
}

Polynomial Polynomial::divided_by(const Monomial& factor) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    if (!factor.divides(t.monomial)) throw InvariantViolation("inexact monomial division");
    t.monomial = t.monomial.quotient(factor);
  }
  return p;
}

Rational Polynomial::evaluate(const std::map<VarId, Rational>& assignment) const {
  Rational sum;
  for (const auto& t : terms_) {
    Rational value(t.coefficient);
    for (const auto& [var, exp] : t.monomial.factors()) {
      auto it = assignment.find(var);
      if (it == assignment.end()) {
        const auto [i, j] = variable_edge(var);
        throw MissingVariable("no value for variable a_{" + std::to_string(i) + "," +
                              std::to_string(j) + "}");
      }
      value *= pow(it->second, exp);
    }
    sum += value;
  }
  return sum;
}

std::vector<Polynomial> Polynomial::coefficients_in(VarId var) const {
  std::vector<std::vector<Term>> buckets(degree(var) + 1);
  for (const auto& t : terms_) {
    const auto e = t.monomial.exponent(var);
    buckets[e].push_back({e == 0 ? t.monomial : t.monomial.quotient(Monomial::variable(var, e)),
                          t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(VarId var, std::span<const Polynomial> coefficients) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coefficients.size(); ++e) {
    const Monomial x = Monomial::variable(var, static_cast<std::uint32_t>(e));
    for (const auto& t : coefficients[e].terms()) terms.push_back({t.monomial * x, t.coefficient});
  }
  return from_terms(std::move(terms));
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.is_zero()) return Polynomial();
  const Term& lead = g.leading_term();
  if (g.is_monomial()) {
    std::vector<Term> q;
    q.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (!lead.monomial.divides(t.monomial) ||
          !mpz_divisible_p(t.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) {
        return std::nullopt;
      }
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t());
      q.push_back({t.monomial.quotient(lead.monomial), std::move(c)});
    }
    return Polynomial::from_terms(std::move(q));
  }
  // If g | r then LT(g) | LT(r); the remainder r = f - q*g stays a multiple
  // of g exactly when f is, so a failed leading-term step proves g does not
  // divide f.
  std::vector<Term> quotient;
  Polynomial r = f;
  while (!r.is_zero()) {
    const Term& rt = r.leading_term();
    if (!lead.monomial.divides(rt.monomial) ||
        !mpz_divisible_p(rt.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) {
      return std::nullopt;
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), rt.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t());
    Monomial m = rt.monomial.quotient(lead.monomial);
    r -= g.shifted(m).scaled(c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(std::move(quotient));
}

}  // namespace braidshear
