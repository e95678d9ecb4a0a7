#include "braidshear/poly_format.hpp"

#include <cctype>

#include "braidshear/errors.hpp"

namespace braidshear {

std::string format_variable(VarId var) {
  const auto [i, j] = variable_edge(var);
  return "a_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    const Integer magnitude = abs(t.coefficient);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
      continue;
    }
    bool need_star = false;
    if (magnitude != 1) {
      out += magnitude.get_str();
      need_star = true;
    }
    for (const auto& [var, exp] : t.monomial.factors()) {
      if (need_star) out += "*";
      out += format_variable(var);
      if (exp != 1) out += "^" + std::to_string(exp);
      need_star = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'", "'+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term term(bool negative) {
    skip_ws();
    Integer coefficient = 1;
    std::vector<Monomial::Factor> factors;
    bool expect_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = integer();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        expect_factor = false;
      }
    }
    while (expect_factor) {
      skip_ws();
      factors.push_back(factor());
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        expect_factor = false;
      }
    }
    if (negative) coefficient = -coefficient;
    return {Monomial(std::move(factors)), std::move(coefficient)};
  }

  Monomial::Factor factor() {
    expect("a_{");
    const long i = small_integer();
    expect(",");
    const long j = small_integer();
    expect("}");
    if (i >= j) fail("variable indices must satisfy i < j", "i < j");
    std::uint32_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      exponent = static_cast<std::uint32_t>(small_integer());
      if (exponent == 0) fail("zero exponent", "positive exponent");
    }
    return {edge_variable(static_cast<int>(i), static_cast<int>(j)), exponent};
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer", "digit");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  long small_integer() {
    const Integer value = integer();
    if (!value.fits_sint_p() || value > 65535) fail("index out of range", "integer <= 65535");
    return value.get_si();
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'", std::string(token));
    pos_ += token.size();
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message, std::string expected) const {
    throw ParseError(message + " at position " + std::to_string(pos_), pos_, std::move(expected));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace braidshear
