#include "braidshear/rational.hpp"

#include <cctype>

#include "braidshear/errors.hpp"

namespace braidshear {

namespace {

// Parses an optionally signed run of decimal digits covering all of `text`.
Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", offset + i, "digit");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "' in rational",
                       offset + j, "digit");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational", 0, "p/q");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  const Integer num = parse_integer(text.substr(0, slash), 0);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned", slash + 1, "digit");
  }
  const Integer den = parse_integer(den_text, slash + 1);
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

}  // namespace braidshear
