#include "braidshear/polynomial_gcd.hpp"

#include <algorithm>
#include <random>

#include "braidshear/errors.hpp"

namespace braidshear {

namespace {

using UPoly = std::vector<Polynomial>;  // coefficients in the main variable

Polynomial normalize_sign(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

Polynomial exact(const Polynomial& f, const Polynomial& g) {
  auto q = divide_exact(f, g);
  if (!q) throw InvariantViolation("expected exact polynomial division");
  return *std::move(q);
}

UPoly divide_all(const UPoly& a, const Polynomial& d) {
  if (d.is_one()) return a;
  UPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(exact(c, d));
  return out;
}

// lc(B)^(deg A - deg B + 1) * A mod B.
UPoly pseudo_remainder(UPoly r, const UPoly& b) {
  const int db = degree(b);
  const Polynomial& lb = b.back();
  int e = degree(r) - db + 1;
  while (!r.empty() && degree(r) >= db) {
    const Polynomial lr = r.back();
    const int shift = degree(r) - db;
    for (auto& c : r) c = c * lb;
    for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    const Polynomial scale = pow(lb, static_cast<unsigned>(e));
    for (auto& c : r) c = c * scale;
  }
  return r;
}

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g, bool use_filter);

Polynomial content_of(const UPoly& a, bool use_filter) {
  Polynomial c;
  for (const auto& coef : a) {
    c = gcd_impl(c, coef, use_filter);
    if (c.is_one()) break;
  }
  return c;
}

// f and g are nonzero, nonconstant, integer-primitive and free of monomial
// content.
Polynomial gcd_primitive(const Polynomial& f, const Polynomial& g, bool use_filter) {
  const auto vf = f.variables();
  const auto vg = g.variables();
  std::vector<VarId> common;
  std::set_intersection(vf.begin(), vf.end(), vg.begin(), vg.end(), std::back_inserter(common));
  if (common.empty()) return Polynomial(1);

  // Main variable: the shared one with the smallest combined degree.
  VarId x = common.front();
  std::uint32_t best = ~0u;
  for (VarId v : common) {
    const auto cost = f.degree(v) + g.degree(v);
    if (cost < best) {
      best = cost;
      x = v;
    }
  }

  UPoly a = f.coefficients_in(x);
  UPoly b = g.coefficients_in(x);
  const Polynomial ca = content_of(a, use_filter);
  const Polynomial cb = content_of(b, use_filter);
  const Polynomial d = gcd_impl(ca, cb, use_filter);
  a = divide_all(a, ca);
  b = divide_all(b, cb);
  if (degree(a) < degree(b)) std::swap(a, b);
  if (degree(b) == 0) return normalize_sign(d);

  Polynomial gs(1);
  Polynomial hs(1);
  while (true) {
    const int delta = degree(a) - degree(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) {
      b = UPoly{Polynomial(1)};
      break;
    }
    a = std::move(b);
    b = divide_all(r, gs * pow(hs, static_cast<unsigned>(delta)));
    gs = a.back();
    if (delta > 0) {
      hs = exact(pow(gs, static_cast<unsigned>(delta)), pow(hs, static_cast<unsigned>(delta - 1)));
    }
  }
  b = divide_all(b, content_of(b, use_filter));
  return normalize_sign(d * Polynomial::from_coefficients(x, b));
}

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g, bool use_filter) {
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);

  Integer c;
  mpz_gcd(c.get_mpz_t(), f.content().get_mpz_t(), g.content().get_mpz_t());
  if (f.is_constant() || g.is_constant()) return Polynomial(c);

  const Monomial mf = f.monomial_content();
  const Monomial mg = g.monomial_content();
  const Monomial m = Monomial::gcd(mf, mg);
  const Polynomial pf = f.divided_by(f.content()).divided_by(mf);
  const Polynomial pg = g.divided_by(g.content()).divided_by(mg);

  const Polynomial scale = Polynomial::monomial(m, c);
  if (pf.is_constant() || pg.is_constant()) return scale;
  if (pf == pg || pf == -pg) return scale * normalize_sign(pf);
  if (use_filter && certify_coprime_modular(pf, pg)) return scale;
  return scale * gcd_primitive(pf, pg, use_filter);
}

// Arithmetic modulo the Mersenne prime 2^31 - 1.
constexpr std::uint64_t kPrime = 2147483647ull;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const Integer& z) { return mpz_fdiv_ui(z.get_mpz_t(), kPrime); }

using ModPoly = std::vector<std::uint64_t>;

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly image(const Polynomial& p, VarId x, const std::map<VarId, std::uint64_t>& point) {
  ModPoly out(p.degree(x) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t v = residue(t.coefficient);
    std::uint32_t ex = 0;
    for (const auto& [var, e] : t.monomial.factors()) {
      if (var == x) {
        ex = e;
      } else {
        v = mulmod(v, powmod(point.at(var), e));
      }
    }
    out[ex] = (out[ex] + v) % kPrime;
  }
  return out;
}

int gcd_degree_mod(ModPoly a, ModPoly b) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t q = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = (a[i + shift] + kPrime - mulmod(q, b[i])) % kPrime;
      }
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) { return gcd_impl(f, g, true); }

Polynomial gcd_subresultant(const Polynomial& f, const Polynomial& g) { return gcd_impl(f, g, false); }

bool certify_coprime_modular(const Polynomial& f, const Polynomial& g) {
  const auto vf = f.variables();
  const auto vg = g.variables();
  std::vector<VarId> all;
  std::set_union(vf.begin(), vf.end(), vg.begin(), vg.end(), std::back_inserter(all));
  std::vector<VarId> common;
  std::set_intersection(vf.begin(), vf.end(), vg.begin(), vg.end(), std::back_inserter(common));

  std::mt19937_64 rng(0x5eed5eedULL + f.size() * 131 + g.size());
  std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
  constexpr int kAttempts = 3;
  for (VarId x : common) {
    bool certified = false;
    for (int attempt = 0; attempt < kAttempts && !certified; ++attempt) {
      std::map<VarId, std::uint64_t> point;
      for (VarId v : all) {
        if (v != x) point[v] = dist(rng);
      }
      const ModPoly fi = image(f, x, point);
      const ModPoly gi = image(g, x, point);
      if (fi.back() == 0 || gi.back() == 0) continue;  // leading coefficient vanished
      if (gcd_degree_mod(fi, gi) != 0) return false;
      certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

}  // namespace braidshear
