#pragma once

#include "braidshear/polynomial.hpp"

namespace braidshear {

/// Greatest common divisor in Z[x...], normalized to a positive leading
/// coefficient; gcd(0, 0) = 0.
///
/// Integer and monomial contents are split off first. The primitive parts
/// then go through a modular coprimality certificate; when that cannot prove
/// the gcd trivial, the recursive subresultant PRS computes it.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Same contract as gcd() but never consults the modular certificate.
Polynomial gcd_subresultant(const Polynomial& f, const Polynomial& g);

/// True only if f and g provably have no nonconstant common factor.
///
/// For every variable x shared by f and g, the other variables are mapped
/// to pseudo-random residues mod 2^31 - 1 (keeping the leading coefficients
/// in x nonzero), and the univariate gcd of the images is computed. A
/// constant image gcd bounds deg_x of the true gcd by zero. `false` means
/// "not certified", not "not coprime".
bool certify_coprime_modular(const Polynomial& f, const Polynomial& g);

}  // namespace braidshear
