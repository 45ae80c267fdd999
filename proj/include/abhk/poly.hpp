#pragma once

// Dense univariate polynomials over Q and Z, used as the representation
// layer for cyclotomic and rational-function scalars and for q-binomials.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace abhk::poly {

/// Coefficients low to high; the zero polynomial is the empty vector.
using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

void trim(QPoly& p);
void trim(ZPoly& p);

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly shift(const ZPoly& a, int k);  // multiply by x^k, k >= 0

/// Euclidean division; throws DomainError when b is zero.
void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);
QPoly mod(const QPoly& a, const QPoly& m);

/// Monic greatest common divisor (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Inverse of a modulo m, or an empty polynomial when gcd(a, m) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

/// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by every
/// Phi_d with d a proper divisor of n. Results are memoised.
const ZPoly& cyclotomic(int n);

QPoly to_q(const ZPoly& p);

/// Clears denominators and content of the pair (num, den) jointly and makes
/// the leading coefficient of den positive.
void to_primitive_pair(const QPoly& num, const QPoly& den, ZPoly& znum, ZPoly& zden);

/// "3*x^2 - x + 1/2"; "0" for the zero polynomial.
std::string to_string(const QPoly& p, const std::string& var);
std::string to_string(const ZPoly& p, const std::string& var);
std::size_t term_count(const ZPoly& p);
std::size_t term_count(const QPoly& p);

}  // namespace abhk::poly
