#pragma once

// q-integers, q-factorials and Gaussian binomials, plus the d-adic split
// m = d*q_m + r_m used by the coradical filtration.

#include <cstdint>

#include "abhk/poly.hpp"
#include "abhk/scalar.hpp"

namespace abhk {

/// 1 + x + ... + x^(n-1).
Scalar q_int(unsigned n, const Scalar& x);
/// (1)_x (2)_x ... (n)_x.
Scalar q_factorial(unsigned n, const Scalar& x);

/// Gaussian binomial as an integer polynomial in q, built by the Pascal
/// recurrence binom(n,i) = binom(n-1,i-1) + q^i binom(n-1,i). Memoised.
/// Throws DomainError when i > n.
const poly::ZPoly& q_binomial_poly(unsigned n, unsigned i);

/// q_binomial_poly(n, i) evaluated at x.
Scalar q_binomial(unsigned n, unsigned i, const Scalar& x);

/// Evaluates an integer polynomial at a scalar (Horner).
Scalar evaluate(const poly::ZPoly& p, const Scalar& x);

struct HatProfile {
  Order d = Order::infinite();
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t hat = 0;
};

HatProfile hat(std::uint64_t m, Order d);

/// p precedes m: q_p <= q_m and r_p <= r_m.
bool prec(std::uint64_t p, std::uint64_t m, Order d);

}  // namespace abhk
