#pragma once

// Coradical filtration of a hat-form ambiskew Hopf algebra, and closed-form
// coproducts of PBW monomials used as an oracle for the engine.

#include <cstdint>
#include <vector>

#include "abhk/ambiskew.hpp"
#include "abhk/qcomb.hpp"

namespace abhk {

/// d is the multiplicative order of xi; d = 1 and d = infinite both use the
/// convention q_m = m.
struct CoradicalContext {
  Order d = Order::infinite();
};

CoradicalContext coradical_context(const AmbiskewAlgebra& A);

struct CoradicalTerm {
  Monomial monomial;
  int m = 0, n = 0;
  int base_degree = 0;
  int hat_m = 0, hat_n = 0;
  int total() const { return base_degree + hat_m + hat_n; }
};

/// Per-monomial breakdown of the degree. Requires a verified Hopf algebra.
std::vector<CoradicalTerm> corad_breakdown(const AmbiskewAlgebra& A, const Element& a);
/// Minimal t with a in A_t. DomainError for a = 0.
int corad_degree(const AmbiskewAlgebra& A, const Element& a);

/// Delta(X+-^m) = sum_j binom(m, j)_(xi^+-1) y+-^(m-j) X+-^j (x) X+-^(m-j),
/// assembled directly on PBW monomials.
Tensor delta_power_closed(const AmbiskewAlgebra& A, bool plus, int m);

/// Delta(X+^m X-^n) = sum_(j,k) binom(m, j)_xi binom(n, k)_(xi^-1) xi^(j(n-k))
///   y+^(m-j) y-^(n-k) X+^j X-^k (x) X+^(m-j) X-^(n-k).
Tensor delta_mixed_closed(const AmbiskewAlgebra& A, int m, int n);

struct SupportEntry {
  std::uint64_t p = 0;
  Scalar alpha;
};

/// The p with p preceding m, each with alpha_p = binom(q_m, i) binom(r_m, j)_x
/// for p = d i + j (binom(m, p)_x when d is 1 or infinite). x is xi or xi^-1.
/// Throws InvariantBreach if some alpha_p vanishes or differs from binom(m, p)_x.
std::vector<SupportEntry> sparse_support(std::uint64_t m, const Scalar& x);

}  // namespace abhk
