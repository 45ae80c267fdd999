#pragma once

// Ring-theoretic and homological invariants of an ambiskew algebra, derived
// from declared base metadata and the automorphism sigma.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abhk/ambiskew.hpp"

namespace abhk {

struct SigmaOrder {
  Order order = Order::infinite();
  bool structural = false;      // infinite order proved (translation in characteristic 0)
  bool exceeded_bound = false;  // no period found up to the bound
  int bound = 256;
  std::string to_string() const;
};

/// Smallest n <= n_max with sigma^n = id on every base letter.
SigmaOrder sigma_order(const AmbiskewAlgebra& A, int n_max = 256);

struct GkReport {
  Dim value;
  bool locally_finite = false;
  std::string reason;
};

/// GK-dim(R) + 2 when sigma is locally finite on generators.
GkReport gk_report(const AmbiskewAlgebra& A, int dimension_bound = 64);

struct DimBounds {
  Dim gl_lower, gl_upper;
  bool gl_exact = false;
  Dim inj_lower, inj_upper;
  bool inj_exact = false;
  bool as_gorenstein = false;
  bool as_regular = false;
};

DimBounds dim_bounds(const AmbiskewAlgebra& A);

struct EigenComponent {
  int i = 0;  // eigenvalue eta^i
  Element h_i;
};

struct PiReport {
  std::optional<bool> satisfies_pi;  // nullopt when undecided
  SigmaOrder n;
  Order t = Order::infinite();
  std::optional<std::uint64_t> m;  // lcm(n, t)
  std::optional<std::uint64_t> pi_degree;
  std::optional<Scalar> eta;
  std::optional<int> j;  // xi = eta^j when t | n
  std::vector<EigenComponent> decomposition;
  std::string obstruction;  // witness h_j when the criterion fails there
  std::string reason;
};

/// Needs a commutative affine domain base on which sigma acts diagonally on
/// monomials; DomainError otherwise, or when the field lacks eta.
PiReport pi_check(const AmbiskewAlgebra& A, int n_max = 256);

/// Eigencomponents h_i with sigma(h_i) = eta^i h_i summing to h.
std::vector<EigenComponent> eigen_decomposition(const AmbiskewAlgebra& A, const Element& h, const Scalar& eta, std::uint64_t n);

struct FlagsReport {
  bool noetherian = false;
  bool domain = false;
  bool semiprime_goldie = false;
  std::string prime;  // "true (base prime)" or "unknown"
  bool auslander_gorenstein = false;
  bool auslander_regular = false;
};

FlagsReport flags_report(const AmbiskewAlgebra& A);

/// "key: value" lines (text) or "key<TAB>value" lines (machine).
std::vector<std::pair<std::string, std::string>> property_lines(const AmbiskewAlgebra& A, int n_max = 256);

}  // namespace abhk
