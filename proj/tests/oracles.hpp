#pragma once

// Test-side oracles: independent reference computations that never call the
// engine routine they are used to check.

#include <map>
#include <numeric>
#include <stdexcept>
#include <random>
#include <vector>

#include "abhk/algebra.hpp"
#include "abhk/scalar.hpp"

namespace oracle {

using abhk::Element;
using abhk::Field;
using abhk::Scalar;

inline std::uint64_t order_by_gcd(std::uint64_t k, std::uint64_t n) { return n / std::gcd(k, n); }

inline long small_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random scalar with small numerators, denominators and degrees.
inline Scalar random_scalar(const Field& F, std::mt19937_64& rng) {
  auto rational = [&] { return F.from_rational(mpq_class(small_int(rng, -5, 5), small_int(rng, 1, 4))); };
  Scalar x = rational();
  switch (F.kind()) {
    case abhk::FieldKind::Rational:
      return x;
    case abhk::FieldKind::Cyclotomic:
      for (int k = 1; k < F.degree(); ++k) x += rational() * F.zeta().pow(k);
      return x;
    case abhk::FieldKind::RationalFunction: {
      x += rational() * F.q() + rational() * F.q().pow(2);
      Scalar den = F.one() + rational() * F.q();
      return den.is_zero() ? x : x / den;
    }
  }
  return x;
}

/// Nonzero small integer scalar.
inline Scalar random_coefficient(const Field& F, std::mt19937_64& rng) {
  long v = 0;
  while (v == 0) v = small_int(rng, -3, 3);
  return F.from_int(v);
}

/// (n)!_x / ((i)!_x (n-i)!_x) by field division; valid when no (j)_x vanishes.
inline Scalar q_binomial_by_factorials(unsigned n, unsigned i, const Scalar& x) {
  auto fact = [&](unsigned k) {
    Scalar f = x.field().one();
    for (unsigned j = 1; j <= k; ++j) {
      Scalar s = x.field().zero();
      for (unsigned e = 0; e < j; ++e) s += x.pow(e);
      f *= s;
    }
    return f;
  };
  return fact(n) / (fact(i) * fact(n - i));
}

/// Random element: sum of up to max_terms words of length <= max_len in the
/// given letters, with small integer coefficients.
inline Element random_element(const abhk::Algebra& A, const std::vector<int>& letters, std::mt19937_64& rng,
                              int max_terms = 3, int max_len = 3) {
  Element out = A.zero();
  const int terms = static_cast<int>(small_int(rng, 1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Element w = A.one();
    const int len = static_cast<int>(small_int(rng, 0, max_len));
    for (int k = 0; k < len; ++k) w = w * A.letter(letters[static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(letters.size()) - 1))]);
    out += w.scaled(random_coefficient(A.field(), rng));
  }
  return out;
}

// ---- coradical filtration straight from the wedge definition

using Matrix = std::vector<std::vector<mpq_class>>;

/// Basis of the null space of M (columns = unknowns).
inline Matrix null_space(Matrix M, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < M.size(); ++c) {
    std::size_t p = row;
    while (p < M.size() && sgn(M[p][c]) == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[row]);
    const mpq_class inv = 1 / M[row][c];
    for (auto& x : M[row]) x *= inv;
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || sgn(M[r][c]) == 0) continue;
      const mpq_class f = M[r][c];
      for (std::size_t k = 0; k < cols; ++k) M[r][k] -= f * M[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = -M[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank_of(Matrix M, std::size_t cols) { return cols - null_space(std::move(M), cols).size(); }

/// Minimal n with c in C_n, where C_0 is spanned by the grouplike monomials
/// and C_n = {x : Delta(x) in C_(n-1) (x) C + C (x) C_0}. Works inside the
/// finite subcoalgebra spanned by the closure of supp(c) under coproduct
/// components. Coefficients must be rational.
inline int wedge_degree(const abhk::Algebra& A, const Element& c, int max_degree = 12) {
  std::map<abhk::Monomial, std::size_t> index;
  std::vector<abhk::Monomial> basis;
  std::vector<abhk::Monomial> todo;
  auto visit = [&](const abhk::Monomial& m) {
    if (index.count(m)) return;
    index.emplace(m, basis.size());
    basis.push_back(m);
    todo.push_back(m);
  };
  for (const auto& [m, x] : c.terms()) visit(m);
  while (!todo.empty()) {
    const abhk::Monomial m = todo.back();
    todo.pop_back();
    for (const auto& [key, x] : A.delta_monomial(m).terms()) {
      visit(key[0]);
      visit(key[1]);
    }
    if (basis.size() > 400) throw std::runtime_error("wedge oracle: subcoalgebra too large");
  }
  const std::size_t n = basis.size();
  std::vector<bool> coradical(n);
  for (std::size_t i = 0; i < n; ++i) coradical[i] = A.is_grouplike(A.monomial(basis[i]));
  std::vector<std::map<std::pair<std::size_t, std::size_t>, mpq_class>> delta(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [key, x] : A.delta_monomial(basis[i]).terms())
      delta[i][{index.at(key[0]), index.at(key[1])}] = x.to_rational();
  std::vector<mpq_class> target(n, mpq_class(0));
  for (const auto& [m, x] : c.terms()) target[index.at(m)] = x.to_rational();

  auto contains = [&](const Matrix& W) {
    Matrix M = W;
    const std::size_t r = rank_of(M, n);
    M.push_back(target);
    return rank_of(M, n) == r;
  };
  Matrix W;  // C_0 basis
  for (std::size_t i = 0; i < n; ++i)
    if (coradical[i]) {
      std::vector<mpq_class> v(n, mpq_class(0));
      v[i] = 1;
      W.push_back(v);
    }
  for (int deg = 0; deg <= max_degree; ++deg) {
    if (contains(W)) return deg;
    // Annihilator of W: rows f with f . w = 0.
    const Matrix ann = null_space(W, n);
    Matrix M;
    for (const auto& f : ann) {
      for (std::size_t s = 0; s < n; ++s) {
        if (coradical[s]) continue;
        std::vector<mpq_class> row(n, mpq_class(0));
        bool any = false;
        for (std::size_t i = 0; i < n; ++i)
          for (const auto& [ab, x] : delta[i]) {
            if (ab.second != s || sgn(f[ab.first]) == 0) continue;
            row[i] += f[ab.first] * x;
            any = true;
          }
        if (any) M.push_back(std::move(row));
      }
    }
    W = null_space(M, n);
  }
  return -1;
}

inline int wedge_degree_polynomial(const abhk::Algebra& A, const Element& c) { return wedge_degree(A, c); }

}  // namespace oracle
