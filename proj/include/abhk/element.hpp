#pragma once

// Finitely supported linear combinations of monomials in an algebra, and of
// pure tensors of monomials in its tensor powers.

#include <boost/container/small_vector.hpp>
#include <map>
#include <string>
#include <vector>

#include "abhk/scalar.hpp"

namespace abhk {

class Algebra;

/// Exponent tuple whose layout is owned by the algebra family.
using Monomial = boost::container::small_vector<int, 6>;

/// Linear combination of monomials of one algebra. Zero coefficients are
/// never stored, so structural equality is equality of elements.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;  // detached placeholder; assign before use
  explicit Element(const Algebra* algebra);
  Element(const Algebra* algebra, Terms terms);

  static Element monomial(const Algebra* algebra, const Monomial& m, const Scalar& c);

  const Algebra* algebra() const { return algebra_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element scaled(const Scalar& c) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  /// Canonical rendering in the expression grammar.
  std::string to_string() const;

 private:
  void require_same(const Element& o) const;
  const Algebra* algebra_ = nullptr;
  Terms terms_;
};

/// Element of the arity-fold tensor power of an algebra, stored on pure
/// tensors of monomials.
class Tensor {
 public:
  using Key = std::vector<Monomial>;
  using Terms = std::map<Key, Scalar>;

  Tensor(const Algebra* algebra, int arity);

  /// a_1 (x) a_2 (x) ... (x) a_k.
  static Tensor pure(const std::vector<Element>& factors);

  const Algebra* algebra() const { return algebra_; }
  int arity() const { return arity_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Scalar& c);

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator*(const Tensor& o) const;
  Tensor scaled(const Scalar& c) const;
  Tensor& operator+=(const Tensor& o);

  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void require_same(const Tensor& o) const;
  const Algebra* algebra_;
  int arity_;
  Terms terms_;
};

}  // namespace abhk
