#pragma once

// Commutative base families: k[t] with t primitive, and group algebras of
// Z^r x Z/m_1 x ... x Z/m_s (Laurent polynomials being the case r = 1).

#include <memory>
#include <string>
#include <vector>

#include "abhk/algebra.hpp"

namespace abhk {

class PolynomialAlgebra final : public Algebra {
 public:
  PolynomialAlgebra(Field field, std::string var = "t");

  const std::vector<Letter>& letters() const override { return letters_; }
  std::size_t monomial_size() const override { return 1; }
  Monomial letter_monomial(int letter) const override;
  std::optional<std::pair<Monomial, int>> split_last(const Monomial& m) const override;
  Element multiply_monomials(const Monomial& a, const Monomial& b) const override;
  std::vector<Relation> relations() const override { return {}; }
  std::string monomial_to_string(const Monomial& m) const override;
  std::vector<long> order_key(const Monomial& m) const override;
  Descriptor descriptor() const override;

  Tensor delta_letter(int letter) const override;
  Scalar counit_letter(int letter) const override;
  Element antipode_letter(int letter) const override;
  int monomial_coradical_degree(const Monomial& m) const override { return m[0]; }

  const std::string& variable() const { return letters_[0].name; }

 private:
  std::vector<Letter> letters_;
};

/// Group algebra of Z^rank x prod Z/torsion[i]. Generators are named
/// var1, var2, ... (or just var for the Laurent case rank 1, no torsion).
class GroupAlgebra final : public Algebra {
 public:
  GroupAlgebra(Field field, int rank, std::vector<int> torsion, std::string var = "g", bool laurent = false);

  static std::shared_ptr<GroupAlgebra> laurent(Field field, std::string var = "t");

  const std::vector<Letter>& letters() const override { return letters_; }
  std::size_t monomial_size() const override { return static_cast<std::size_t>(rank_) + torsion_.size(); }
  Monomial letter_monomial(int letter) const override;
  std::optional<std::pair<Monomial, int>> split_last(const Monomial& m) const override;
  Element multiply_monomials(const Monomial& a, const Monomial& b) const override;
  std::vector<Relation> relations() const override;
  std::string monomial_to_string(const Monomial& m) const override;
  std::vector<long> order_key(const Monomial& m) const override;
  Descriptor descriptor() const override;
  std::optional<Monomial> monomial_inverse(const Monomial& m) const override;

  Tensor delta_letter(int letter) const override;
  Scalar counit_letter(int) const override { return field().one(); }
  Element antipode_letter(int letter) const override;
  int monomial_coradical_degree(const Monomial&) const override { return 0; }
  /// Generator letters only (not their formal inverses).
  std::vector<int> grouplike_generators() const override;

  int rank() const { return rank_; }
  const std::vector<int>& torsion() const { return torsion_; }
  bool is_laurent() const { return laurent_; }
  /// Letter index of the i-th group generator.
  int generator_letter(int i) const { return generator_letters_[static_cast<std::size_t>(i)]; }
  /// Monomial of the group element with the given exponent vector (reduced).
  Monomial group_element(const std::vector<int>& exponents) const;

 private:
  void reduce(Monomial& m) const;
  std::string generator_name(int i) const;

  int rank_;
  std::vector<int> torsion_;
  std::string var_;
  bool laurent_;
  std::vector<Letter> letters_;
  std::vector<int> generator_letters_;     // per coordinate
  std::vector<int> letter_coordinate_;     // per letter
  std::vector<int> letter_sign_;           // +1 or -1 per letter
};

}  // namespace abhk
