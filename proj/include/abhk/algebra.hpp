#pragma once

// Uniform interface for the Hopf algebras handled by the library. Every
// algebra is presented by letters (generators, with formal inverses for
// invertible grouplikes) and relations among words in the letters; Hopf
// operations are specified on letters and extended along words.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "abhk/element.hpp"
#include "abhk/scalar.hpp"

namespace abhk {

struct Letter {
  std::string name;
  int inverse = -1;  // index of the inverse letter, or -1
  bool grouplike = false;
};

struct LetterTerm {
  Scalar coeff;
  std::vector<int> word;  // product of letters, left to right
};
using LetterPoly = std::vector<LetterTerm>;

/// lhs = rhs in the algebra.
struct Relation {
  std::string name;
  LetterPoly lhs;
  LetterPoly rhs;
};

/// Non-negative integer, infinity, or unknown.
class Dim {
 public:
  static Dim finite(int v);
  static Dim infinite();
  static Dim unknown() { return Dim(); }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }
  int value() const;
  Dim plus(int k) const;
  std::string to_string() const;
  bool operator==(const Dim&) const = default;

 private:
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind_ = Kind::Unknown;
  int value_ = 0;
};

struct Descriptor {
  std::string family;
  Dim gk_dim;
  Dim gl_dim;
  Dim inj_dim;
  bool noetherian = false;
  bool domain = false;
  bool prime = false;
  bool semiprime_goldie = false;
  bool commutative = false;
  bool cocommutative = false;
  bool pointed = false;
  bool affine_commutative_domain = false;
  bool as_gorenstein = false;
  bool as_regular = false;
  bool auslander_gorenstein = false;
  bool auslander_regular = false;
  bool hopf = false;  // Hopf structure intrinsic or verified
};

class Character;

class Algebra {
 public:
  explicit Algebra(Field field) : field_(field) {}
  virtual ~Algebra() = default;
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const Field& field() const { return field_; }

  // ---- presentation, supplied by each family

  virtual const std::vector<Letter>& letters() const = 0;
  virtual std::size_t monomial_size() const = 0;
  virtual Monomial letter_monomial(int letter) const = 0;
  /// (prefix, letter) with prefix * letter == m exactly; nullopt for 1.
  virtual std::optional<std::pair<Monomial, int>> split_last(const Monomial& m) const = 0;
  virtual Element multiply_monomials(const Monomial& a, const Monomial& b) const = 0;
  virtual std::vector<Relation> relations() const = 0;
  virtual std::string monomial_to_string(const Monomial& m) const = 0;
  /// Printing order: ascending lexicographic on this key.
  virtual std::vector<long> order_key(const Monomial& m) const = 0;
  virtual Descriptor descriptor() const = 0;
  virtual std::optional<Monomial> monomial_inverse(const Monomial&) const { return std::nullopt; }
  /// Names accepted by the expression parser, with their values.
  virtual std::vector<std::pair<std::string, Element>> named_generators() const;

  // ---- Hopf structure on letters

  virtual bool has_coproduct() const { return true; }
  virtual Tensor delta_letter(int letter) const = 0;
  virtual Scalar counit_letter(int letter) const = 0;
  virtual Element antipode_letter(int letter) const = 0;
  /// Minimal t with the monomial in the t-th coradical layer; the degree of
  /// an element is the maximum over its support.
  virtual int monomial_coradical_degree(const Monomial& m) const = 0;
  /// Letters generating the grouplikes used for Z(G(R)) membership.
  virtual std::vector<int> grouplike_generators() const;
  /// Character from values on named generators.
  virtual Character make_character(const std::map<std::string, Scalar>& values) const;

  // ---- derived operations

  Element zero() const { return Element(this); }
  Element one() const { return scalar(field_.one()); }
  Element scalar(const Scalar& c) const;
  Element letter(int i) const;
  Element monomial(const Monomial& m) const { return Element::monomial(this, m, field_.one()); }
  Monomial identity_monomial() const { return Monomial(monomial_size(), 0); }
  int letter_index(const std::string& name) const;  // -1 when absent

  std::vector<int> word(const Monomial& m) const;
  LetterPoly letter_poly(const Element& e) const;
  Element evaluate(const LetterPoly& p) const;

  Tensor delta(const Element& a) const;
  Tensor delta_monomial(const Monomial& m) const;
  Scalar counit(const Element& a) const;
  Element antipode(const Element& a) const;
  Element antipode_monomial(const Monomial& m) const;

  bool is_grouplike(const Element& a) const;
  /// Commutes with every letter.
  bool is_central(const Element& a) const;
  bool is_skew_primitive(const Element& a, const Element& g, const Element& w) const;
  std::optional<Element> inverse_of_grouplike(const Element& g) const;
  int coradical_degree(const Element& a) const;

  /// Lift of a tensor in the arity-fold power of this algebra through
  /// (id (x) f) style maps is left to callers; these are the two most common.
  Tensor tensor_one(int arity) const;

 private:
  Field field_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Monomial, Tensor> delta_cache_;
  mutable std::map<Monomial, Element> antipode_cache_;
};

/// Algebra map R -> k, stored by values on letters.
class Character {
 public:
  Character() = default;
  Character(const Algebra* algebra, std::vector<Scalar> values);

  const Algebra* algebra() const { return algebra_; }
  const std::vector<Scalar>& values() const { return values_; }
  Scalar on_monomial(const Monomial& m) const;
  Scalar operator()(const Element& a) const;
  /// chi o S.
  Character compose_antipode() const;
  /// Name of the first relation violated, if any.
  std::optional<std::string> violated_relation() const;
  bool is_counit() const;
  std::string to_string() const;

 private:
  const Algebra* algebra_ = nullptr;
  std::vector<Scalar> values_;
};

/// Algebra endomorphism given by images of letters, extended along words.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(const Algebra* algebra, std::vector<Element> images, std::vector<Element> inverse_images);

  static Automorphism identity(const Algebra* algebra);

  const Algebra* algebra() const { return algebra_; }
  const std::vector<Element>& images() const { return images_; }
  const std::vector<Element>& inverse_images() const { return inverse_images_; }

  Element apply(const Element& a) const;
  Element apply_inverse(const Element& a) const;
  /// sigma^k for any integer k.
  Element apply_power(const Element& a, long k) const;
  Element apply_power_monomial(const Monomial& m, long k) const;

  /// Name of the first relation not preserved, or a letter whose image and
  /// inverse image do not compose to the identity.
  std::optional<std::string> defect() const;

  Automorphism inverse() const;
  bool is_identity() const;
  /// sigma acts diagonally on the monomial basis; returns the eigenvalue of
  /// each letter when it does.
  std::optional<std::vector<Scalar>> diagonal_letters() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Monomial, long>, Element> powers;
  };
  const Algebra* algebra_ = nullptr;
  std::vector<Element> images_;
  std::vector<Element> inverse_images_;
  std::shared_ptr<Cache> cache_;
};

// Winding automorphisms and adjoint actions.
Element winding_left(const Character& chi, const Element& a);
Element winding_right(const Character& chi, const Element& a);
Element adjoint_left(const Element& y, const Element& a);
Element adjoint_right(const Element& y, const Element& a);
/// tau^l_chi materialized on letters, with inverse tau^l_{chi o S}.
Automorphism winding_automorphism_left(const Character& chi);
Automorphism winding_automorphism_right(const Character& chi);

/// Evaluates a letter polynomial in a target by letter images.
template <class T, class Mul>
T evaluate_letter_poly(const LetterPoly& p, const std::vector<T>& images, const T& one, Mul mul) {
  T total = one.scaled(one.algebra()->field().zero());
  for (const auto& term : p) {
    T prod = one;
    for (int l : term.word) prod = mul(prod, images[static_cast<std::size_t>(l)]);
    total += prod.scaled(term.coeff);
  }
  return total;
}

/// Image of one letter-relation side under a character.
Scalar evaluate_letter_poly(const LetterPoly& p, const std::vector<Scalar>& values, const Field& field);

/// Maps a tensor componentwise: (f_1 (x) ... (x) f_k)(t).
template <class F>
Tensor map_component(const Tensor& t, int index, F f) {
  const Algebra* alg = t.algebra();
  Tensor out(alg, t.arity());
  for (const auto& [key, c] : t.terms()) {
    Element image = f(key[static_cast<std::size_t>(index)]);
    for (const auto& [m, d] : image.terms()) {
      Tensor::Key k = key;
      k[static_cast<std::size_t>(index)] = m;
      out.add_term(k, c * d);
    }
  }
  return out;
}

}  // namespace abhk
