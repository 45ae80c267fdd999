#pragma once

// The ambiskew extension A = A(R, X+, X-, sigma, h, xi): R-ring generated by
// X+ and X- with X+ r = sigma(r) X+, X- r = sigma^-1(r) X- and
// X+ X- = h + xi X- X+. Monomials are [base monomial..., m, n] standing for
// r X+^m X-^n with the base coefficient on the left.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "abhk/algebra.hpp"

namespace abhk {

/// Delta(X+-) = X+- (x) r+- + l+- (x) X+-, all four grouplike in R.
struct CoproductData {
  Element l_plus, l_minus, r_plus, r_minus;
};

struct AmbiskewParams {
  std::shared_ptr<const Algebra> base;
  Automorphism sigma;
  Element h;
  Scalar xi;
  std::optional<CoproductData> coproduct;
  std::string x_plus_name = "X+";
  std::string x_minus_name = "X-";
  std::string family = "ambiskew";
};

class AmbiskewAlgebra : public Algebra {
 public:
  /// Validates xi != 0, h central, sigma an automorphism with the given
  /// inverse, and grouplike coproduct data. Throws DomainError otherwise.
  explicit AmbiskewAlgebra(AmbiskewParams params);

  // Algebra interface
  const std::vector<Letter>& letters() const override { return letters_; }
  std::size_t monomial_size() const override { return base_size_ + 2; }
  Monomial letter_monomial(int letter) const override;
  std::optional<std::pair<Monomial, int>> split_last(const Monomial& m) const override;
  Element multiply_monomials(const Monomial& a, const Monomial& b) const override;
  std::vector<Relation> relations() const override;
  std::string monomial_to_string(const Monomial& m) const override;
  std::vector<long> order_key(const Monomial& m) const override;
  Descriptor descriptor() const override;
  std::optional<Monomial> monomial_inverse(const Monomial& m) const override;
  std::vector<std::pair<std::string, Element>> named_generators() const override;

  bool has_coproduct() const override { return params_.coproduct.has_value() && base_->has_coproduct(); }
  Tensor delta_letter(int letter) const override;
  Scalar counit_letter(int letter) const override;
  Element antipode_letter(int letter) const override;
  int monomial_coradical_degree(const Monomial& m) const override;
  std::vector<int> grouplike_generators() const override { return base_->grouplike_generators(); }

  // Structure
  const Algebra& base() const { return *base_; }
  const std::shared_ptr<const Algebra>& base_ptr() const { return base_; }
  const Automorphism& sigma() const { return params_.sigma; }
  const Element& h() const { return params_.h; }
  const Scalar& xi() const { return params_.xi; }
  const std::optional<CoproductData>& coproduct() const { return params_.coproduct; }
  const AmbiskewParams& params() const { return params_; }
  /// r+ = r- = 1.
  bool hat_form() const;
  /// Multiplicative order of xi.
  Order xi_order() const;

  int x_plus_letter() const { return static_cast<int>(base_letters_); }
  int x_minus_letter() const { return static_cast<int>(base_letters_) + 1; }
  Element x_plus() const { return letter(x_plus_letter()); }
  Element x_minus() const { return letter(x_minus_letter()); }

  /// r X+^m X-^n for a base element r.
  Element make(const Element& r, int m, int n) const;
  Element embed_base(const Element& r) const { return make(r, 0, 0); }
  Monomial lift(const Monomial& base_mono, int m, int n) const;
  Tensor lift_tensor(const Tensor& t) const;
  Element apply_sigma_power(const Element& r, long k) const { return params_.sigma.apply_power(r, k); }

  /// (m, n) -> base coefficient.
  using Graded = std::map<std::pair<int, int>, Element>;
  Graded graded(const Element& a) const;
  Element from_graded(const Graded& g) const;
  Monomial base_part(const Monomial& m) const;

  void mark_hopf_verified() { hopf_verified_ = true; }
  bool hopf_verified() const { return hopf_verified_; }

 protected:
  /// Hook for presentations that rename or re-express generators.
  virtual std::string family_name() const { return params_.family; }

 private:
  Graded negative_times_positive(int b, int c) const;  // X-^b X+^c
  Graded x_minus_times_x_plus_power(int i) const;      // X- X+^i

  AmbiskewParams params_;
  std::shared_ptr<const Algebra> base_;
  std::size_t base_size_;
  std::size_t base_letters_;
  std::vector<Letter> letters_;
  Scalar xi_inv_;
  bool hopf_verified_ = false;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<Monomial, Monomial>, Element> mul_cache_;
  mutable std::map<std::pair<int, int>, Graded> n_cache_;
  mutable std::map<int, Graded> l_cache_;
};

enum class RewriteStrategy { Leftmost, Rightmost, Random };

/// Reduces a product of letters of A to normal form with an explicit
/// rewriting system on words, independent of multiply_monomials: adjacent
/// base factors multiply in R, X+ b -> sigma(b) X+, X- b -> sigma^-1(b) X-,
/// and X- X+ -> xi^-1 X+ X- - xi^-1 h.
Element normalize_word(const AmbiskewAlgebra& A, const std::vector<int>& letters, RewriteStrategy strategy,
                       std::uint64_t seed = 0);

}  // namespace abhk
