#pragma once

#include <memory>

#include "abhk/ambiskew.hpp"

namespace abhk {

/// U_q(sl2) as the hat-form ambiskew extension of k[K, K^-1] with
/// sigma(K) = q^-2 K, xi = q^-2, h = (K^2 - 1)/(q - q^-1) and y+- = K.
/// The internal X- is F*K; the name F denotes (F*K) K^-1.
class UqSl2 final : public AmbiskewAlgebra {
 public:
  /// q must satisfy q^2 != 1. The Hopf axioms are verified on construction.
  static std::shared_ptr<UqSl2> create(const Scalar& q);

  const Scalar& q() const { return q_; }
  Element K() const { return embed_base(base().letter(0)); }
  Element K_inv() const { return embed_base(base().letter(1)); }
  Element E() const { return x_plus(); }
  Element F() const { return x_minus() * K_inv(); }

  std::vector<std::pair<std::string, Element>> named_generators() const override;
  /// Values on K, E and F.
  Character make_character(const std::map<std::string, Scalar>& values) const override;

 private:
  UqSl2(AmbiskewParams params, Scalar q) : AmbiskewAlgebra(std::move(params)), q_(std::move(q)) {}
  Scalar q_;
};

}  // namespace abhk
