#include "abhk/uqsl2.hpp"

#include <set>

#include "abhk/errors.hpp"
#include "abhk/families.hpp"
#include "abhk/hopf.hpp"

namespace abhk {

std::shared_ptr<UqSl2> UqSl2::create(const Scalar& q) {
  const Field F = q.field();
  const Scalar q2 = q * q;
  if (q.is_zero() || q2.is_one()) throw DomainError("U_q(sl2) needs q^2 != 1, got q = " + q.to_string());
  auto R = GroupAlgebra::laurent(F, "K");
  const Element K = R->letter(0);
  const Scalar chi_K = q2.inverse();
  const Character chi0(R.get(), {chi_K, chi_K.inverse()});

  AmbiskewParams p;
  p.base = R;
  p.sigma = winding_automorphism_left(chi0);
  p.h = (K * K - R->one()).scaled((q - q.inverse()).inverse());
  p.xi = chi_K;
  p.coproduct = CoproductData{K, K, R->one(), R->one()};
  p.x_plus_name = "E";
  p.x_minus_name = "(F*K)";
  p.family = "uqsl2";
  std::shared_ptr<UqSl2> A(new UqSl2(std::move(p), q));
  const CheckReport axioms = verify_hopf_axioms(*A);
  if (!axioms.overall) throw InvariantBreach("U_q(sl2) failed a Hopf axiom: " + axioms.first_failure());
  A->mark_hopf_verified();
  return A;
}

std::vector<std::pair<std::string, Element>> UqSl2::named_generators() const {
  return {{"K", K()}, {"E", E()}, {"F", F()}};
}

Character UqSl2::make_character(const std::map<std::string, Scalar>& values) const {
  static const std::set<std::string> known{"K", "E", "F"};
  for (const auto& [name, v] : values)
    if (!known.count(name)) throw InputError("character names unknown generator " + name);
  for (const auto& name : known)
    if (!values.count(name)) throw InputError("character value for " + name + " required");
  const Scalar& k = values.at("K");
  if (k.is_zero()) throw DomainError("character value on grouplike K is zero");
  // Letters: K, K^-1, E, F*K.
  Character chi(this, {k, k.inverse(), values.at("E"), values.at("F") * k});
  if (auto bad = chi.violated_relation()) throw DomainError("character violates relation " + *bad);
  return chi;
}

}  // namespace abhk
