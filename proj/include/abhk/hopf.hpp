#pragma once

// Hopf layer on ambiskew extensions: the checker for extension data in hat
// form, mechanical verification of the Hopf axioms, the change of variables
// from a general coproduct to hat form, and the trichotomy classifier.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abhk/ambiskew.hpp"

namespace abhk {

/// Hat-form extension data. z = y+ y- and xi = chi(y+) = chi(y-) are
/// re-verified by the checker, never assumed.
struct ExtensionData {
  std::shared_ptr<const Algebra> base;
  Character chi;
  Element y_plus, y_minus, z, h;
  Scalar xi;
  Automorphism sigma;  // tau^l_chi
};

/// Fills z = y+ y-, sigma = tau^l_chi and, when xi is not given, xi = chi(y+).
ExtensionData make_extension_data(std::shared_ptr<const Algebra> base, Character chi, Element y_plus, Element y_minus,
                                  Element h, std::optional<Scalar> xi = std::nullopt);

struct ConditionResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct CheckReport {
  bool overall = true;
  std::vector<ConditionResult> conditions;
  std::vector<std::string> notes;
  std::shared_ptr<AmbiskewAlgebra> algebra;  // set when a Hopf algebra was built

  void add(std::string name, bool pass, std::string witness = "");
  void merge(const CheckReport& other, const std::string& prefix = "");
  const ConditionResult* find(const std::string& name) const;
  std::string first_failure() const;
  std::string to_text() const;
  std::string to_machine() const;
};

struct AmbiskewNames {
  std::string x_plus = "X+";
  std::string x_minus = "X-";
  std::string family = "ambiskew";
};

/// Hat-form algebra with Delta(X+-) = X+- (x) 1 + y+- (x) X+-; no checks
/// beyond those of the AmbiskewAlgebra constructor.
std::shared_ptr<AmbiskewAlgebra> build_hat_form(const ExtensionData& data, const AmbiskewNames& names = {});

/// Checks every hypothesis on generators, then builds A and verifies the Hopf
/// axioms on it. On success report.algebra is set and marked verified.
CheckReport check_main_theorem(const ExtensionData& data, const AmbiskewNames& names = {});

/// Coassociativity, counit and antipode laws on every letter, and that
/// Delta, epsilon and S respect every defining relation.
CheckReport verify_hopf_axioms(const Algebra& A);

/// The same laws on given elements, plus Delta(ab) = Delta(a)Delta(b) on
/// consecutive pairs.
CheckReport verify_hopf_on_elements(const Algebra& A, const std::vector<Element>& samples);

// Element-level Hopf operations on a verified algebra; NotHopfError otherwise.
Tensor delta(const AmbiskewAlgebra& A, const Element& a);
Scalar counit(const AmbiskewAlgebra& A, const Element& a);
Element antipode(const AmbiskewAlgebra& A, const Element& a);

// Tensor helpers.
/// Applies Delta to component index, raising the arity by one.
Tensor apply_delta_at(const Tensor& t, int index);
/// Applies epsilon to component index, lowering the arity by one.
Tensor apply_counit_at(const Tensor& t, int index);
/// Multiplies the components of an arity-2 tensor, applying S to the
/// component antipode_index (0, 1, or -1 for none).
Element multiply_out(const Tensor& t, int antipode_index = -1);
/// Collapses an arity-1 tensor to an element.
Element flatten(const Tensor& t);

struct RelabelResult {
  ExtensionData data;
  std::shared_ptr<AmbiskewAlgebra> algebra;  // hat-form algebra, verified
  Element xi_hat_witness;                    // Xh+ Xh- - xi_hat Xh- Xh+ in the general algebra
  CheckReport report;
};

/// Change of variables Xh+- = X+- r+-^-1 for an ambiskew algebra with a
/// general coproduct. Checks the necessary conditions first and throws
/// DomainError when one fails.
RelabelResult relabel(const AmbiskewAlgebra& general);

/// Inverse of relabel: general presentation with X+- = Xh+- r+-.
std::shared_ptr<AmbiskewAlgebra> to_general_form(const ExtensionData& hat, const Element& r_plus, const Element& r_minus,
                                                 const AmbiskewNames& names = {});

/// Subset of {"i", "ii", "iii"}. Throws InvariantBreach if
/// (xi^2 - 1) h = chi(h)(z - 1) fails or no case applies.
std::set<std::string> classify_trichotomy(const ExtensionData& data);
std::string format_cases(const std::set<std::string>& cases);

/// Specialised criteria for commutative or cocommutative bases. Throws
/// DomainError when the base is neither.
CheckReport fast_path_check(const ExtensionData& data);

/// chi = epsilon o sigma.
Character character_of_sigma(const Algebra& base, const Automorphism& sigma);

}  // namespace abhk
