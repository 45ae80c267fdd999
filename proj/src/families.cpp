#include "abhk/families.hpp"

#include <cstdlib>

#include "abhk/errors.hpp"

namespace abhk {

namespace {

std::string power_string(const std::string& name, long e) {
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- k[t]

PolynomialAlgebra::PolynomialAlgebra(Field field, std::string var) : Algebra(field) {
  letters_.push_back(Letter{std::move(var), -1, false});
}

Monomial PolynomialAlgebra::letter_monomial(int) const { return Monomial{1}; }

std::optional<std::pair<Monomial, int>> PolynomialAlgebra::split_last(const Monomial& m) const {
  if (m[0] == 0) return std::nullopt;
  return std::make_pair(Monomial{m[0] - 1}, 0);
}

Element PolynomialAlgebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
  return Element::monomial(this, Monomial{a[0] + b[0]}, field().one());
}

std::string PolynomialAlgebra::monomial_to_string(const Monomial& m) const {
  return m[0] == 0 ? "1" : power_string(variable(), m[0]);
}

std::vector<long> PolynomialAlgebra::order_key(const Monomial& m) const { return {m[0], m[0]}; }

Descriptor PolynomialAlgebra::descriptor() const {
  Descriptor d;
  d.family = "polynomial";
  d.gk_dim = Dim::finite(1);
  d.gl_dim = Dim::finite(1);
  d.inj_dim = Dim::finite(1);
  d.noetherian = d.domain = d.prime = d.semiprime_goldie = true;
  d.commutative = d.cocommutative = d.pointed = true;
  d.affine_commutative_domain = true;
  d.as_gorenstein = d.as_regular = d.auslander_gorenstein = d.auslander_regular = true;
  d.hopf = true;
  return d;
}

Tensor PolynomialAlgebra::delta_letter(int) const {
  const Element t = letter(0);
  return Tensor::pure({t, one()}) + Tensor::pure({one(), t});
}

Scalar PolynomialAlgebra::counit_letter(int) const { return field().zero(); }

Element PolynomialAlgebra::antipode_letter(int) const { return -letter(0); }

// ---------------------------------------------------------------- groups

GroupAlgebra::GroupAlgebra(Field field, int rank, std::vector<int> torsion, std::string var, bool laurent)
    : Algebra(field), rank_(rank), torsion_(std::move(torsion)), var_(std::move(var)), laurent_(laurent) {
  if (rank_ < 0) throw DomainError("group rank must be non-negative");
  for (int m : torsion_)
    if (m < 2) throw DomainError("torsion orders must be at least 2");
  if (laurent_ && (rank_ != 1 || !torsion_.empty())) throw DomainError("Laurent family is Z without torsion");
  const int coords = rank_ + static_cast<int>(torsion_.size());
  if (coords == 0) throw DomainError("group algebra needs at least one generator");
  generator_letters_.resize(static_cast<std::size_t>(coords));
  for (int i = 0; i < coords; ++i) {
    const int idx = static_cast<int>(letters_.size());
    generator_letters_[static_cast<std::size_t>(i)] = idx;
    letters_.push_back(Letter{generator_name(i), -1, true});
    letter_coordinate_.push_back(i);
    letter_sign_.push_back(1);
    if (i < rank_) {
      letters_.push_back(Letter{generator_name(i) + "^-1", idx, true});
      letters_[static_cast<std::size_t>(idx)].inverse = idx + 1;
      letter_coordinate_.push_back(i);
      letter_sign_.push_back(-1);
    }
  }
}

std::shared_ptr<GroupAlgebra> GroupAlgebra::laurent(Field field, std::string var) {
  return std::make_shared<GroupAlgebra>(field, 1, std::vector<int>{}, std::move(var), true);
}

std::string GroupAlgebra::generator_name(int i) const { return laurent_ ? var_ : var_ + std::to_string(i + 1); }

void GroupAlgebra::reduce(Monomial& m) const {
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    int& e = m[static_cast<std::size_t>(rank_) + j];
    e %= torsion_[j];
    if (e < 0) e += torsion_[j];
  }
}

Monomial GroupAlgebra::group_element(const std::vector<int>& exponents) const {
  if (exponents.size() != monomial_size()) throw DomainError("group element has the wrong number of coordinates");
  Monomial m(exponents.begin(), exponents.end());
  reduce(m);
  return m;
}

Monomial GroupAlgebra::letter_monomial(int letter) const {
  Monomial m(monomial_size(), 0);
  m[static_cast<std::size_t>(letter_coordinate_[static_cast<std::size_t>(letter)])] = letter_sign_[static_cast<std::size_t>(letter)];
  reduce(m);
  return m;
}

std::optional<std::pair<Monomial, int>> GroupAlgebra::split_last(const Monomial& m) const {
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    Monomial prefix = m;
    const int gen = generator_letters_[i];
    if (m[i] > 0) {
      prefix[i] -= 1;
      return std::make_pair(prefix, gen);
    }
    prefix[i] += 1;
    return std::make_pair(prefix, letters_[static_cast<std::size_t>(gen)].inverse);
  }
  return std::nullopt;
}

Element GroupAlgebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  reduce(m);
  return Element::monomial(this, m, field().one());
}

std::vector<Relation> GroupAlgebra::relations() const {
  std::vector<Relation> rels;
  const Scalar one = field().one();
  const int coords = static_cast<int>(generator_letters_.size());
  for (int i = 0; i < coords; ++i) {
    const int gi = generator_letters_[static_cast<std::size_t>(i)];
    const std::string& ni = letters_[static_cast<std::size_t>(gi)].name;
    if (i < rank_) {
      const int inv = letters_[static_cast<std::size_t>(gi)].inverse;
      rels.push_back(Relation{ni + "*" + ni + "^-1 = 1", {{one, {gi, inv}}}, {{one, {}}}});
      rels.push_back(Relation{ni + "^-1*" + ni + " = 1", {{one, {inv, gi}}}, {{one, {}}}});
    } else {
      const int order = torsion_[static_cast<std::size_t>(i - rank_)];
      rels.push_back(Relation{ni + "^" + std::to_string(order) + " = 1",
                              {{one, std::vector<int>(static_cast<std::size_t>(order), gi)}},
                              {{one, {}}}});
    }
    for (int j = i + 1; j < coords; ++j) {
      const int gj = generator_letters_[static_cast<std::size_t>(j)];
      const std::string& nj = letters_[static_cast<std::size_t>(gj)].name;
      rels.push_back(Relation{ni + "*" + nj + " = " + nj + "*" + ni, {{one, {gi, gj}}}, {{one, {gj, gi}}}});
    }
  }
  return rels;
}

std::string GroupAlgebra::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += power_string(generator_name(static_cast<int>(i)), m[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<long> GroupAlgebra::order_key(const Monomial& m) const {
  std::vector<long> key{0};
  for (int e : m) {
    key[0] += std::abs(e);
    key.push_back(e);
  }
  return key;
}

Descriptor GroupAlgebra::descriptor() const {
  Descriptor d;
  d.family = laurent_ ? "laurent" : "group";
  const bool torsion_free = torsion_.empty();
  d.gk_dim = Dim::finite(rank_);
  d.gl_dim = Dim::finite(rank_);
  d.inj_dim = Dim::finite(rank_);
  d.noetherian = true;
  d.domain = torsion_free;
  d.prime = torsion_free;
  d.semiprime_goldie = true;
  d.commutative = d.cocommutative = d.pointed = true;
  d.affine_commutative_domain = torsion_free;
  d.as_gorenstein = d.as_regular = d.auslander_gorenstein = d.auslander_regular = true;
  d.hopf = true;
  return d;
}

std::optional<Monomial> GroupAlgebra::monomial_inverse(const Monomial& m) const {
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = -m[i];
  reduce(r);
  return r;
}

Tensor GroupAlgebra::delta_letter(int letter) const {
  const Element g = this->letter(letter);
  return Tensor::pure({g, g});
}

Element GroupAlgebra::antipode_letter(int letter) const {
  return Element::monomial(this, *monomial_inverse(letter_monomial(letter)), field().one());
}

std::vector<int> GroupAlgebra::grouplike_generators() const { return generator_letters_; }

}  // namespace abhk
