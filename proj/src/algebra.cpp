#include "abhk/algebra.hpp"

#include <algorithm>
#include <set>

#include "abhk/errors.hpp"

namespace abhk {

// ---------------------------------------------------------------- Dim

Dim Dim::finite(int v) {
  Dim d;
  d.kind_ = Kind::Finite;
  d.value_ = v;
  return d;
}

Dim Dim::infinite() {
  Dim d;
  d.kind_ = Kind::Infinite;
  return d;
}

int Dim::value() const {
  if (kind_ != Kind::Finite) throw DomainError("dimension is not finite");
  return value_;
}

Dim Dim::plus(int k) const {
  if (kind_ == Kind::Finite) return finite(value_ + k);
  return *this;
}

std::string Dim::to_string() const {
  switch (kind_) {
    case Kind::Finite:
      return std::to_string(value_);
    case Kind::Infinite:
      return "infinite";
    case Kind::Unknown:
      return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Algebra

std::vector<std::pair<std::string, Element>> Algebra::named_generators() const {
  std::vector<std::pair<std::string, Element>> out;
  for (std::size_t i = 0; i < letters().size(); ++i) out.emplace_back(letters()[i].name, letter(static_cast<int>(i)));
  return out;
}

std::vector<int> Algebra::grouplike_generators() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < letters().size(); ++i)
    if (letters()[i].grouplike) out.push_back(static_cast<int>(i));
  return out;
}

Character Algebra::make_character(const std::map<std::string, Scalar>& values) const {
  const auto& ls = letters();
  std::set<std::string> used;
  std::vector<Scalar> vals;
  for (const auto& l : ls) {
    if (auto it = values.find(l.name); it != values.end()) {
      vals.push_back(it->second);
      used.insert(l.name);
    } else if (l.inverse >= 0 && values.count(ls[static_cast<std::size_t>(l.inverse)].name)) {
      const Scalar& v = values.at(ls[static_cast<std::size_t>(l.inverse)].name);
      if (v.is_zero()) throw DomainError("character value on grouplike " + ls[static_cast<std::size_t>(l.inverse)].name + " is zero");
      vals.push_back(v.inverse());
    } else {
      throw InputError("character value for " + l.name + " required");
    }
  }
  for (const auto& [name, v] : values)
    if (!used.count(name)) throw InputError("character names unknown generator " + name);
  Character chi(this, std::move(vals));
  if (auto bad = chi.violated_relation()) throw DomainError("character violates relation " + *bad);
  return chi;
}

Element Algebra::scalar(const Scalar& c) const { return Element::monomial(this, identity_monomial(), c); }

Element Algebra::letter(int i) const { return Element::monomial(this, letter_monomial(i), field_.one()); }

int Algebra::letter_index(const std::string& name) const {
  const auto& ls = letters();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> Algebra::word(const Monomial& m) const {
  std::vector<int> out;
  Monomial cur = m;
  while (auto split = split_last(cur)) {
    out.push_back(split->second);
    cur = std::move(split->first);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

LetterPoly Algebra::letter_poly(const Element& e) const {
  LetterPoly p;
  for (const auto& [m, c] : e.terms()) p.push_back(LetterTerm{c, word(m)});
  return p;
}

Element Algebra::evaluate(const LetterPoly& p) const {
  Element total = zero();
  for (const auto& term : p) {
    Element prod = one();
    for (int l : term.word) prod = prod * letter(l);
    total += prod.scaled(term.coeff);
  }
  return total;
}

Tensor Algebra::tensor_one(int arity) const {
  std::vector<Element> ones(static_cast<std::size_t>(arity), one());
  return Tensor::pure(ones);
}

Tensor Algebra::delta_monomial(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = delta_cache_.find(m); it != delta_cache_.end()) return it->second;
  }
  Tensor result(this, 2);
  if (auto split = split_last(m)) {
    result = delta_monomial(split->first) * delta_letter(split->second);
  } else {
    result = tensor_one(2);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  delta_cache_.emplace(m, result);
  return result;
}

Tensor Algebra::delta(const Element& a) const {
  Tensor out(this, 2);
  for (const auto& [m, c] : a.terms()) out += delta_monomial(m).scaled(c);
  return out;
}

Scalar Algebra::counit(const Element& a) const {
  Scalar total = field_.zero();
  for (const auto& [m, c] : a.terms()) {
    Scalar prod = c;
    for (int l : word(m)) {
      prod *= counit_letter(l);
      if (prod.is_zero()) break;
    }
    total += prod;
  }
  return total;
}

Element Algebra::antipode_monomial(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = antipode_cache_.find(m); it != antipode_cache_.end()) return it->second;
  }
  Element result = one();
  if (auto split = split_last(m)) result = antipode_letter(split->second) * antipode_monomial(split->first);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  antipode_cache_.emplace(m, result);
  return result;
}

Element Algebra::antipode(const Element& a) const {
  Element out = zero();
  for (const auto& [m, c] : a.terms()) out += antipode_monomial(m).scaled(c);
  return out;
}

bool Algebra::is_grouplike(const Element& a) const {
  if (a.is_zero() || !counit(a).is_one()) return false;
  return delta(a) == Tensor::pure({a, a});
}

bool Algebra::is_central(const Element& a) const {
  for (std::size_t i = 0; i < letters().size(); ++i) {
    const Element g = letter(static_cast<int>(i));
    if (a * g != g * a) return false;
  }
  return true;
}

bool Algebra::is_skew_primitive(const Element& a, const Element& g, const Element& w) const {
  if (!is_grouplike(g) || !is_grouplike(w)) throw DomainError("skew-primitive test needs grouplike g and w");
  return delta(a) == Tensor::pure({a, g}) + Tensor::pure({w, a});
}

std::optional<Element> Algebra::inverse_of_grouplike(const Element& g) const {
  if (!is_grouplike(g)) return std::nullopt;
  Element inv = antipode(g);
  if (g * inv != one()) return std::nullopt;
  return inv;
}

int Algebra::coradical_degree(const Element& a) const {
  if (a.is_zero()) throw DomainError("coradical degree of zero");
  int best = 0;
  for (const auto& [m, c] : a.terms()) best = std::max(best, monomial_coradical_degree(m));
  return best;
}

// ---------------------------------------------------------------- Character

Character::Character(const Algebra* algebra, std::vector<Scalar> values) : algebra_(algebra), values_(std::move(values)) {
  if (values_.size() != algebra_->letters().size()) throw DomainError("character needs one value per letter");
}

Scalar Character::on_monomial(const Monomial& m) const {
  Scalar prod = algebra_->field().one();
  for (int l : algebra_->word(m)) prod *= values_[static_cast<std::size_t>(l)];
  return prod;
}

Scalar Character::operator()(const Element& a) const {
  if (a.algebra() != algebra_) throw AlgebraMismatch("character applied to an element of another algebra");
  Scalar total = algebra_->field().zero();
  for (const auto& [m, c] : a.terms()) total += c * on_monomial(m);
  return total;
}

Character Character::compose_antipode() const {
  std::vector<Scalar> vals;
  for (std::size_t i = 0; i < values_.size(); ++i) vals.push_back((*this)(algebra_->antipode_letter(static_cast<int>(i))));
  return Character(algebra_, std::move(vals));
}

Scalar evaluate_letter_poly(const LetterPoly& p, const std::vector<Scalar>& values, const Field& field) {
  Scalar total = field.zero();
  for (const auto& term : p) {
    Scalar prod = term.coeff;
    for (int l : term.word) prod *= values[static_cast<std::size_t>(l)];
    total += prod;
  }
  return total;
}

std::optional<std::string> Character::violated_relation() const {
  for (const auto& rel : algebra_->relations()) {
    if (evaluate_letter_poly(rel.lhs, values_, algebra_->field()) != evaluate_letter_poly(rel.rhs, values_, algebra_->field()))
      return rel.name;
  }
  return std::nullopt;
}

bool Character::is_counit() const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != algebra_->counit_letter(static_cast<int>(i))) return false;
  return true;
}

std::string Character::to_string() const {
  std::string out;
  const auto& ls = algebra_->letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i > 0) out += ", ";
    out += ls[i].name + " -> " + values_[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------- Automorphism

Automorphism::Automorphism(const Algebra* algebra, std::vector<Element> images, std::vector<Element> inverse_images)
    : algebra_(algebra),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)),
      cache_(std::make_shared<Cache>()) {
  const std::size_t n = algebra_->letters().size();
  if (images_.size() != n || inverse_images_.size() != n)
    throw DomainError("automorphism needs one image and one inverse image per letter");
}

Automorphism Automorphism::identity(const Algebra* algebra) {
  std::vector<Element> ims;
  for (std::size_t i = 0; i < algebra->letters().size(); ++i) ims.push_back(algebra->letter(static_cast<int>(i)));
  return Automorphism(algebra, ims, ims);
}

Element Automorphism::apply_power_monomial(const Monomial& m, long k) const {
  if (k == 0) return algebra_->monomial(m);
  const auto key = std::make_pair(m, k);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (auto it = cache_->powers.find(key); it != cache_->powers.end()) return it->second;
  }
  Element result = algebra_->zero();
  if (k == 1 || k == -1) {
    const auto& ims = (k == 1) ? images_ : inverse_images_;
    result = algebra_->one();
    for (int l : algebra_->word(m)) result = result * ims[static_cast<std::size_t>(l)];
  } else {
    const long step = k > 0 ? 1 : -1;
    for (const auto& [mm, c] : apply_power_monomial(m, k - step).terms())
      result += apply_power_monomial(mm, step).scaled(c);
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->powers.emplace(key, result);
  return result;
}

Element Automorphism::apply_power(const Element& a, long k) const {
  Element out = algebra_->zero();
  for (const auto& [m, c] : a.terms()) out += apply_power_monomial(m, k).scaled(c);
  return out;
}

Element Automorphism::apply(const Element& a) const { return apply_power(a, 1); }
Element Automorphism::apply_inverse(const Element& a) const { return apply_power(a, -1); }

std::optional<std::string> Automorphism::defect() const {
  auto mul = [](const Element& x, const Element& y) { return x * y; };
  const Element one = algebra_->one();
  for (const auto& rel : algebra_->relations()) {
    if (evaluate_letter_poly(rel.lhs, images_, one, mul) != evaluate_letter_poly(rel.rhs, images_, one, mul))
      return "image violates " + rel.name;
    if (evaluate_letter_poly(rel.lhs, inverse_images_, one, mul) != evaluate_letter_poly(rel.rhs, inverse_images_, one, mul))
      return "inverse image violates " + rel.name;
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Element g = algebra_->letter(static_cast<int>(i));
    if (apply(inverse_images_[i]) != g || apply_inverse(images_[i]) != g)
      return "inverse mismatch on " + algebra_->letters()[i].name;
  }
  return std::nullopt;
}

Automorphism Automorphism::inverse() const { return Automorphism(algebra_, inverse_images_, images_); }

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != algebra_->letter(static_cast<int>(i))) return false;
  return true;
}

std::optional<std::vector<Scalar>> Automorphism::diagonal_letters() const {
  std::vector<Scalar> eig;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& im = images_[i];
    const Monomial lm = algebra_->letter_monomial(static_cast<int>(i));
    if (im.size() != 1 || im.terms().begin()->first != lm) return std::nullopt;
    eig.push_back(im.terms().begin()->second);
  }
  return eig;
}

// ---------------------------------------------------------------- windings

Element winding_left(const Character& chi, const Element& a) {
  const Algebra* alg = a.algebra();
  Element out = alg->zero();
  for (const auto& [k, c] : alg->delta(a).terms()) {
    const Scalar v = c * chi.on_monomial(k[0]);
    if (!v.is_zero()) out.add_term(k[1], v);
  }
  return out;
}

Element winding_right(const Character& chi, const Element& a) {
  const Algebra* alg = a.algebra();
  Element out = alg->zero();
  for (const auto& [k, c] : alg->delta(a).terms()) {
    const Scalar v = c * chi.on_monomial(k[1]);
    if (!v.is_zero()) out.add_term(k[0], v);
  }
  return out;
}

Element adjoint_left(const Element& y, const Element& a) {
  const Algebra* alg = a.algebra();
  Element out = alg->zero();
  for (const auto& [k, c] : alg->delta(y).terms())
    out += (alg->monomial(k[0]) * a * alg->antipode_monomial(k[1])).scaled(c);
  return out;
}

Element adjoint_right(const Element& y, const Element& a) {
  const Algebra* alg = a.algebra();
  Element out = alg->zero();
  for (const auto& [k, c] : alg->delta(y).terms())
    out += (alg->antipode_monomial(k[0]) * a * alg->monomial(k[1])).scaled(c);
  return out;
}

namespace {

Automorphism winding_automorphism(const Character& chi, bool left) {
  const Algebra* alg = chi.algebra();
  const Character inv = chi.compose_antipode();
  std::vector<Element> ims, inv_ims;
  for (std::size_t i = 0; i < alg->letters().size(); ++i) {
    const Element g = alg->letter(static_cast<int>(i));
    ims.push_back(left ? winding_left(chi, g) : winding_right(chi, g));
    inv_ims.push_back(left ? winding_left(inv, g) : winding_right(inv, g));
  }
  return Automorphism(alg, std::move(ims), std::move(inv_ims));
}

}  // namespace

Automorphism winding_automorphism_left(const Character& chi) { return winding_automorphism(chi, true); }
Automorphism winding_automorphism_right(const Character& chi) { return winding_automorphism(chi, false); }

}  // namespace abhk
