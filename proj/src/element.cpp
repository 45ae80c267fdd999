#include "abhk/element.hpp"

#include <algorithm>

#include "abhk/algebra.hpp"
#include "abhk/errors.hpp"

namespace abhk {

// ---------------------------------------------------------------- Element

Element::Element(const Algebra* algebra) : algebra_(algebra) {}

Element::Element(const Algebra* algebra, Terms terms) : algebra_(algebra) {
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

Element Element::monomial(const Algebra* algebra, const Monomial& m, const Scalar& c) {
  Element e(algebra);
  e.add_term(m, c);
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? algebra_->field().zero() : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::require_same(const Element& o) const {
  if (algebra_ != o.algebra_) throw AlgebraMismatch("elements belong to different algebras");
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator-() const {
  Element r(algebra_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(algebra_);
  if (c.is_zero()) return r;
  for (const auto& [m, d] : terms_) r.terms_.emplace(m, d * c);
  return r;
}

Element Element::operator*(const Element& o) const {
  require_same(o);
  Element r(algebra_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : o.terms_) {
      const Scalar cd = c * d;
      for (const auto& [m, e] : algebra_->multiply_monomials(a, b).terms()) r.add_term(m, cd * e);
    }
  }
  return r;
}

bool Element::operator==(const Element& o) const {
  require_same(o);
  return terms_ == o.terms_;
}

namespace {

std::string render_term(const Scalar& c, const std::string& mono, bool first) {
  const Scalar::Rendering r = c.render();
  std::string out;
  if (first) {
    if (r.negative) out += "-";
  } else {
    out += r.negative ? " - " : " + ";
  }
  if (mono == "1") return out + (r.compound ? "(" + r.text + ")" : r.text);
  if (!r.compound && r.text == "1") return out + mono;
  return out + (r.compound ? "(" + r.text + ")" : r.text) + "*" + mono;
}

template <class Key, class KeyOf>
std::vector<Key> sorted_keys(const std::map<Key, Scalar>& terms, KeyOf key_of) {
  std::vector<std::pair<std::vector<long>, Key>> keyed;
  keyed.reserve(terms.size());
  for (const auto& kv : terms) keyed.emplace_back(key_of(kv.first), kv.first);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Key> out;
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& m : sorted_keys(terms_, [&](const Monomial& m) { return algebra_->order_key(m); })) {
    out += render_term(terms_.at(m), algebra_->monomial_to_string(m), first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- Tensor

Tensor::Tensor(const Algebra* algebra, int arity) : algebra_(algebra), arity_(arity) {}

Tensor Tensor::pure(const std::vector<Element>& factors) {
  if (factors.empty()) throw DomainError("empty tensor product");
  const Algebra* alg = factors.front().algebra();
  Tensor out(alg, static_cast<int>(factors.size()));
  out.terms_.emplace(Key{}, alg->field().one());
  for (const auto& f : factors) {
    if (f.algebra() != alg) throw AlgebraMismatch("tensor factors belong to different algebras");
    Terms next;
    for (const auto& [k, c] : out.terms_) {
      for (const auto& [m, d] : f.terms()) {
        Key nk = k;
        nk.push_back(m);
        next.emplace(std::move(nk), c * d);
      }
    }
    out.terms_ = std::move(next);
  }
  return out;
}

void Tensor::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Tensor::require_same(const Tensor& o) const {
  if (algebra_ != o.algebra_ || arity_ != o.arity_) throw AlgebraMismatch("tensors of different shapes");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor r = *this;
  r += o;
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  require_same(o);
  Tensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor r(algebra_, arity_);
  if (c.is_zero()) return r;
  for (const auto& [k, d] : terms_) r.terms_.emplace(k, d * c);
  return r;
}

Tensor Tensor::operator*(const Tensor& o) const {
  require_same(o);
  Tensor r(algebra_, arity_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : o.terms_) {
      // Expand the componentwise products into pure tensors.
      std::vector<std::pair<Key, Scalar>> partial{{Key{}, c * d}};
      for (int i = 0; i < arity_; ++i) {
        const Element prod = algebra_->multiply_monomials(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
        std::vector<std::pair<Key, Scalar>> next;
        next.reserve(partial.size() * prod.size());
        for (const auto& [k, s] : partial) {
          for (const auto& [m, e] : prod.terms()) {
            Key nk = k;
            nk.push_back(m);
            next.emplace_back(std::move(nk), s * e);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [k, s] : partial) r.add_term(k, s);
    }
  }
  return r;
}

bool Tensor::operator==(const Tensor& o) const {
  require_same(o);
  return terms_ == o.terms_;
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  auto key_of = [&](const Key& k) {
    std::vector<long> key;
    for (const auto& m : k) {
      auto part = algebra_->order_key(m);
      key.insert(key.end(), part.begin(), part.end());
    }
    return key;
  };
  for (const auto& k : sorted_keys(terms_, key_of)) {
    std::string mono;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i > 0) mono += " ⊗ ";
      mono += algebra_->monomial_to_string(k[i]);
    }
    const Scalar& c = terms_.at(k);
    const Scalar::Rendering r = c.render();
    std::string sign = first ? (r.negative ? "-" : "") : (r.negative ? " - " : " + ");
    std::string coeff = (r.compound ? "(" + r.text + ")" : r.text);
    out += sign + ((!r.compound && r.text == "1") ? mono : coeff + "*" + mono);
    first = false;
  }
  return out;
}

}  // namespace abhk
