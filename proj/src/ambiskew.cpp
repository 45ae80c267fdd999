#include "abhk/ambiskew.hpp"

#include <random>

#include "abhk/errors.hpp"
#include "abhk/qcomb.hpp"

namespace abhk {

namespace {

std::string power_string(const std::string& name, int e) {
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

void accumulate(AmbiskewAlgebra::Graded& g, const std::pair<int, int>& key, const Element& v) {
  if (v.is_zero()) return;
  auto it = g.find(key);
  if (it == g.end()) {
    g.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) g.erase(it);
  }
}

}  // namespace

AmbiskewAlgebra::AmbiskewAlgebra(AmbiskewParams params)
    : Algebra(params.base ? params.base->field() : Field::rational()), params_(std::move(params)), base_(params_.base) {
  if (!base_) throw DomainError("ambiskew extension needs a base algebra");
  if (params_.xi.field() != field()) throw FieldMismatch("xi lies in a different field from the base");
  if (params_.xi.is_zero()) throw DomainError("xi must be nonzero");
  if (params_.h.algebra() != base_.get()) throw AlgebraMismatch("h must be an element of the base algebra");
  if (params_.sigma.algebra() != base_.get()) throw AlgebraMismatch("sigma must be an automorphism of the base algebra");
  if (!base_->is_central(params_.h)) throw DomainError("h is not central in the base algebra");
  if (auto bad = params_.sigma.defect()) throw DomainError("sigma is not an automorphism: " + *bad);
  if (params_.coproduct) {
    const auto& cp = *params_.coproduct;
    for (const Element* g : {&cp.l_plus, &cp.l_minus, &cp.r_plus, &cp.r_minus}) {
      if (g->algebra() != base_.get()) throw AlgebraMismatch("coproduct data must lie in the base algebra");
      if (!base_->has_coproduct() || !base_->is_grouplike(*g))
        throw DomainError("coproduct data " + g->to_string() + " is not grouplike");
    }
  }
  xi_inv_ = params_.xi.inverse();
  base_size_ = base_->monomial_size();
  base_letters_ = base_->letters().size();
  letters_ = base_->letters();
  letters_.push_back(Letter{params_.x_plus_name, -1, false});
  letters_.push_back(Letter{params_.x_minus_name, -1, false});
}

bool AmbiskewAlgebra::hat_form() const {
  if (!params_.coproduct) return false;
  return params_.coproduct->r_plus == base_->one() && params_.coproduct->r_minus == base_->one();
}

Order AmbiskewAlgebra::xi_order() const { return mul_order(params_.xi); }

Monomial AmbiskewAlgebra::lift(const Monomial& base_mono, int m, int n) const {
  Monomial out(base_mono.begin(), base_mono.end());
  out.push_back(m);
  out.push_back(n);
  return out;
}

Monomial AmbiskewAlgebra::base_part(const Monomial& m) const { return Monomial(m.begin(), m.begin() + static_cast<long>(base_size_)); }

Element AmbiskewAlgebra::make(const Element& r, int m, int n) const {
  if (r.algebra() != base_.get()) throw AlgebraMismatch("coefficient is not a base element");
  Element out(this);
  for (const auto& [mono, c] : r.terms()) out.add_term(lift(mono, m, n), c);
  return out;
}

Tensor AmbiskewAlgebra::lift_tensor(const Tensor& t) const {
  Tensor out(this, t.arity());
  for (const auto& [key, c] : t.terms()) {
    Tensor::Key k;
    for (const auto& m : key) k.push_back(lift(m, 0, 0));
    out.add_term(k, c);
  }
  return out;
}

AmbiskewAlgebra::Graded AmbiskewAlgebra::graded(const Element& a) const {
  if (a.algebra() != this) throw AlgebraMismatch("element of another algebra");
  Graded g;
  for (const auto& [mono, c] : a.terms()) {
    const auto key = std::make_pair(mono[base_size_], mono[base_size_ + 1]);
    auto it = g.find(key);
    if (it == g.end()) it = g.emplace(key, base_->zero()).first;
    it->second.add_term(base_part(mono), c);
  }
  return g;
}

Element AmbiskewAlgebra::from_graded(const Graded& g) const {
  Element out(this);
  for (const auto& [key, r] : g)
    for (const auto& [mono, c] : r.terms()) out.add_term(lift(mono, key.first, key.second), c);
  return out;
}

Monomial AmbiskewAlgebra::letter_monomial(int letter) const {
  const auto l = static_cast<std::size_t>(letter);
  if (l < base_letters_) return lift(base_->letter_monomial(letter), 0, 0);
  if (letter == x_plus_letter()) return lift(base_->identity_monomial(), 1, 0);
  if (letter == x_minus_letter()) return lift(base_->identity_monomial(), 0, 1);
  throw DomainError("letter index out of range");
}

std::optional<std::pair<Monomial, int>> AmbiskewAlgebra::split_last(const Monomial& m) const {
  const int em = m[base_size_], en = m[base_size_ + 1];
  if (en > 0) {
    Monomial p = m;
    p[base_size_ + 1] -= 1;
    return std::make_pair(p, x_minus_letter());
  }
  if (em > 0) {
    Monomial p = m;
    p[base_size_] -= 1;
    return std::make_pair(p, x_plus_letter());
  }
  auto inner = base_->split_last(base_part(m));
  if (!inner) return std::nullopt;
  return std::make_pair(lift(inner->first, 0, 0), inner->second);
}

AmbiskewAlgebra::Graded AmbiskewAlgebra::x_minus_times_x_plus_power(int i) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = l_cache_.find(i); it != l_cache_.end()) return it->second;
  }
  Graded out;
  if (i == 0) {
    out.emplace(std::make_pair(0, 1), base_->one());
  } else {
    // X- X+^i = xi^-1 X+ (X- X+^(i-1)) - xi^-1 h X+^(i-1)
    for (const auto& [key, v] : x_minus_times_x_plus_power(i - 1))
      accumulate(out, {key.first + 1, key.second}, params_.sigma.apply(v).scaled(xi_inv_));
    accumulate(out, {i - 1, 0}, params_.h.scaled(-xi_inv_));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  l_cache_.emplace(i, out);
  return out;
}

AmbiskewAlgebra::Graded AmbiskewAlgebra::negative_times_positive(int b, int c) const {
  const auto key = std::make_pair(b, c);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = n_cache_.find(key); it != n_cache_.end()) return it->second;
  }
  Graded out;
  if (b == 0) {
    out.emplace(std::make_pair(c, 0), base_->one());
  } else if (c == 0) {
    out.emplace(std::make_pair(0, b), base_->one());
  } else {
    // X- (u X+^i X-^j) = sigma^-1(u) (X- X+^i) X-^j
    for (const auto& [ij, u] : negative_times_positive(b - 1, c)) {
      const Element su = params_.sigma.apply_inverse(u);
      for (const auto& [pq, v] : x_minus_times_x_plus_power(ij.first))
        accumulate(out, {pq.first, pq.second + ij.second}, su * v);
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  n_cache_.emplace(key, out);
  return out;
}

Element AmbiskewAlgebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = mul_cache_.find(key); it != mul_cache_.end()) return it->second;
  }
  // (r X+^a1 X-^b1)(s X+^c1 X-^d1) = r sigma^(a1-b1)(s) X+^a1 (X-^b1 X+^c1) X-^d1
  const int a1 = a[base_size_], b1 = a[base_size_ + 1];
  const int c1 = b[base_size_], d1 = b[base_size_ + 1];
  const Element coef = base_->monomial(base_part(a)) * params_.sigma.apply_power_monomial(base_part(b), a1 - b1);
  Element out(this);
  for (const auto& [ij, u] : negative_times_positive(b1, c1)) {
    const Element term = coef * params_.sigma.apply_power(u, a1);
    for (const auto& [mono, c] : term.terms()) out.add_term(lift(mono, a1 + ij.first, ij.second + d1), c);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  mul_cache_.emplace(key, out);
  return out;
}

std::vector<Relation> AmbiskewAlgebra::relations() const {
  std::vector<Relation> rels = base_->relations();
  const Scalar one = field().one();
  const int xp = x_plus_letter(), xm = x_minus_letter();
  auto append = [](LetterPoly p, int letter) {
    for (auto& t : p) t.word.push_back(letter);
    return p;
  };
  for (std::size_t g = 0; g < base_letters_; ++g) {
    const int gi = static_cast<int>(g);
    const std::string& name = letters_[g].name;
    const Element bg = base_->letter(gi);
    rels.push_back(Relation{params_.x_plus_name + "*" + name + " = sigma(" + name + ")*" + params_.x_plus_name,
                            {{one, {xp, gi}}},
                            append(base_->letter_poly(params_.sigma.apply(bg)), xp)});
    rels.push_back(Relation{params_.x_minus_name + "*" + name + " = sigma^-1(" + name + ")*" + params_.x_minus_name,
                            {{one, {xm, gi}}},
                            append(base_->letter_poly(params_.sigma.apply_inverse(bg)), xm)});
  }
  LetterPoly rhs = base_->letter_poly(params_.h);
  rhs.push_back(LetterTerm{params_.xi, {xm, xp}});
  rels.push_back(Relation{params_.x_plus_name + "*" + params_.x_minus_name + " = h + xi*" + params_.x_minus_name + "*" +
                              params_.x_plus_name,
                          {{one, {xp, xm}}},
                          rhs});
  return rels;
}

std::string AmbiskewAlgebra::monomial_to_string(const Monomial& m) const {
  std::string out;
  const std::string inner = base_->monomial_to_string(base_part(m));
  if (inner != "1") out = inner;
  const int em = m[base_size_], en = m[base_size_ + 1];
  if (em > 0) out += (out.empty() ? "" : "*") + power_string(params_.x_plus_name, em);
  if (en > 0) out += (out.empty() ? "" : "*") + power_string(params_.x_minus_name, en);
  return out.empty() ? "1" : out;
}

std::vector<long> AmbiskewAlgebra::order_key(const Monomial& m) const {
  std::vector<long> key = base_->order_key(base_part(m));
  key.push_back(m[base_size_]);
  key.push_back(m[base_size_ + 1]);
  return key;
}

Descriptor AmbiskewAlgebra::descriptor() const {
  const Descriptor b = base_->descriptor();
  Descriptor d;
  d.family = family_name();
  d.gk_dim = b.gk_dim.plus(2);
  d.gl_dim = hopf_verified_ ? b.gl_dim.plus(2) : Dim::unknown();
  d.inj_dim = (hopf_verified_ && b.as_gorenstein) ? b.inj_dim.plus(2) : Dim::unknown();
  d.noetherian = b.noetherian;
  d.domain = b.domain;
  d.prime = b.prime;
  d.semiprime_goldie = b.semiprime_goldie;
  d.pointed = hopf_verified_ && b.pointed;
  d.as_gorenstein = hopf_verified_ && b.as_gorenstein;
  d.as_regular = hopf_verified_ && b.as_regular;
  d.auslander_gorenstein = b.auslander_gorenstein;
  d.auslander_regular = b.auslander_regular;
  d.hopf = hopf_verified_;
  return d;
}

std::optional<Monomial> AmbiskewAlgebra::monomial_inverse(const Monomial& m) const {
  if (m[base_size_] != 0 || m[base_size_ + 1] != 0) return std::nullopt;
  auto inv = base_->monomial_inverse(base_part(m));
  if (!inv) return std::nullopt;
  return lift(*inv, 0, 0);
}

std::vector<std::pair<std::string, Element>> AmbiskewAlgebra::named_generators() const {
  std::vector<std::pair<std::string, Element>> out;
  for (const auto& [name, e] : base_->named_generators()) out.emplace_back(name, embed_base(e));
  out.emplace_back(params_.x_plus_name, x_plus());
  out.emplace_back(params_.x_minus_name, x_minus());
  return out;
}

Tensor AmbiskewAlgebra::delta_letter(int letter) const {
  if (!has_coproduct()) throw NotHopfError("no coproduct attached to this ambiskew algebra");
  const auto l = static_cast<std::size_t>(letter);
  if (l < base_letters_) return lift_tensor(base_->delta_letter(letter));
  const auto& cp = *params_.coproduct;
  const bool plus = letter == x_plus_letter();
  const Element x = this->letter(letter);
  const Element r = embed_base(plus ? cp.r_plus : cp.r_minus);
  const Element lft = embed_base(plus ? cp.l_plus : cp.l_minus);
  return Tensor::pure({x, r}) + Tensor::pure({lft, x});
}

Scalar AmbiskewAlgebra::counit_letter(int letter) const {
  if (static_cast<std::size_t>(letter) < base_letters_) return base_->counit_letter(letter);
  return field().zero();
}

Element AmbiskewAlgebra::antipode_letter(int letter) const {
  if (!has_coproduct()) throw NotHopfError("no coproduct attached to this ambiskew algebra");
  if (static_cast<std::size_t>(letter) < base_letters_) return embed_base(base_->antipode_letter(letter));
  // Solving m(S (x) id) Delta(X) = 0 with S(g) = g^-1 on grouplikes.
  const auto& cp = *params_.coproduct;
  const bool plus = letter == x_plus_letter();
  const Element l_inv = embed_base(base_->antipode(plus ? cp.l_plus : cp.l_minus));
  const Element r_inv = embed_base(base_->antipode(plus ? cp.r_plus : cp.r_minus));
  return -(l_inv * this->letter(letter) * r_inv);
}

int AmbiskewAlgebra::monomial_coradical_degree(const Monomial& m) const {
  if (!has_coproduct()) throw NotHopfError("coradical filtration needs a Hopf structure");
  if (!hat_form()) throw DomainError("coradical filtration is computed in hat form (r+ = r- = 1)");
  const Order d = xi_order();
  return base_->monomial_coradical_degree(base_part(m)) + static_cast<int>(hat(static_cast<std::uint64_t>(m[base_size_]), d).hat) +
         static_cast<int>(hat(static_cast<std::uint64_t>(m[base_size_ + 1]), d).hat);
}

// ---------------------------------------------------------------- rewriting

namespace {

// Symbol of a word: kind 0 = base monomial block, 1 = X+, 2 = X-.
struct Sym {
  int kind;
  Monomial base;
  bool operator<(const Sym& o) const { return kind != o.kind ? kind < o.kind : base < o.base; }
  bool operator==(const Sym& o) const { return kind == o.kind && base == o.base; }
};
using Word = std::vector<Sym>;

bool is_redex(const Sym& a, const Sym& b) {
  if (b.kind == 0) return true;          // base*base, X+*base, X-*base
  return a.kind == 2 && b.kind == 1;     // X- X+
}

}  // namespace

Element normalize_word(const AmbiskewAlgebra& A, const std::vector<int>& letters, RewriteStrategy strategy,
                       std::uint64_t seed) {
  const Algebra& R = A.base();
  const Monomial id = R.identity_monomial();
  std::mt19937_64 rng(seed);
  Word start;
  for (int l : letters) {
    if (l == A.x_plus_letter()) {
      start.push_back(Sym{1, {}});
    } else if (l == A.x_minus_letter()) {
      start.push_back(Sym{2, {}});
    } else {
      start.push_back(Sym{0, R.letter_monomial(l)});
    }
  }
  std::map<Word, Scalar> work;
  work.emplace(start, A.field().one());
  Element result(&A);
  const Scalar xi_inv = A.xi().inverse();

  auto push = [&](Word w, const Scalar& c) {
    // A block equal to 1 is dropped.
    Word cleaned;
    for (auto& s : w)
      if (!(s.kind == 0 && s.base == id)) cleaned.push_back(std::move(s));
    auto [it, inserted] = work.try_emplace(cleaned, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };

  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word w = node.key();
    const Scalar c = node.mapped();
    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (is_redex(w[i], w[i + 1])) redexes.push_back(i);
    if (redexes.empty()) {
      Monomial b = id;
      int m = 0, n = 0;
      for (const auto& s : w) {
        if (s.kind == 0) b = s.base;
        if (s.kind == 1) ++m;
        if (s.kind == 2) ++n;
      }
      result.add_term(A.lift(b, m, n), c);
      continue;
    }
    std::size_t i = redexes.front();
    if (strategy == RewriteStrategy::Rightmost) i = redexes.back();
    if (strategy == RewriteStrategy::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
      i = redexes[pick(rng)];
    }
    const Sym a = w[i], b = w[i + 1];
    auto splice = [&](const std::vector<Sym>& middle, const Scalar& coeff) {
      Word nw(w.begin(), w.begin() + static_cast<long>(i));
      nw.insert(nw.end(), middle.begin(), middle.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      push(std::move(nw), coeff);
    };
    if (a.kind == 0 && b.kind == 0) {
      for (const auto& [m, d] : R.multiply_monomials(a.base, b.base).terms()) splice({Sym{0, m}}, c * d);
    } else if (b.kind == 0) {
      const long power = a.kind == 1 ? 1 : -1;
      for (const auto& [m, d] : A.sigma().apply_power_monomial(b.base, power).terms()) splice({Sym{0, m}, a}, c * d);
    } else {
      splice({Sym{1, {}}, Sym{2, {}}}, c * xi_inv);
      for (const auto& [m, d] : A.h().terms()) splice({Sym{0, m}}, -(c * xi_inv * d));
    }
  }
  return result;
}

}  // namespace abhk
