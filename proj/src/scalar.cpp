#include "abhk/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "abhk/errors.hpp"

namespace abhk {

namespace detail {
struct FieldData {
  FieldKind kind;
  int n = 0;          // cyclotomic order
  int degree = 1;     // deg Phi_n
  poly::QPoly phi;    // monic Phi_n
};
}  // namespace detail

using detail::FieldData;

// ---------------------------------------------------------------- Order

Order Order::finite(std::uint64_t n) {
  if (n == 0) throw DomainError("order must be positive");
  Order o;
  o.value_ = n;
  return o;
}

std::uint64_t Order::value() const {
  if (!value_) throw DomainError("order is infinite");
  return *value_;
}

std::string Order::to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

// ---------------------------------------------------------------- Field

namespace {

const FieldData* intern(FieldKind kind, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldData>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto data = std::make_unique<FieldData>();
  data->kind = kind;
  data->n = n;
  if (kind == FieldKind::Cyclotomic) {
    data->phi = poly::to_q(poly::cyclotomic(n));
    data->degree = poly::degree(data->phi);
  }
  return registry.emplace(key, std::move(data)).first->second.get();
}

}  // namespace

Field Field::rational() { return Field(intern(FieldKind::Rational, 0)); }

Field Field::cyclotomic(int n) {
  if (n < 1 || n > 1000) throw DomainError("cyclotomic order must lie in [1, 1000]");
  return Field(intern(FieldKind::Cyclotomic, n));
}

Field Field::rational_function() { return Field(intern(FieldKind::RationalFunction, 0)); }

FieldKind Field::kind() const { return data_->kind; }
int Field::cyclotomic_order() const { return data_->n; }
int Field::degree() const { return data_->degree; }

std::string Field::name() const {
  switch (data_->kind) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::Cyclotomic:
      return "Q(zeta_" + std::to_string(data_->n) + ")";
    case FieldKind::RationalFunction:
      return "Q(q)";
  }
  return "?";
}

Scalar Field::zero() const { return from_rational(0); }
Scalar Field::one() const { return from_rational(1); }
Scalar Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& raw) const {
  mpq_class v = raw;
  v.canonicalize();
  switch (data_->kind) {
    case FieldKind::Rational:
      return Scalar(data_, v);
    case FieldKind::Cyclotomic: {
      Scalar::Cyclo c(static_cast<std::size_t>(data_->degree), mpq_class(0));
      c[0] = v;
      return Scalar(data_, c);
    }
    case FieldKind::RationalFunction: {
      Scalar::RatFunc r;
      if (sgn(v) != 0) {
        r.num = {v.get_num()};
        r.den = {v.get_den()};
      } else {
        r.den = {mpz_class(1)};
      }
      return Scalar(data_, r);
    }
  }
  throw InvariantBreach("unknown field kind");
}

Scalar Field::zeta() const {
  if (data_->kind != FieldKind::Cyclotomic) throw DomainError("zeta is only defined in a cyclotomic field");
  poly::QPoly x = {mpq_class(0), mpq_class(1)};
  poly::QPoly r = poly::mod(x, data_->phi);
  r.resize(static_cast<std::size_t>(data_->degree), mpq_class(0));
  return Scalar(data_, r);
}

Scalar Field::q() const {
  if (data_->kind != FieldKind::RationalFunction)
    throw DomainError("q is only defined in the rational function field");
  Scalar::RatFunc r;
  r.num = {mpz_class(0), mpz_class(1)};
  r.den = {mpz_class(1)};
  return Scalar(data_, r);
}

Scalar Field::embed(const Scalar& rational) const {
  if (rational.field() == *this) return rational;
  return from_rational(rational.to_rational());
}

std::optional<Scalar> Field::primitive_root(std::uint64_t n) const {
  if (n == 0) return std::nullopt;
  if (n == 1) return one();
  if (n == 2) return from_int(-1);
  if (data_->kind != FieldKind::Cyclotomic) return std::nullopt;
  const std::uint64_t N = static_cast<std::uint64_t>(data_->n);
  const std::uint64_t M = std::lcm<std::uint64_t>(2, N);
  if (M % n != 0) return std::nullopt;
  Scalar generator = (N % 2 == 0) ? zeta() : -zeta();
  return generator.pow(static_cast<long>(M / n));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : Scalar(Field::rational().zero()) {}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("scalar field mismatch: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::make_ratfunc(const FieldData* f, const poly::QPoly& num_in, const poly::QPoly& den_in) {
  poly::QPoly num = num_in, den = den_in;
  poly::trim(num);
  poly::trim(den);
  if (den.empty()) throw DomainError("division by zero");
  RatFunc r;
  if (num.empty()) {
    r.den = {mpz_class(1)};
    return Scalar(f, r);
  }
  // Remove the common power of q first; this settles the frequent cases of
  // Laurent polynomials without a full gcd.
  std::size_t vn = 0, vd = 0;
  while (sgn(num[vn]) == 0) ++vn;
  while (sgn(den[vd]) == 0) ++vd;
  const std::size_t v = std::min(vn, vd);
  if (v > 0) {
    num.erase(num.begin(), num.begin() + static_cast<long>(v));
    den.erase(den.begin(), den.begin() + static_cast<long>(v));
  }
  const bool trivial = den.size() == 1 || num.size() == 1 || poly::term_count(num) == 1 ||
                       poly::term_count(den) == 1;
  if (!trivial) {
    poly::QPoly g = poly::gcd(num, den);
    if (g.size() > 1) {
      poly::QPoly q, rem;
      poly::divmod(num, g, q, rem);
      num = q;
      poly::divmod(den, g, q, rem);
      den = q;
    }
  }
  poly::to_primitive_pair(num, den, r.num, r.den);
  return Scalar(f, r);
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return sgn(v) == 0;
        } else if constexpr (std::is_same_v<T, Cyclo>) {
          for (const auto& c : v)
            if (sgn(c) != 0) return false;
          return true;
        } else {
          return v.num.empty();
        }
      },
      value_);
}

bool Scalar::is_one() const { return *this == Field(field_).one(); }

bool Scalar::is_rational() const {
  switch (field_->kind) {
    case FieldKind::Rational:
      return true;
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<Cyclo>(value_);
      for (std::size_t i = 1; i < c.size(); ++i)
        if (sgn(c[i]) != 0) return false;
      return true;
    }
    case FieldKind::RationalFunction: {
      const auto& r = std::get<RatFunc>(value_);
      return r.num.size() <= 1 && r.den.size() == 1;
    }
  }
  return false;
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw DomainError("scalar " + to_string() + " is not rational");
  switch (field_->kind) {
    case FieldKind::Rational:
      return std::get<mpq_class>(value_);
    case FieldKind::Cyclotomic:
      return std::get<Cyclo>(value_)[0];
    case FieldKind::RationalFunction: {
      const auto& r = std::get<RatFunc>(value_);
      if (r.num.empty()) return 0;
      mpq_class v(r.num[0], r.den[0]);
      v.canonicalize();
      return v;
    }
  }
  return 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  switch (field_->kind) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
    case FieldKind::Cyclotomic: {
      Cyclo c = std::get<Cyclo>(value_);
      const auto& d = std::get<Cyclo>(o.value_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      return Scalar(field_, c);
    }
    case FieldKind::RationalFunction: {
      const auto& a = std::get<RatFunc>(value_);
      const auto& b = std::get<RatFunc>(o.value_);
      if (a.num.empty()) return o;
      if (b.num.empty()) return *this;
      if (a.den == b.den) {
        return make_ratfunc(field_, poly::to_q(poly::add(a.num, b.num)), poly::to_q(a.den));
      }
      auto num = poly::add(poly::mul(a.num, b.den), poly::mul(b.num, a.den));
      return make_ratfunc(field_, poly::to_q(num), poly::to_q(poly::mul(a.den, b.den)));
    }
  }
  throw InvariantBreach("unknown field kind");
}

Scalar Scalar::operator-() const {
  switch (field_->kind) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
    case FieldKind::Cyclotomic: {
      Cyclo c = std::get<Cyclo>(value_);
      for (auto& x : c) x = -x;
      return Scalar(field_, c);
    }
    case FieldKind::RationalFunction: {
      RatFunc r = std::get<RatFunc>(value_);
      for (auto& x : r.num) x = -x;
      return Scalar(field_, r);
    }
  }
  throw InvariantBreach("unknown field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  switch (field_->kind) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
    case FieldKind::Cyclotomic: {
      poly::QPoly a = std::get<Cyclo>(value_), b = std::get<Cyclo>(o.value_);
      poly::trim(a);
      poly::trim(b);
      poly::QPoly r = poly::mod(poly::mul(a, b), field_->phi);
      r.resize(static_cast<std::size_t>(field_->degree), mpq_class(0));
      return Scalar(field_, r);
    }
    case FieldKind::RationalFunction: {
      const auto& a = std::get<RatFunc>(value_);
      const auto& b = std::get<RatFunc>(o.value_);
      if (a.num.empty()) return *this;
      if (b.num.empty()) return o;
      return make_ratfunc(field_, poly::to_q(poly::mul(a.num, b.num)), poly::to_q(poly::mul(a.den, b.den)));
    }
  }
  throw InvariantBreach("unknown field kind");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  switch (field_->kind) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
    case FieldKind::Cyclotomic: {
      poly::QPoly a = std::get<Cyclo>(value_);
      poly::trim(a);
      poly::QPoly inv = poly::inverse_mod(a, field_->phi);
      if (inv.empty()) throw InvariantBreach("nonzero cyclotomic element without inverse");
      inv.resize(static_cast<std::size_t>(field_->degree), mpq_class(0));
      return Scalar(field_, inv);
    }
    case FieldKind::RationalFunction: {
      const auto& a = std::get<RatFunc>(value_);
      return make_ratfunc(field_, poly::to_q(a.den), poly::to_q(a.num));
    }
  }
  throw InvariantBreach("unknown field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result = Field(field_).one();
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same(o);
  return value_ == o.value_;
}

namespace {

std::string wrap(const std::string& s, bool compound) { return compound ? "(" + s + ")" : s; }

}  // namespace

std::string Scalar::to_string() const {
  switch (field_->kind) {
    case FieldKind::Rational:
      return std::get<mpq_class>(value_).get_str();
    case FieldKind::Cyclotomic:
      return poly::to_string(std::get<Cyclo>(value_), "zeta");
    case FieldKind::RationalFunction: {
      const auto& r = std::get<RatFunc>(value_);
      if (r.num.empty()) return "0";
      if (r.den.size() == 1) {
        if (r.den[0] == 1) return poly::to_string(r.num, "q");
        poly::QPoly qn = poly::to_q(r.num);
        return poly::to_string(poly::scale(qn, mpq_class(1) / mpq_class(r.den[0])), "q");
      }
      const bool num_compound = poly::term_count(r.num) > 1;
      std::string num = poly::to_string(r.num, "q");
      // Denominator q^k with unit coefficient prints as q^-k.
      if (poly::term_count(r.den) == 1 && r.den.back() == 1) {
        std::string den = "q^-" + std::to_string(r.den.size() - 1);
        if (num == "1") return den;
        if (num == "-1") return "-" + den;
        return wrap(num, num_compound) + "*" + den;
      }
      std::string den = "(" + poly::to_string(r.den, "q") + ")^-1";
      if (num == "1") return den;
      if (num == "-1") return "-" + den;
      return wrap(num, num_compound) + "*" + den;
    }
  }
  return "?";
}

Scalar::Rendering Scalar::render() const {
  Rendering out;
  if (is_rational()) {
    mpq_class v = to_rational();
    out.negative = sgn(v) < 0;
    out.text = mpq_class(abs(v)).get_str();
    return out;
  }
  auto single_term = [&](const auto& p, const std::string& var) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (sgn(p[i]) != 0) k = i;
    auto c = p[k];
    out.negative = sgn(c) < 0;
    if (out.negative) c = -c;
    std::string text;
    if (c != 1) text = c.get_str() + "*";
    text += var;
    if (k > 1) text += "^" + std::to_string(k);
    out.text = text;
  };
  if (field_->kind == FieldKind::Cyclotomic && poly::term_count(std::get<Cyclo>(value_)) == 1) {
    single_term(std::get<Cyclo>(value_), "zeta");
    return out;
  }
  if (field_->kind == FieldKind::RationalFunction) {
    const auto& r = std::get<RatFunc>(value_);
    if (r.den.size() == 1 && r.den[0] == 1 && poly::term_count(r.num) == 1) {
      single_term(r.num, "q");
      return out;
    }
  }
  out.text = to_string();
  out.compound = true;
  return out;
}

// ---------------------------------------------------------------- orders

Order mul_order(const Scalar& x) {
  if (x.is_zero()) throw DomainError("multiplicative order of zero");
  const Field f = x.field();
  if (x.is_one()) return Order::finite(1);
  if (x == f.from_int(-1)) return Order::finite(2);
  if (f.kind() != FieldKind::Cyclotomic) return Order::infinite();
  // Every root of unity in Q(zeta_N) has order dividing lcm(2, N) <= 2N.
  const long bound = 2L * f.cyclotomic_order();
  Scalar p = x;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return Order::finite(static_cast<std::uint64_t>(k));
    p = p * x;
  }
  return Order::infinite();
}

}  // namespace abhk
