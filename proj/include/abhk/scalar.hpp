#pragma once

// Exact coefficient fields: Q, the cyclotomic fields Q(zeta_N), and the
// rational function field Q(q) in one transcendental parameter.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abhk/poly.hpp"

namespace abhk {

enum class FieldKind { Rational, Cyclotomic, RationalFunction };

namespace detail {
struct FieldData;
}

class Scalar;

/// A positive integer or infinity; used for multiplicative orders and the
/// root-of-unity parameter d of the hat arithmetic.
class Order {
 public:
  static Order finite(std::uint64_t n);
  static Order infinite() { return Order(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }
  std::uint64_t value() const;
  std::string to_string() const;

  bool operator==(const Order&) const = default;

 private:
  Order() = default;
  std::optional<std::uint64_t> value_;
};

/// Lightweight handle to an interned field description. Two handles compare
/// equal exactly when they denote the same field.
class Field {
 public:
  static Field rational();
  /// Q(zeta_n) presented as Q[x]/(Phi_n); n >= 1.
  static Field cyclotomic(int n);
  static Field rational_function();

  FieldKind kind() const;
  /// N for Q(zeta_N), 0 otherwise.
  int cyclotomic_order() const;
  /// Dimension over Q of the power basis (deg Phi_N), 1 for Q.
  int degree() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Primitive N-th root of unity; DomainError outside cyclotomic fields.
  Scalar zeta() const;
  /// The transcendental q; DomainError outside Q(q).
  Scalar q() const;
  /// Embeds a rational scalar into this field.
  Scalar embed(const Scalar& rational) const;

  /// Element of exact multiplicative order n, if the field has one.
  std::optional<Scalar> primitive_root(std::uint64_t n) const;

  bool operator==(const Field& other) const { return data_ == other.data_; }
  bool operator!=(const Field& other) const { return data_ != other.data_; }

  const detail::FieldData* data() const { return data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_ = nullptr;
  friend class Scalar;
};

/// An exact field element. Immutable value type; arithmetic between scalars
/// from different fields throws FieldMismatch.
class Scalar {
 public:
  struct RatFunc {
    poly::ZPoly num;  // content shared with den is removed
    poly::ZPoly den;  // leading coefficient positive
    bool operator==(const RatFunc&) const = default;
  };
  using Cyclo = poly::QPoly;  // reduced mod Phi_N, padded to deg Phi_N

  Scalar();  // zero of Q
  Field field() const { return Field(field_); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value as a rational number; DomainError if not rational.
  mpq_class to_rational() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(long k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Parseable rendering, e.g. "3/2", "zeta^2 - 1", "(q^2 + 1)*(q - 1)^-1".
  std::string to_string() const;

  /// Rendering split for use as a coefficient: sign, magnitude text, and
  /// whether the text needs parentheses next to a '*'.
  struct Rendering {
    bool negative = false;
    std::string text;
    bool compound = false;
  };
  Rendering render() const;

  const std::variant<mpq_class, Cyclo, RatFunc>& value() const { return value_; }

 private:
  Scalar(const detail::FieldData* f, std::variant<mpq_class, Cyclo, RatFunc> v)
      : field_(f), value_(std::move(v)) {}
  void require_same(const Scalar& o) const;
  static Scalar make_ratfunc(const detail::FieldData* f, const poly::QPoly& num,
                             const poly::QPoly& den);

  const detail::FieldData* field_;
  std::variant<mpq_class, Cyclo, RatFunc> value_;

  friend class Field;
};

/// Smallest n >= 1 with x^n = 1, or infinite. DomainError for x = 0.
Order mul_order(const Scalar& x);

}  // namespace abhk
