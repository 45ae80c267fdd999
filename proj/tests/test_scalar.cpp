#include <doctest.h>

#include <random>

#include "abhk/errors.hpp"
#include "abhk/qcomb.hpp"
#include "abhk/scalar.hpp"
#include "oracles.hpp"

using namespace abhk;

TEST_CASE("rational arithmetic stays reduced") {
  const Field Q = Field::rational();
  const Scalar a = Q.from_rational(mpq_class(6, 4));
  CHECK(a.to_string() == "3/2");
  CHECK((a - a).is_zero());
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS_AS(Q.zero().inverse(), DomainError);
}

TEST_CASE("cyclotomic reduction and zeta powers") {
  const Field F = Field::cyclotomic(8);
  const Scalar z = F.zeta();
  CHECK(z.pow(4) == F.from_int(-1));
  CHECK(z.pow(8).is_one());
  CHECK(z.pow(-1) * z == F.one());
  CHECK(std::get<Scalar::Cyclo>(z.value()).size() == 4u);
}

TEST_CASE("mixing fields throws") {
  const Scalar a = Field::rational().one();
  const Scalar b = Field::cyclotomic(3).zeta();
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK(Field::cyclotomic(3).embed(a) + b == Field::cyclotomic(3).one() + b);
}

TEST_CASE("rational functions normalise") {
  const Field F = Field::rational_function();
  const Scalar q = F.q();
  const Scalar x = (q * q - F.one()) / (q - F.one());
  CHECK(x == q + F.one());
  CHECK((q - q.inverse()).inverse() * (q - q.inverse()) == F.one());
}

TEST_CASE("mul_order") {
  CHECK(mul_order(Field::rational().one()).value() == 1u);
  CHECK(mul_order(Field::rational().from_int(-1)).value() == 2u);
  CHECK(mul_order(Field::cyclotomic(8).zeta().pow(3)).value() == oracle::order_by_gcd(3, 8));
  CHECK(mul_order(Field::cyclotomic(3).zeta() * Field::cyclotomic(3).from_int(-1)).value() == 6u);
  CHECK(mul_order(Field::rational_function().q()).is_infinite());
  CHECK(mul_order(Field::rational().from_int(2)).is_infinite());
  CHECK_THROWS_AS(mul_order(Field::rational().zero()), DomainError);
}

TEST_CASE("primitive roots") {
  const Field F = Field::cyclotomic(3);
  for (std::uint64_t n : {1u, 2u, 3u, 6u}) {
    auto r = F.primitive_root(n);
    REQUIRE(r);
    CHECK(mul_order(*r).value() == n);
  }
  CHECK_FALSE(F.primitive_root(4));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  const std::vector<Field> fields{Field::rational(), Field::cyclotomic(5), Field::cyclotomic(12),
                                  Field::rational_function()};
  for (const Field& F : fields) {
    for (int i = 0; i < 1000; ++i) {
      const Scalar a = oracle::random_scalar(F, rng), b = oracle::random_scalar(F, rng), c = oracle::random_scalar(F, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("q-binomials match the factorial oracle") {
  const Field F = Field::rational_function();
  const Scalar q = F.q();
  CHECK(q_binomial(2, 1, q) == F.one() + q);
  CHECK(q_binomial(4, 2, q) == oracle::q_binomial_by_factorials(4, 2, q));
  CHECK(q_binomial(4, 2, q) == F.one() + q + F.from_int(2) * q.pow(2) + q.pow(3) + q.pow(4));
  for (unsigned n = 0; n <= 9; ++n)
    for (unsigned i = 0; i <= n; ++i) CHECK(q_binomial(n, i, q) == oracle::q_binomial_by_factorials(n, i, q));
  CHECK_THROWS_AS(q_binomial_poly(2, 3), DomainError);
}

TEST_CASE("Pascal recurrences as polynomial identities") {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      poly::ZPoly rhs;
      if (i >= 1) rhs = poly::add(rhs, q_binomial_poly(n - 1, i - 1));
      if (i <= n - 1) rhs = poly::add(rhs, poly::shift(q_binomial_poly(n - 1, i), static_cast<int>(i)));
      CHECK(q_binomial_poly(n, i) == rhs);
      // the mirror recurrence
      poly::ZPoly mirror;
      if (i >= 1) mirror = poly::add(mirror, poly::shift(q_binomial_poly(n - 1, i - 1), static_cast<int>(n - i)));
      if (i <= n - 1) mirror = poly::add(mirror, q_binomial_poly(n - 1, i));
      CHECK(q_binomial_poly(n, i) == mirror);
      for (const auto& c : q_binomial_poly(n, i)) CHECK(c >= 0);
    }
  }
}

TEST_CASE("q-binomials vanish at primitive roots") {
  CHECK(q_binomial(3, 1, Field::cyclotomic(3).zeta()).is_zero());
  for (unsigned n = 2; n <= 8; ++n) {
    const Field F = Field::cyclotomic(static_cast<int>(n));
    const Scalar z = *F.primitive_root(n);
    for (unsigned i = 1; i < n; ++i) CHECK(q_binomial(n, i, z).is_zero());
    CHECK(q_binomial(n, 0, z).is_one());
  }
}

TEST_CASE("hat arithmetic") {
  const HatProfile a = hat(5, Order::infinite());
  CHECK(a.q == 5);
  CHECK(a.r == 0);
  CHECK(a.hat == 5);
  const HatProfile b = hat(7, Order::finite(3));
  CHECK(b.q == 2);
  CHECK(b.r == 1);
  CHECK(b.hat == 3);
  CHECK(hat(0, Order::finite(4)).hat == 0);
  CHECK(hat(6, Order::finite(1)).hat == 6);
  CHECK(prec(4, 7, Order::finite(3)));
  CHECK_FALSE(prec(2, 7, Order::finite(3)));
  for (std::uint64_t p = 0; p <= 9; ++p)
    for (std::uint64_t m = 0; m <= 9; ++m) CHECK(prec(p, m, Order::infinite()) == (p <= m));
}

TEST_CASE("hat subtraction along the partial order") {
  for (std::uint64_t d = 1; d <= 6; ++d) {
    for (std::uint64_t m = 0; m <= 30; ++m) {
      for (std::uint64_t p = 0; p <= m; ++p) {
        if (!prec(p, m, Order::finite(d))) continue;
        CHECK(hat(m - p, Order::finite(d)).hat == hat(m, Order::finite(d)).hat - hat(p, Order::finite(d)).hat);
      }
    }
  }
}

TEST_CASE("rendering") {
  const Field F = Field::rational_function();
  CHECK(F.q().pow(-2).to_string() == "q^-2");
  const Field C = Field::cyclotomic(3);
  CHECK((C.zeta() - C.one()).to_string() == "zeta - 1");
}
