#include <doctest.h>

#include <random>

#include "abhk/coradical.hpp"
#include "abhk/errors.hpp"
#include "abhk/families.hpp"
#include "abhk/hopf.hpp"
#include "abhk/uqsl2.hpp"
#include "oracles.hpp"

using namespace abhk;

namespace {

/// Laurent base, chi(t) = x, y+- = t, h = t^2 - 1; xi = x.
std::shared_ptr<AmbiskewAlgebra> laurent_extension(const Scalar& x) {
  const Field F = x.field();
  auto R = GroupAlgebra::laurent(F);
  const Element t = R->letter(0);
  const Character chi = R->make_character({{"t", x}});
  const CheckReport r = check_main_theorem(make_extension_data(R, chi, t, t, t * t - R->one()));
  REQUIRE(r.overall);
  return r.algebra;
}

/// Polynomial base, chi(t) = 1, y+- = 1, h = t; xi = 1.
std::shared_ptr<AmbiskewAlgebra> usl2() {
  const Field Q = Field::rational();
  auto R = std::make_shared<PolynomialAlgebra>(Q);
  const CheckReport r = check_main_theorem(make_extension_data(R, R->make_character({{"t", Q.one()}}), R->one(), R->one(), R->letter(0)));
  REQUIRE(r.overall);
  return r.algebra;
}

Element pow(const Element& a, int k) {
  Element out = a.algebra()->one();
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace

TEST_CASE("degrees of simple elements") {
  auto A = usl2();
  CHECK(corad_degree(*A, A->one()) == 0);
  const Element t = A->embed_base(A->base().letter(0));
  CHECK(corad_degree(*A, t * A->x_plus()) == 2);
  CHECK(corad_degree(*A, A->x_plus()) == 1);
  CHECK(corad_degree(*A, pow(A->x_plus(), 2)) == 2);
  CHECK_THROWS_AS(corad_degree(*A, A->zero()), DomainError);
}

TEST_CASE("power of X+ drops to degree one at a root of unity") {
  const Field C = Field::cyclotomic(3);
  auto A = laurent_extension(C.zeta());
  CHECK(coradical_context(*A).d.value() == 3u);
  CHECK(corad_degree(*A, pow(A->x_plus(), 3)) == 1);
  CHECK(corad_degree(*A, pow(A->x_plus(), 2)) == 2);
  CHECK(corad_degree(*A, pow(A->x_minus(), 3)) == 1);
  CHECK(corad_degree(*A, pow(A->x_plus(), 4)) == 2);
  // closed form at m = d
  const Element y3 = A->embed_base(pow(A->base().letter(0), 3));
  CHECK(delta_power_closed(*A, true, 3) ==
        Tensor::pure({pow(A->x_plus(), 3), A->one()}) + Tensor::pure({y3, pow(A->x_plus(), 3)}));
}

TEST_CASE("closed-form coproducts match the engine") {
  std::vector<std::shared_ptr<AmbiskewAlgebra>> algebras{laurent_extension(Field::rational_function().q()),
                                                         laurent_extension(Field::cyclotomic(4).zeta()), usl2()};
  for (const auto& A : algebras) {
    for (int m = 0; m <= 4; ++m) {
      CHECK(delta_power_closed(*A, true, m) == A->delta(pow(A->x_plus(), m)));
      CHECK(delta_power_closed(*A, false, m) == A->delta(pow(A->x_minus(), m)));
      for (int n = 0; n <= 3; ++n) CHECK(delta_mixed_closed(*A, m, n) == A->delta(pow(A->x_plus(), m) * pow(A->x_minus(), n)));
    }
  }
  auto A = algebras[0];
  CHECK(delta_mixed_closed(*A, 0, 0) == A->tensor_one(2));
  CHECK(delta_mixed_closed(*A, 1, 0) == Tensor::pure({A->x_plus(), A->one()}) +
                                            Tensor::pure({A->embed_base(A->base().letter(0)), A->x_plus()}));
}

TEST_CASE("mixed coproduct at a root keeps only extreme indices") {
  const Field C = Field::cyclotomic(3);
  auto A = laurent_extension(C.zeta());
  const Tensor t = delta_mixed_closed(*A, 3, 3);
  const std::size_t b = A->base().monomial_size();
  for (const auto& [key, c] : t.terms()) {
    const int j = key[0][b], k = key[0][b + 1];
    CHECK((j == 0 || j == 3));
    CHECK((k == 0 || k == 3));
  }
  CHECK(t.terms().size() == 4u);
}

TEST_CASE("sparse support") {
  const Field C = Field::cyclotomic(3);
  std::vector<std::uint64_t> ps;
  for (const auto& e : sparse_support(7, C.zeta())) ps.push_back(e.p);
  CHECK(ps == std::vector<std::uint64_t>{0, 1, 3, 4, 6, 7});
  ps.clear();
  for (const auto& e : sparse_support(4, Field::rational_function().q())) ps.push_back(e.p);
  CHECK(ps == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
  const auto s3 = sparse_support(3, C.zeta());
  REQUIRE(s3.size() == 2u);
  CHECK(s3[0].p == 0);
  CHECK(s3[1].p == 3);
  CHECK(s3[0].alpha.is_one());
  CHECK(s3[1].alpha.is_one());
}

TEST_CASE("U_q(sl2) filtration by iteration") {
  auto U = UqSl2::create(Field::rational_function().q());
  CHECK(corad_degree(*U, U->E() * U->F()) == 2);
  CHECK(corad_degree(*U, U->K()) == 0);
  CHECK(corad_degree(*U, U->F()) == 1);
  const Field C = Field::cyclotomic(8);
  auto V = UqSl2::create(C.zeta());
  // xi = q^-2 has order 4
  CHECK(corad_degree(*V, pow(V->E(), 4)) == 1);
  CHECK(corad_degree(*V, pow(V->E(), 3)) == 3);
}

TEST_CASE("coradical degree agrees with the wedge definition") {
  std::vector<std::shared_ptr<AmbiskewAlgebra>> algebras{laurent_extension(Field::rational().from_int(2)),
                                                         laurent_extension(Field::rational().from_int(-1)), usl2()};
  for (const auto& A : algebras) {
    const Element xp = A->x_plus(), xm = A->x_minus();
    const Element g = A->embed_base(A->base().letter(0));
    for (const Element& a : {A->one(), xp, xm, xp * xm, pow(xp, 2), g * xp, pow(xm, 2) + xp, xp * pow(xm, 2)}) {
      INFO(a.to_string());
      CHECK(corad_degree(*A, a) == oracle::wedge_degree(*A, a));
    }
  }
}

TEST_CASE("filtration is compatible with products") {
  std::mt19937_64 rng(17);
  for (const auto& A : {usl2(), laurent_extension(Field::cyclotomic(3).zeta())}) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < A->letters().size(); ++i) letters.push_back(static_cast<int>(i));
    for (int i = 0; i < 60; ++i) {
      const Element a = oracle::random_element(*A, letters, rng);
      const Element b = oracle::random_element(*A, letters, rng);
      if (a.is_zero() || b.is_zero() || (a * b).is_zero()) continue;
      CHECK(corad_degree(*A, a * b) <= corad_degree(*A, a) + corad_degree(*A, b));
    }
  }
}
