#include <doctest.h>

#include <random>

#include "abhk/errors.hpp"
#include "abhk/families.hpp"
#include "abhk/hopf.hpp"
#include "oracles.hpp"

using namespace abhk;

namespace {

/// Enveloping algebra of sl2 over k[t]: sigma(t) = t + lambda, xi = 1, h = t.
std::shared_ptr<AmbiskewAlgebra> usl2(long lambda = 1) {
  const Field Q = Field::rational();
  auto R = std::make_shared<PolynomialAlgebra>(Q);
  const Character chi = R->make_character({{"t", Q.from_int(lambda)}});
  const ExtensionData d = make_extension_data(R, chi, R->one(), R->one(), R->letter(0));
  return build_hat_form(d);
}

/// Plain ambiskew algebra over k[t, t^-1] with generic xi.
std::shared_ptr<AmbiskewAlgebra> generic_laurent() {
  const Field F = Field::rational_function();
  auto R = GroupAlgebra::laurent(F);
  const Scalar q = F.q();
  AmbiskewParams p;
  p.base = R;
  p.sigma = winding_automorphism_left(Character(R.get(), {q, q.inverse()}));
  p.h = R->letter(0) + R->letter(1).scaled(q);
  p.xi = q * q;
  return std::make_shared<AmbiskewAlgebra>(std::move(p));
}

std::vector<int> all_letters(const Algebra& A) {
  std::vector<int> out;
  for (std::size_t i = 0; i < A.letters().size(); ++i) out.push_back(static_cast<int>(i));
  return out;
}

Element word_product(const Algebra& A, const std::vector<int>& w) {
  Element out = A.one();
  for (int l : w) out = out * A.letter(l);
  return out;
}

}  // namespace

TEST_CASE("reordering X- X+") {
  auto A = generic_laurent();
  const Scalar xi_inv = A->xi().inverse();
  const Element lhs = A->x_minus() * A->x_plus();
  const Element rhs = (A->x_plus() * A->x_minus()).scaled(xi_inv) - A->embed_base(A->h()).scaled(xi_inv);
  CHECK(lhs == rhs);
  CHECK(A->x_plus() * A->x_minus() - (A->x_minus() * A->x_plus()).scaled(A->xi()) == A->embed_base(A->h()));
}

TEST_CASE("X+ moves past base elements by sigma") {
  auto A = usl2(1);
  const Element t = A->embed_base(A->base().letter(0));
  CHECK(A->x_plus() * t == (t + A->one()) * A->x_plus());
  CHECK(A->x_minus() * t == (t - A->one()) * A->x_minus());
  CHECK(A->apply_sigma_power(A->base().letter(0), -1) == A->base().letter(0) - A->base().one());
  CHECK(A->apply_sigma_power(A->base().letter(0), 0) == A->base().letter(0));
  CHECK(A->apply_sigma_power(A->base().letter(0), 3) == A->base().letter(0) + A->base().scalar(Field::rational().from_int(3)));
  CHECK((A->x_minus() * A->x_plus()).to_string() == "X+*X- - t");
}

TEST_CASE("square of X+ X- agrees with the word rewriter") {
  for (const auto& A : {usl2(2), generic_laurent()}) {
    const Element a = A->x_plus() * A->x_minus();
    const std::vector<int> w{A->x_plus_letter(), A->x_minus_letter(), A->x_plus_letter(), A->x_minus_letter()};
    const Element leftmost = normalize_word(*A, w, RewriteStrategy::Leftmost);
    CHECK(a * a == leftmost);
    CHECK(leftmost == normalize_word(*A, w, RewriteStrategy::Rightmost));
    // X+ (X- X+) X- = xi^-1 X+^2 X-^2 - xi^-1 X+ h X-
    const Element h = A->embed_base(A->h());
    const Scalar xi_inv = A->xi().inverse();
    const Element expect = A->make(A->base().one(), 2, 2).scaled(xi_inv) - (A->x_plus() * h * A->x_minus()).scaled(xi_inv);
    CHECK(a * a == expect);
  }
}

TEST_CASE("h commutes through X+- by sigma") {
  auto A = generic_laurent();
  const Element h = A->embed_base(A->h());
  CHECK(h * A->x_plus() == A->x_plus() * A->embed_base(A->apply_sigma_power(A->h(), -1)));
  CHECK(h * A->x_minus() == A->x_minus() * A->embed_base(A->apply_sigma_power(A->h(), 1)));
}

TEST_CASE("construction rejects invalid data") {
  const Field Q = Field::rational();
  auto R = GroupAlgebra::laurent(Q);
  AmbiskewParams p;
  p.base = R;
  p.sigma = Automorphism::identity(R.get());
  p.h = R->one();
  p.xi = Q.zero();
  CHECK_THROWS_AS(AmbiskewAlgebra{p}, DomainError);
  p.xi = Q.one();
  p.coproduct = CoproductData{R->letter(0) + R->one(), R->one(), R->one(), R->one()};
  CHECK_THROWS_AS(AmbiskewAlgebra{p}, DomainError);
  p.coproduct.reset();
  p.h = Element(std::make_shared<PolynomialAlgebra>(Q).get());
  CHECK_THROWS(AmbiskewAlgebra{p});
}

TEST_CASE("tensor products in normal form") {
  auto A = usl2(1);
  const Element t = A->embed_base(A->base().letter(0));
  CHECK(Tensor::pure({A->x_plus(), A->one()}) * Tensor::pure({A->one(), A->x_plus()}) ==
        Tensor::pure({A->x_plus(), A->x_plus()}));
  CHECK(Tensor::pure({A->one(), t}) * Tensor::pure({A->x_plus(), A->one()}) == Tensor::pure({A->x_plus(), t}));
  // grouplike y with sigma(y) = chi(y) y, over the Laurent base
  auto B = generic_laurent();
  const Element y = B->embed_base(B->base().letter(0));
  CHECK(Tensor::pure({y, B->x_plus()}) * Tensor::pure({B->x_plus(), B->one()}) ==
        Tensor::pure({y * B->x_plus(), B->x_plus()}));
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(99);
  for (const auto& A : {usl2(3), generic_laurent()}) {
    const auto letters = all_letters(*A);
    for (int i = 0; i < 200; ++i) {
      const Element a = oracle::random_element(*A, letters, rng, 2);
      const Element b = oracle::random_element(*A, letters, rng, 2);
      const Element c = oracle::random_element(*A, letters, rng, 2);
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("rewrite order does not change normal forms") {
  std::mt19937_64 rng(5);
  for (const auto& A : {usl2(1), generic_laurent()}) {
    const auto letters = all_letters(*A);
    for (int i = 0; i < 100; ++i) {
      std::vector<int> w;
      const long len = oracle::small_int(rng, 0, 5);
      for (long k = 0; k < len; ++k) w.push_back(letters[static_cast<std::size_t>(oracle::small_int(rng, 0, static_cast<long>(letters.size()) - 1))]);
      const Element engine = word_product(*A, w);
      REQUIRE(normalize_word(*A, w, RewriteStrategy::Leftmost) == engine);
      REQUIRE(normalize_word(*A, w, RewriteStrategy::Rightmost) == engine);
      REQUIRE(normalize_word(*A, w, RewriteStrategy::Random, rng()) == engine);
    }
  }
}

TEST_CASE("graded decomposition round-trips") {
  auto A = generic_laurent();
  std::mt19937_64 rng(11);
  const auto letters = all_letters(*A);
  for (int i = 0; i < 20; ++i) {
    const Element a = oracle::random_element(*A, letters, rng);
    CHECK(A->from_graded(A->graded(a)) == a);
  }
}
