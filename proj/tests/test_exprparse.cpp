#include <doctest.h>

#include <random>

#include "abhk/errors.hpp"
#include "abhk/expr.hpp"
#include "abhk/families.hpp"
#include "abhk/hopf.hpp"
#include "abhk/uqsl2.hpp"
#include "oracles.hpp"

using namespace abhk;

namespace {

std::shared_ptr<AmbiskewAlgebra> usl2() {
  const Field Q = Field::rational();
  auto R = std::make_shared<PolynomialAlgebra>(Q);
  const Character chi = R->make_character({{"t", Q.from_int(1)}});
  return build_hat_form(make_extension_data(R, chi, R->one(), R->one(), R->letter(0)));
}

/// Random tree restricted to shapes the parser can produce.
AstPtr random_ast(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> names{"t", "X+", "X-", "K", "q", "zeta", "F_2"};
  const long pick = oracle::small_int(rng, 0, depth <= 0 ? 1 : 5);
  switch (pick) {
    case 0: {
      const long num = oracle::small_int(rng, 0, 12);
      const long den = oracle::small_int(rng, 0, 2) == 0 ? oracle::small_int(rng, 1, 7) : 1;
      return Ast::make_number(mpq_class(num, den));
    }
    case 1:
      return Ast::make_name(names[static_cast<std::size_t>(oracle::small_int(rng, 0, 6))]);
    case 2:
      return Ast::make_power(random_ast(rng, depth - 1), oracle::small_int(rng, -3, 4));
    case 3:
      return Ast::make_negate(random_ast(rng, depth - 1));
    case 4: {
      std::vector<AstPtr> f;
      for (long i = oracle::small_int(rng, 2, 3); i > 0; --i) f.push_back(random_ast(rng, depth - 1));
      return Ast::make_product(std::move(f));
    }
    default: {
      std::vector<AstPtr> t;
      std::vector<bool> minus;
      for (long i = oracle::small_int(rng, 2, 3); i > 0; --i) {
        t.push_back(random_ast(rng, depth - 1));
        minus.push_back(!t.empty() && t.size() > 1 && oracle::small_int(rng, 0, 1) == 1);
      }
      return Ast::make_sum(std::move(t), std::move(minus));
    }
  }
}

}  // namespace

TEST_CASE("printed trees parse back to equal trees") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 500; ++i) {
    const AstPtr a = random_ast(rng, 4);
    const std::string text = print_ast(*a);
    const AstPtr b = parse_expr(text);
    INFO(text);
    CHECK(ast_equal(*a, *b));
    CHECK(print_ast(*b) == text);
  }
}

TEST_CASE("precedence and signed names") {
  CHECK(print_ast(*parse_expr("X+*X- - X-*X+")) == "X+*X- - X-*X+");
  CHECK(print_ast(*parse_expr("-t^2")) == "-t^2");
  CHECK(print_ast(*parse_expr("(-t)^2")) == "(-t)^2");
  CHECK(print_ast(*parse_expr("2 * 3/4 * t")) == "2*3/4*t");
  CHECK(print_ast(*parse_expr("a*(b + c)")) == "a*(b + c)");
  CHECK(print_ast(*parse_expr("X-^2")) == "X-^2");
  // Without declared signed names the sign is an operator.
  CHECK(print_ast(*parse_expr("Y-1", {})) == "Y - 1");
}

TEST_CASE("syntax errors carry line and column") {
  auto message = [](const std::string& src) {
    try {
      parse_expr(src);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("t +") == "line 1, column 4: unexpected end of input");
  CHECK(message("t\n * )") == "line 2, column 4: unexpected ')'");
  CHECK(message("(t") == "line 1, column 3: expected ')'");
  CHECK(message("t^x") == "line 1, column 3: expected exponent");
  CHECK(message("1/0") == "line 1, column 4: zero denominator");
  CHECK(message("t t") == "line 1, column 3: unexpected 't'");
}

TEST_CASE("evaluation in U(sl2)") {
  auto A = usl2();
  CHECK(parse_element("X-*X+", *A).to_string() == "X+*X- - t");
  CHECK(parse_element("X+*t", *A) == parse_element("(t + 1)*X+", *A));
  CHECK(parse_element("(X+ + X-)^2", *A) == parse_element("X+^2 + X-^2 + 2*X+*X- - t", *A));
  CHECK(parse_element("3/6*t", *A) == A->embed_base(A->base().letter(0)).scaled(Field::rational().from_rational(mpq_class(1, 2))));
  CHECK(parse_scalar("(2/3)^-2 - 1", *A) == Field::rational().from_rational(mpq_class(5, 4)));
  CHECK_THROWS_WITH_AS(parse_element("t^-1", *A), "t not invertible", InputError);
  CHECK_THROWS_WITH_AS(parse_element("(X+ + 1)^-1", *A), "X+ + 1 not invertible", InputError);
  CHECK_THROWS_WITH_AS(parse_element("K", *A), "unknown generator K", InputError);
  CHECK_THROWS_AS(parse_element("q", *A), InputError);
  CHECK_THROWS_AS(parse_scalar("t", *A), InputError);
}

TEST_CASE("evaluation in U_q(sl2)") {
  const Field F = Field::rational_function();
  auto U = UqSl2::create(F.q());
  CHECK(parse_element("K*K^-1", *U) == U->one());
  CHECK(parse_element("E*F - F*E", *U) == parse_element("(K - K^-1)*(q - q^-1)^-1", *U));
  CHECK(parse_element("K*E", *U) == parse_element("q^2*E*K", *U));
  CHECK_THROWS_WITH_AS(parse_element("E^-1", *U), "E not invertible", InputError);
  const Field C = Field::cyclotomic(3);
  auto R = GroupAlgebra::laurent(C);
  CHECK(parse_scalar("zeta^3", *R) == C.one());
  CHECK(parse_element("t^-2*t^3", *R) == R->letter(0));
}
