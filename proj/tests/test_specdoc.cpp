#include <doctest.h>

#include "abhk/corpus.hpp"
#include "abhk/errors.hpp"
#include "abhk/expr.hpp"
#include "abhk/specdoc.hpp"

using namespace abhk;

namespace {

const char* kUsl2 = R"(# comment line
name: usl2
base {
  family: polynomial
}
extension {
  chi {
    t: 1
  }
  y_plus: 1
  y_minus: 1   # trailing comment
  h: t
}
)";

std::string error_of(const std::string& src) {
  try {
    parse_spec(src);
  } catch (const InputError& e) {
    return e.what();
  }
  return "no error";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("a minimal document builds U(sl2)") {
  const SpecDocument doc = parse_spec(kUsl2);
  CHECK(doc.name == "usl2");
  CHECK(doc.field.kind == "rational");
  CHECK(doc.extension.chi.size() == 1);
  const Session s = build_session(doc);
  CHECK(s.report.overall);
  const AmbiskewAlgebra& A = verified_algebra(s);
  CHECK(parse_element("X+*X- - X-*X+", A) == A.embed_base(A.base().letter(0)));
}

TEST_CASE("schema errors name the offending path") {
  CHECK(error_of(replace(kUsl2, "  y_minus: 1   # trailing comment\n", "")) == "extension.y_minus required");
  CHECK(error_of(replace(kUsl2, "  h: t\n", "  h: t\n  colour: red\n")) == "line 13: extension.colour unknown key");
  CHECK(error_of(replace(kUsl2, "family: polynomial", "family: matrix")) ==
        "base.family: 'matrix' is not one of polynomial, laurent, group, uqsl2");
  CHECK(error_of(replace(kUsl2, "  h: t\n", "  h: t\n  h: 2\n")) == "line 13: extension.h given twice");
  CHECK(error_of(replace(kUsl2, "name: usl2\n", "field {\n  kind: cyclotomic\n}\n")) == "field.order required");
  CHECK(error_of(replace(kUsl2, "}\nextension {", "extension {") + "}\n") == "line 5: base.extension unknown key");
  CHECK(error_of(std::string(kUsl2) + "}\n") == "line 14: unmatched '}'");
  CHECK(error_of("base {\n  family: laurent\n") == "line 1: block is never closed");
  CHECK(error_of("base {\n  family laurent\n}\n") == "line 2: expected 'key: value', 'name {' or '}'");
}

TEST_CASE("expression errors inside a document carry the path") {
  const SpecDocument bad_h = parse_spec(replace(kUsl2, "h: t", "h: t^-1"));
  CHECK_THROWS_WITH_AS(build_session(bad_h), "extension.h: t not invertible", InputError);
  const SpecDocument bad_chi = parse_spec(replace(kUsl2, "t: 1", "s: 1"));
  CHECK_THROWS_WITH_AS(build_session(bad_chi), "extension.chi.s: unknown generator s", InputError);
}

TEST_CASE("general form goes through the change of variables") {
  const std::string src = R"(
field {
  kind: rational_function
}
base {
  family: laurent
  var: K
}
extension {
  chi {
    K: q^-2
  }
  xi: 1
  h: (K - K^-1)*(q - q^-1)^-1
  general_form {
    l_plus: K
    r_plus: 1
    l_minus: 1
    r_minus: K^-1
  }
}
)";
  const Session s = build_session(parse_spec(src));
  REQUIRE(s.relabeled);
  CHECK(s.report.overall);
  const Field F = Field::rational_function();
  CHECK(s.data->xi == F.q().pow(-2));
  CHECK(s.data->y_minus == s.base->letter(0));
  // The hat relation holds inside the general presentation.
  const AmbiskewAlgebra& G = *s.general;
  CHECK(s.relabeled->xi_hat_witness == G.embed_base(s.data->h));
  CHECK(error_of(replace(src, "  xi: 1\n", "")) == "extension.xi required with general_form");
}

TEST_CASE("field override replaces the declared field") {
  SessionOptions o;
  o.field = parse_field_override("cyclotomic:5");
  const Session s = build_session(parse_spec(kUsl2), o);
  CHECK(s.field == Field::cyclotomic(5));
  CHECK(s.report.overall);
  CHECK_THROWS_AS(parse_field_override("reals"), InputError);
}

TEST_CASE("every corpus entry meets its expectations") {
  const auto results = run_corpus(ABHK_CORPUS_DIR);
  CHECK(results.size() >= 10);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.error);
    for (const auto& x : r.results) {
      INFO(x.expectation.key << " " << x.expectation.value << " -> " << x.actual);
      CHECK(x.pass);
    }
    CHECK(r.ok);
  }
}
