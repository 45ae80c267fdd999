#include "abhk/expr.hpp"

#include <cctype>
#include <map>

#include "abhk/errors.hpp"

namespace abhk {

AstPtr Ast::make_number(mpq_class v) {
  auto a = std::make_shared<Ast>();
  a->kind = AstKind::Number;
  v.canonicalize();
  a->number = v;
  return a;
}

AstPtr Ast::make_name(std::string n) {
  auto a = std::make_shared<Ast>();
  a->kind = AstKind::Name;
  a->name = std::move(n);
  return a;
}

AstPtr Ast::make_power(AstPtr base, long e) {
  auto a = std::make_shared<Ast>();
  a->kind = AstKind::Power;
  a->exponent = e;
  a->children = {std::move(base)};
  return a;
}

AstPtr Ast::make_product(std::vector<AstPtr> f) {
  auto a = std::make_shared<Ast>();
  a->kind = AstKind::Product;
  a->children = std::move(f);
  return a;
}

AstPtr Ast::make_sum(std::vector<AstPtr> terms, std::vector<bool> minus) {
  auto a = std::make_shared<Ast>();
  a->kind = AstKind::Sum;
  a->children = std::move(terms);
  a->minus = std::move(minus);
  return a;
}

AstPtr Ast::make_negate(AstPtr x) {
  auto a = std::make_shared<Ast>();
  a->kind = AstKind::Negate;
  a->children = {std::move(x)};
  return a;
}

bool ast_equal(const Ast& a, const Ast& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case AstKind::Number:
      return a.number == b.number;
    case AstKind::Name:
      return a.name == b.name;
    case AstKind::Power:
      if (a.exponent != b.exponent) return false;
      break;
    case AstKind::Sum:
      if (a.minus != b.minus) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!ast_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const std::string& src, const std::set<std::string>& signed_names) : src_(src), signed_(signed_names) {}

  AstPtr parse() {
    AstPtr e = expr();
    skip_space();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  AstPtr expr() {
    std::vector<AstPtr> terms{term()};
    std::vector<bool> minus{false};
    for (;;) {
      if (accept('+')) {
        minus.push_back(false);
      } else if (accept('-')) {
        minus.push_back(true);
      } else {
        break;
      }
      terms.push_back(term());
    }
    if (terms.size() == 1) return terms[0];
    return Ast::make_sum(std::move(terms), std::move(minus));
  }

  AstPtr term() {
    std::vector<AstPtr> factors{factor()};
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return factors[0];
    return Ast::make_product(std::move(factors));
  }

  AstPtr factor() {
    const bool negate = accept('-');
    AstPtr a = atom();
    if (accept('^')) {
      skip_space();
      bool neg = false;
      if (pos_ < src_.size() && src_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      const mpz_class e = integer("exponent");
      if (!e.fits_slong_p() || abs(e) > 1000000) fail("exponent out of range");
      a = Ast::make_power(a, neg ? -e.get_si() : e.get_si());
    }
    return negate ? Ast::make_negate(a) : a;
  }

  mpz_class integer(const std::string& what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected " + what);
    return mpz_class(src_.substr(start, pos_ - start));
  }

  AstPtr atom() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      AstPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = integer("number");
      const std::size_t save = pos_;
      skip_space();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const mpz_class den = integer("denominator");
        if (den == 0) fail("zero denominator");
        return Ast::make_number(mpq_class(num, den));
      }
      pos_ = save;
      return Ast::make_number(mpq_class(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      std::string name = src_.substr(start, pos_ - start);
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-') && signed_.count(name + src_[pos_])) {
        name += src_[pos_];
        ++pos_;
      }
      return Ast::make_name(std::move(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& src_;
  const std::set<std::string>& signed_;
  std::size_t pos_ = 0;
};

}  // namespace

AstPtr parse_expr(const std::string& src, const std::set<std::string>& signed_names) {
  return Parser(src, signed_names).parse();
}

// ---------------------------------------------------------------- printer

namespace {

bool is_atomic(const Ast& a) {
  return a.kind == AstKind::Name || (a.kind == AstKind::Number && a.number.get_den() == 1);
}

std::string wrap(const Ast& a) { return "(" + print_ast(a) + ")"; }

}  // namespace

std::string print_ast(const Ast& a) {
  switch (a.kind) {
    case AstKind::Number:
      return a.number.get_str();
    case AstKind::Name:
      return a.name;
    case AstKind::Power: {
      const Ast& b = *a.children[0];
      return (is_atomic(b) ? print_ast(b) : wrap(b)) + "^" + std::to_string(a.exponent);
    }
    case AstKind::Negate: {
      const Ast& b = *a.children[0];
      const bool bare = is_atomic(b) || b.kind == AstKind::Power || b.kind == AstKind::Number;
      return "-" + (bare ? print_ast(b) : wrap(b));
    }
    case AstKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        const Ast& f = *a.children[i];
        const bool bare = f.kind != AstKind::Sum && f.kind != AstKind::Product;
        out += (i ? "*" : "") + (bare ? print_ast(f) : wrap(f));
      }
      return out;
    }
    case AstKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        const Ast& t = *a.children[i];
        const std::string body = t.kind == AstKind::Sum ? wrap(t) : print_ast(t);
        if (i == 0) {
          out += body;
        } else {
          out += (a.minus[i] ? " - " : " + ") + body;
        }
      }
      return out;
    }
  }
  return "";
}

// ---------------------------------------------------------------- evaluation

std::set<std::string> signed_names(const Algebra& A) {
  std::set<std::string> out{"X+", "X-"};
  for (const auto& [name, e] : A.named_generators())
    if (!name.empty() && (name.back() == '+' || name.back() == '-')) out.insert(name);
  return out;
}

namespace {

Element power(const Element& base, long e, const Ast& node) {
  const Algebra& A = *base.algebra();
  Element b = base;
  if (e < 0) {
    if (b.terms().size() != 1) throw InputError(print_ast(node) + " not invertible");
    const auto& [m, c] = *b.terms().begin();
    std::optional<Monomial> inv;
    if (m == A.identity_monomial()) {
      inv = m;
    } else {
      inv = A.monomial_inverse(m);
    }
    if (!inv) throw InputError(print_ast(node) + " not invertible");
    b = Element::monomial(&A, *inv, c.inverse());
    // The inverse of a monomial is checked, not assumed.
    if (b * base != A.one()) throw InputError(print_ast(node) + " not invertible");
    e = -e;
  }
  Element out = A.one();
  Element sq = b;
  while (e > 0) {
    if (e & 1) out = out * sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return out;
}

struct Evaluator {
  const Algebra& A;
  std::map<std::string, Element> names;

  explicit Evaluator(const Algebra& alg) : A(alg) {
    for (const auto& [n, e] : A.named_generators()) names.emplace(n, e);
  }

  Element operator()(const Ast& a) const {
    switch (a.kind) {
      case AstKind::Number:
        return A.scalar(A.field().from_rational(a.number));
      case AstKind::Name: {
        if (auto it = names.find(a.name); it != names.end()) return it->second;
        if (a.name == "q") {
          if (A.field().kind() != FieldKind::RationalFunction)
            throw InputError("q is not available in the field " + A.field().name());
          return A.scalar(A.field().q());
        }
        if (a.name == "zeta") {
          if (A.field().kind() != FieldKind::Cyclotomic) throw InputError("zeta is not available in the field " + A.field().name());
          return A.scalar(A.field().zeta());
        }
        throw InputError("unknown generator " + a.name);
      }
      case AstKind::Power:
        return power((*this)(*a.children[0]), a.exponent, *a.children[0]);
      case AstKind::Negate:
        return -(*this)(*a.children[0]);
      case AstKind::Product: {
        Element out = (*this)(*a.children[0]);
        for (std::size_t i = 1; i < a.children.size(); ++i) out = out * (*this)(*a.children[i]);
        return out;
      }
      case AstKind::Sum: {
        Element out = A.zero();
        for (std::size_t i = 0; i < a.children.size(); ++i) {
          const Element t = (*this)(*a.children[i]);
          out += a.minus[i] ? -t : t;
        }
        return out;
      }
    }
    return A.zero();
  }
};

}  // namespace

Element eval_expr(const Ast& a, const Algebra& A) { return Evaluator(A)(a); }

Element parse_element(const std::string& src, const Algebra& A) { return eval_expr(*parse_expr(src, signed_names(A)), A); }

Scalar parse_scalar(const std::string& src, const Algebra& A) {
  const Element e = parse_element(src, A);
  if (e.is_zero()) return A.field().zero();
  if (e.terms().size() != 1 || e.terms().begin()->first != A.identity_monomial())
    throw InputError("expected a scalar, got " + e.to_string());
  return e.terms().begin()->second;
}

}  // namespace abhk
