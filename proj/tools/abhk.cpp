// abhk: command-line front end for ambiskew Hopf extension specs.
// Exit codes: 0 success, 1 semantic failure, 2 input error, 3 invariant breach.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "abhk/coradical.hpp"
#include "abhk/corpus.hpp"
#include "abhk/errors.hpp"
#include "abhk/expr.hpp"
#include "abhk/properties.hpp"
#include "abhk/specdoc.hpp"

#ifndef ABHK_DEFAULT_CORPUS
#define ABHK_DEFAULT_CORPUS "corpus"
#endif

namespace {

using namespace abhk;

enum Exit { kOk = 0, kSemantic = 1, kInput = 2, kBreach = 3 };

struct Global {
  std::string field;
  int nmax = 0;
  std::string format = "text";
  bool machine() const { return format == "machine"; }
};

std::string corpus_dir() {
  if (const char* env = std::getenv("ABHK_CORPUS_DIR"); env && *env) return env;
  return ABHK_DEFAULT_CORPUS;
}

/// The path as given, else the same name inside the corpus directory.
std::string resolve_spec(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const fs::path alt = fs::path(corpus_dir()) / fs::path(path).filename();
  if (fs::exists(alt)) return alt.string();
  throw InputError("cannot read " + path);
}

SessionOptions session_options(const Global& g) {
  SessionOptions o;
  if (!g.field.empty()) o.field = parse_field_override(g.field);
  if (g.nmax > 0) o.nmax = g.nmax;
  return o;
}

Session open(const Global& g, const std::string& spec) {
  return build_session(load_spec(resolve_spec(spec)), session_options(g));
}

void emit(const Global& g, const std::string& key, const std::string& value) {
  if (g.machine()) {
    std::cout << key << '\t' << value << '\n';
  } else {
    std::cout << value << '\n';
  }
}

int cmd_check(const Global& g, const std::string& spec) {
  const Session s = open(g, spec);
  std::cout << (g.machine() ? s.report.to_machine() : s.report.to_text());
  return s.report.overall ? kOk : kSemantic;
}

int cmd_mul(const Global& g, const std::string& spec, const std::vector<std::string>& exprs) {
  const Session s = open(g, spec);
  const AmbiskewAlgebra& A = session_algebra(s);
  Element out = A.one();
  for (const auto& e : exprs) out = out * parse_element(e, A);
  emit(g, "product", out.to_string());
  return kOk;
}

int cmd_coprod(const Global& g, const std::string& spec, const std::string& expr) {
  const Session s = open(g, spec);
  const AmbiskewAlgebra& A = verified_algebra(s);
  emit(g, "coproduct", delta(A, parse_element(expr, A)).to_string());
  return kOk;
}

int cmd_antipode(const Global& g, const std::string& spec, const std::string& expr) {
  const Session s = open(g, spec);
  const AmbiskewAlgebra& A = verified_algebra(s);
  emit(g, "antipode", antipode(A, parse_element(expr, A)).to_string());
  return kOk;
}

int cmd_corad(const Global& g, const std::string& spec, const std::string& expr) {
  const Session s = open(g, spec);
  const AmbiskewAlgebra& A = verified_algebra(s);
  const Element a = parse_element(expr, A);
  const int d = corad_degree(A, a);
  emit(g, "degree", std::to_string(d));
  for (const auto& t : corad_breakdown(A, a)) {
    const std::string mono = A.monomial_to_string(t.monomial);
    if (g.machine()) {
      std::cout << "term\t" << mono << '\t' << t.m << '\t' << t.n << '\t' << t.base_degree << '\t' << t.total() << '\n';
    } else {
      std::cout << "  " << mono << ": m = " << t.m << ", n = " << t.n << ", base degree = " << t.base_degree
                << ", degree = " << t.total() << '\n';
    }
  }
  return kOk;
}

int cmd_classify(const Global& g, const std::string& spec) {
  const Session s = open(g, spec);
  verified_algebra(s);
  emit(g, "cases", format_cases(classify_trichotomy(*s.data)));
  return kOk;
}

int cmd_props(const Global& g, const std::string& spec) {
  const Session s = open(g, spec);
  const AmbiskewAlgebra& A = session_algebra(s);
  for (const auto& [k, v] : property_lines(A, s.doc.options.nmax))
    std::cout << k << (g.machine() ? "\t" : ": ") << v << '\n';
  return kOk;
}

int cmd_relabel(const Global& g, const std::string& spec) {
  const Session s = open(g, spec);
  if (!s.doc.extension.general_form) throw InputError(spec + ": relabel needs an extension.general_form block");
  if (!s.relabeled) {
    std::cout << (g.machine() ? s.report.to_machine() : s.report.to_text());
    return kSemantic;
  }
  const ExtensionData& d = s.relabeled->data;
  const auto line = [&](const std::string& k, const std::string& v) {
    std::cout << k << (g.machine() ? "\t" : ": ") << v << '\n';
  };
  for (std::size_t i = 0; i < d.base->letters().size(); ++i) {
    const auto& l = d.base->letters()[i];
    if (l.inverse >= 0 && static_cast<std::size_t>(l.inverse) < i) continue;
    line("chi(" + l.name + ")", d.chi(d.base->letter(static_cast<int>(i))).to_string());
  }
  line("y_plus", d.y_plus.to_string());
  line("y_minus", d.y_minus.to_string());
  line("z", d.z.to_string());
  line("xi", d.xi.to_string());
  line("h", d.h.to_string());
  std::cout << (g.machine() ? s.report.to_machine() : s.report.to_text());
  return s.report.overall ? kOk : kSemantic;
}

int cmd_examples(const Global& g, const std::string& dir_arg) {
  const std::string dir = dir_arg.empty() ? corpus_dir() : dir_arg;
  const auto results = run_corpus(dir, session_options(g));
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.ok ? 1 : 0;
    if (g.machine()) {
      std::cout << "entry\t" << r.name << '\t' << (r.ok ? "pass" : "fail") << '\t' << (r.check_pass ? "hopf" : "not-hopf")
                << '\t' << (r.classification.empty() ? "-" : r.classification) << '\t'
                << (r.gk_dim.empty() ? "-" : r.gk_dim) << '\n';
    } else {
      std::ostringstream row;
      row << (r.ok ? "PASS  " : "FAIL  ") << r.name;
      std::string text = row.str();
      text.resize(std::max<std::size_t>(text.size() + 1, 30), ' ');
      text += std::string(r.check_pass ? "hopf      " : "not hopf  ") + "cases " +
              (r.classification.empty() ? "-" : r.classification);
      text.resize(std::max<std::size_t>(text.size() + 1, 58), ' ');
      text += "gk " + (r.gk_dim.empty() ? "-" : r.gk_dim);
      std::cout << text << '\n';
    }
    if (!r.error.empty()) std::cout << (g.machine() ? "error\t" : "      error: ") << r.error << '\n';
    for (const auto& x : r.results) {
      if (x.pass) continue;
      const Expectation& e = x.expectation;
      if (g.machine()) {
        std::cout << "mismatch\t" << r.name << '\t' << e.key << '\t' << e.value << '\t' << x.actual << '\n';
      } else {
        std::cout << "      " << e.origin << " " << e.key << ": expected " << e.value << ", got " << x.actual << '\n';
      }
    }
  }
  if (g.machine()) {
    std::cout << "summary\t" << passed << '/' << results.size() << '\n';
  } else {
    std::cout << passed << '/' << results.size() << " entries pass\n";
  }
  return passed == results.size() ? kOk : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ambiskew Hopf extensions: check, compute and report"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--field", g.field, "override the field: rational, rational_function or cyclotomic:N");
  app.add_option("--nmax", g.nmax, "search bound for the order of sigma")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "machine"}));

  std::string spec, dir;
  std::vector<std::string> exprs;
  std::string expr;
  auto with_spec = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("spec", spec, "spec file (.abhk)")->required();
    return c;
  };
  auto* check = with_spec("check", "run the Hopf checker and print its report");
  auto* mul = with_spec("mul", "normal form of the product of the expressions");
  mul->add_option("expr", exprs, "expressions")->required();
  auto* coprod = with_spec("coprod", "coproduct of an element");
  coprod->add_option("expr", expr, "expression")->required();
  auto* anti = with_spec("antipode", "antipode of an element");
  anti->add_option("expr", expr, "expression")->required();
  auto* corad = with_spec("corad", "coradical degree with per-term breakdown");
  corad->add_option("expr", expr, "expression")->required();
  auto* classify = with_spec("classify", "trichotomy cases");
  auto* props = with_spec("props", "ring-theoretic and homological properties");
  auto* rel = with_spec("relabel", "change of variables from a general coproduct to hat form");
  auto* examples = app.add_subcommand("examples", "run the regression corpus");
  examples->add_option("dir", dir, "corpus directory (default $ABHK_CORPUS_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return cmd_check(g, spec);
    if (*mul) return cmd_mul(g, spec, exprs);
    if (*coprod) return cmd_coprod(g, spec, expr);
    if (*anti) return cmd_antipode(g, spec, expr);
    if (*corad) return cmd_corad(g, spec, expr);
    if (*classify) return cmd_classify(g, spec);
    if (*props) return cmd_props(g, spec);
    if (*rel) return cmd_relabel(g, spec);
    if (*examples) return cmd_examples(g, dir);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return kBreach;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSemantic;
  }
  return kInput;
}
