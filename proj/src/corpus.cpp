#include "abhk/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <future>

#include "abhk/coradical.hpp"
#include "abhk/errors.hpp"
#include "abhk/expr.hpp"
#include "abhk/properties.hpp"

namespace abhk {

namespace {

std::string squash(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

/// Splits "lhs = rhs" at the only '='.
std::pair<std::string, std::string> split_equation(const std::string& v) {
  const auto eq = v.find('=');
  if (eq == std::string::npos || v.find('=', eq + 1) != std::string::npos)
    throw InputError("expected 'lhs = rhs', got '" + v + "'");
  return {v.substr(0, eq), v.substr(eq + 1)};
}

std::string actual_value(const Session& s, const Expectation& e, bool& pass) {
  const std::string& k = e.key;
  if (k == "check") return s.report.overall ? "pass" : "fail";
  if (k == "witness") {
    const std::string text = s.report.to_text();
    pass = text.find(e.value) != std::string::npos;
    return pass ? e.value : s.report.first_failure();
  }
  if (k == "fast_path") return fast_path_check(*s.data).overall ? "pass" : "fail";
  if (k == "classification") return format_cases(classify_trichotomy(*s.data));
  if (k == "xi_hat") {
    pass = s.data->xi == parse_scalar(e.value, *s.base);
    return s.data->xi.to_string();
  }
  if (k == "gk_dim") return gk_report(session_algebra(s)).value.to_string();
  if (k == "gl_dim") {
    const DimBounds b = dim_bounds(session_algebra(s));
    return b.gl_exact ? b.gl_lower.to_string() : "[" + b.gl_lower.to_string() + ", " + b.gl_upper.to_string() + "]";
  }
  if (k == "pi" || k == "pi_degree") {
    PiReport r;
    try {
      r = pi_check(session_algebra(s), s.doc.options.nmax);
    } catch (const DomainError&) {
      return "unsupported";
    }
    if (k == "pi") return !r.satisfies_pi ? "undecided" : *r.satisfies_pi ? "true" : "false";
    return r.pi_degree ? std::to_string(*r.pi_degree) : "none";
  }
  if (k == "identity") {
    const auto [lhs, rhs] = split_equation(e.value);
    const AmbiskewAlgebra& A = session_algebra(s);
    const Element a = parse_element(lhs, A), b = parse_element(rhs, A);
    pass = a == b;
    return a.to_string() + " = " + b.to_string();
  }
  if (k == "corad") {
    const auto [lhs, rhs] = split_equation(e.value);
    const AmbiskewAlgebra& A = verified_algebra(s);
    const int d = corad_degree(A, parse_element(lhs, A));
    pass = squash(rhs) == std::to_string(d);
    return lhs + "= " + std::to_string(d);
  }
  throw InputError("unknown expectation " + k);
}

}  // namespace

ExpectationResult evaluate_expectation(const Session& s, const Expectation& e) {
  ExpectationResult r{e, false, ""};
  try {
    bool decided = false;
    bool pass = false;
    // Keys that compare on their own set pass; the rest compare strings.
    static const std::vector<std::string> self{"witness", "xi_hat", "identity", "corad"};
    r.actual = actual_value(s, e, pass);
    decided = std::find(self.begin(), self.end(), e.key) != self.end();
    r.pass = decided ? pass : squash(r.actual) == squash(e.value);
  } catch (const Error& ex) {
    r.actual = std::string("error: ") + ex.what();
    r.pass = false;
  }
  return r;
}

std::vector<std::string> list_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("corpus directory not found: " + dir);
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".abhk") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

CorpusResult run_entry(const std::string& path, const SessionOptions& opts) {
  CorpusResult r;
  r.path = path;
  r.name = std::filesystem::path(path).stem().string();
  try {
    const SpecDocument doc = load_spec(path);
    if (!doc.name.empty()) r.name = doc.name;
    const Session s = build_session(doc, opts);
    r.check_pass = s.report.overall;
    if (s.report.overall) {
      r.classification = format_cases(classify_trichotomy(*s.data));
      r.gk_dim = gk_report(session_algebra(s)).value.to_string();
    }
    r.ok = true;
    for (const auto& e : s.doc.expect) {
      r.results.push_back(evaluate_expectation(s, e));
      r.ok = r.ok && r.results.back().pass;
    }
  } catch (const Error& e) {
    r.ok = false;
    r.error = e.what();
  }
  return r;
}

std::vector<CorpusResult> run_corpus(const std::string& dir, const SessionOptions& opts) {
  std::vector<std::future<CorpusResult>> jobs;
  for (const auto& path : list_corpus(dir)) jobs.push_back(std::async(std::launch::async, run_entry, path, opts));
  std::vector<CorpusResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace abhk
