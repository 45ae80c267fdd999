#pragma once

// Extension spec documents (.abhk): a line-oriented format of nested blocks
// and key: value pairs describing a coefficient field, a base Hopf algebra
// and ambiskew extension data. The grammar is in docs/spec-format.md.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abhk/hopf.hpp"

namespace abhk {

struct FieldSpec {
  std::string kind = "rational";  // rational | cyclotomic | rational_function
  int order = 0;                  // cyclotomic only
};

struct BaseSpec {
  std::string family;  // polynomial | laurent | group | uqsl2
  std::string var;     // empty: family default
  int rank = 1;
  std::vector<int> torsion;
  std::string q;  // uqsl2 only, a scalar expression
};

struct GeneralFormSpec {
  std::string l_plus, l_minus, r_plus, r_minus;
};

struct ExtensionSpec {
  std::vector<std::pair<std::string, std::string>> chi;  // generator -> scalar expression
  std::string y_plus, y_minus, h;                         // hat form; empty in general form
  std::optional<std::string> xi;                          // required in general form
  std::optional<GeneralFormSpec> general_form;
};

struct OptionsSpec {
  int nmax = 256;
  std::vector<std::string> checks{"theorem"};  // theorem, fast_path, samples
  int samples = 100;
};

struct Expectation {
  std::string key;
  std::string value;
  std::string origin;  // "example" or "oracle"
  int line = 0;
};

struct SpecDocument {
  std::string name, description;
  FieldSpec field;
  BaseSpec base;
  ExtensionSpec extension;
  OptionsSpec options;
  std::vector<Expectation> expect;
};

/// Strict parse: unknown keys, missing required keys and malformed values
/// raise InputError with a dotted path, e.g. "extension.y_minus required".
SpecDocument parse_spec(const std::string& src);
SpecDocument load_spec(const std::string& path);

/// "rational", "rational_function" (or "qq"), "cyclotomic:N".
FieldSpec parse_field_override(const std::string& text);

Field make_field(const FieldSpec& f);
std::shared_ptr<const Algebra> make_base(const BaseSpec& b, const Field& F);

struct Session {
  SpecDocument doc;
  Field field;
  std::shared_ptr<const Algebra> base;
  std::optional<ExtensionData> data;                // hat-form data
  std::shared_ptr<AmbiskewAlgebra> general;         // general presentation, when given
  std::optional<RelabelResult> relabeled;
  CheckReport report;
  std::shared_ptr<AmbiskewAlgebra> algebra;  // hat form; Hopf-verified iff report.overall
};

struct SessionOptions {
  std::optional<FieldSpec> field;
  std::optional<int> nmax;
};

/// Builds the base and the data, runs the checker (general form goes
/// through relabel first) and any extra checks listed in options.
Session build_session(const SpecDocument& doc, const SessionOptions& opts = {});

/// The algebra of a session; DomainError when construction failed.
const AmbiskewAlgebra& session_algebra(const Session& s);
/// Requires the algebra to be Hopf-verified; NotHopfError otherwise.
const AmbiskewAlgebra& verified_algebra(const Session& s);

}  // namespace abhk
