#include "abhk/specdoc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "abhk/errors.hpp"
#include "abhk/expr.hpp"
#include "abhk/families.hpp"
#include "abhk/uqsl2.hpp"

namespace abhk {

namespace {

// ---------------------------------------------------------------- raw tree

struct RawBlock;

struct RawEntry {
  std::string key;
  std::string value;
  int line = 0;
  std::shared_ptr<RawBlock> block;  // set for "key {"
};

struct RawBlock {
  std::vector<RawEntry> entries;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_key(const std::string& k) {
  if (k.empty() || !(std::isalpha(static_cast<unsigned char>(k[0])) || k[0] == '_')) return false;
  return std::all_of(k.begin(), k.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::shared_ptr<RawBlock> parse_raw(const std::string& src) {
  auto root = std::make_shared<RawBlock>();
  std::vector<std::pair<std::shared_ptr<RawBlock>, int>> stack{{root, 0}};
  std::istringstream in(src);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s == "}") {
      if (stack.size() == 1) fail_at(line, "unmatched '}'");
      stack.pop_back();
      continue;
    }
    if (s.back() == '{') {
      const std::string key = trim(s.substr(0, s.size() - 1));
      if (!is_key(key)) fail_at(line, "invalid block name '" + key + "'");
      auto child = std::make_shared<RawBlock>();
      stack.back().first->entries.push_back({key, "", line, child});
      stack.emplace_back(child, line);
      continue;
    }
    const auto colon = s.find(':');
    if (colon == std::string::npos) fail_at(line, "expected 'key: value', 'name {' or '}'");
    const std::string key = trim(s.substr(0, colon));
    const std::string value = trim(s.substr(colon + 1));
    if (!is_key(key)) fail_at(line, "invalid key '" + key + "'");
    if (value.empty()) fail_at(line, key + " has an empty value");
    stack.back().first->entries.push_back({key, value, line, nullptr});
  }
  if (stack.size() > 1) fail_at(stack.back().second, "block is never closed");
  return root;
}

// ---------------------------------------------------------------- schema

/// Strict reader over one block: every entry must be consumed.
class Reader {
 public:
  Reader(std::shared_ptr<RawBlock> b, std::string path) : block_(std::move(b)), path_(std::move(path)) {}

  std::string path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  std::optional<RawEntry> value(const std::string& key) {
    std::optional<RawEntry> out;
    for (const auto& e : block_->entries) {
      if (e.key != key) continue;
      if (e.block) fail_at(e.line, path(key) + " must be a value, not a block");
      if (out) fail_at(e.line, path(key) + " given twice");
      out = e;
    }
    used_.insert(key);
    return out;
  }

  std::string required(const std::string& key) {
    auto v = value(key);
    if (!v) throw InputError(path(key) + " required");
    return v->value;
  }

  std::vector<RawEntry> values(const std::string& key) {
    std::vector<RawEntry> out;
    for (const auto& e : block_->entries) {
      if (e.key != key) continue;
      if (e.block) fail_at(e.line, path(key) + " must be a value, not a block");
      out.push_back(e);
    }
    used_.insert(key);
    return out;
  }

  std::optional<Reader> block(const std::string& key) {
    std::optional<Reader> out;
    for (const auto& e : block_->entries) {
      if (e.key != key) continue;
      if (!e.block) fail_at(e.line, path(key) + " must be a block");
      if (out) fail_at(e.line, path(key) + " given twice");
      out.emplace(e.block, path(key));
    }
    used_.insert(key);
    return out;
  }

  Reader required_block(const std::string& key) {
    auto b = block(key);
    if (!b) throw InputError(path(key) + " required");
    return *b;
  }

  /// All entries in order; marks everything used.
  const std::vector<RawEntry>& all() {
    for (const auto& e : block_->entries) used_.insert(e.key);
    return block_->entries;
  }

  void finish() const {
    for (const auto& e : block_->entries)
      if (!used_.count(e.key)) fail_at(e.line, path(e.key) + " unknown key");
  }

 private:
  std::shared_ptr<RawBlock> block_;
  std::string path_;
  std::set<std::string> used_;
};

int to_int(const std::string& v, const std::string& path, int lo, int hi) {
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw InputError(path + ": expected an integer, got '" + v + "'");
  if (x < lo || x > hi) throw InputError(path + ": " + v + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(x);
}

std::vector<std::string> split_list(const std::string& v, const std::string& path, bool brackets) {
  std::string body = v;
  if (brackets) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') throw InputError(path + ": expected a list [a, b, ...]");
    body = v.substr(1, v.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw InputError(path + ": empty list item");
    out.push_back(item);
  }
  return out;
}

std::string one_of(const std::string& v, const std::string& path, const std::vector<std::string>& allowed) {
  if (std::find(allowed.begin(), allowed.end(), v) != allowed.end()) return v;
  std::string list;
  for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
  throw InputError(path + ": '" + v + "' is not one of " + list);
}

const std::set<std::string> kExpectKeys{"check",   "witness",   "classification", "gk_dim",     "gl_dim",  "pi",
                                        "pi_degree", "identity", "corad",          "fast_path", "xi_hat"};
const std::set<std::string> kRepeatable{"identity", "corad", "witness"};

}  // namespace

SpecDocument parse_spec(const std::string& src) {
  Reader top(parse_raw(src), "");
  SpecDocument doc;
  if (auto v = top.value("name")) doc.name = v->value;
  if (auto v = top.value("description")) doc.description = v->value;

  if (auto f = top.block("field")) {
    doc.field.kind = one_of(f->required("kind"), "field.kind", {"rational", "cyclotomic", "rational_function"});
    auto order = f->value("order");
    if (doc.field.kind == "cyclotomic") {
      if (!order) throw InputError("field.order required");
      doc.field.order = to_int(order->value, "field.order", 1, 1000);
    } else if (order) {
      fail_at(order->line, "field.order only applies to cyclotomic fields");
    }
    f->finish();
  }

  Reader b = top.required_block("base");
  doc.base.family = one_of(b.required("family"), "base.family", {"polynomial", "laurent", "group", "uqsl2"});
  if (auto v = b.value("var")) {
    if (doc.base.family == "uqsl2") fail_at(v->line, "base.var does not apply to uqsl2");
    if (!is_key(v->value) || v->value == "q" || v->value == "zeta") throw InputError("base.var: invalid name '" + v->value + "'");
    doc.base.var = v->value;
  }
  auto rank = b.value("rank");
  auto torsion = b.value("torsion");
  auto q = b.value("q");
  if (doc.base.family == "group") {
    doc.base.rank = rank ? to_int(rank->value, "base.rank", 0, 8) : 1;
    if (torsion)
      for (const auto& t : split_list(torsion->value, "base.torsion", true))
        doc.base.torsion.push_back(to_int(t, "base.torsion", 2, 1000));
    if (doc.base.rank + static_cast<int>(doc.base.torsion.size()) == 0) throw InputError("base: group needs rank or torsion");
  } else {
    if (rank) fail_at(rank->line, "base.rank only applies to group");
    if (torsion) fail_at(torsion->line, "base.torsion only applies to group");
  }
  if (doc.base.family == "uqsl2") {
    if (!q) throw InputError("base.q required");
    doc.base.q = q->value;
  } else if (q) {
    fail_at(q->line, "base.q only applies to uqsl2");
  }
  b.finish();

  Reader e = top.required_block("extension");
  Reader chi = e.required_block("chi");
  for (const auto& entry : chi.all()) {
    if (entry.block) fail_at(entry.line, "extension.chi." + entry.key + " must be a value");
    doc.extension.chi.emplace_back(entry.key, entry.value);
  }
  doc.extension.h = e.required("h");
  if (auto v = e.value("xi")) doc.extension.xi = v->value;
  if (auto g = e.block("general_form")) {
    doc.extension.general_form = GeneralFormSpec{g->required("l_plus"), g->required("l_minus"), g->required("r_plus"),
                                                 g->required("r_minus")};
    g->finish();
    if (!doc.extension.xi) throw InputError("extension.xi required with general_form");
    for (const char* k : {"y_plus", "y_minus"})
      if (auto v = e.value(k)) fail_at(v->line, std::string("extension.") + k + " does not apply with general_form");
  } else {
    doc.extension.y_plus = e.required("y_plus");
    doc.extension.y_minus = e.required("y_minus");
  }
  e.finish();

  if (auto o = top.block("options")) {
    if (auto v = o->value("nmax")) doc.options.nmax = to_int(v->value, "options.nmax", 1, 100000);
    if (auto v = o->value("samples")) doc.options.samples = to_int(v->value, "options.samples", 0, 100000);
    if (auto v = o->value("checks")) {
      doc.options.checks.clear();
      for (const auto& c : split_list(v->value, "options.checks", false))
        doc.options.checks.push_back(one_of(c, "options.checks", {"theorem", "fast_path", "samples"}));
    }
    o->finish();
  }

  if (auto x = top.block("expect")) {
    for (const char* origin : {"example", "oracle"}) {
      auto blk = x->block(origin);
      if (!blk) continue;
      std::map<std::string, int> seen;
      for (const auto& entry : blk->all()) {
        const std::string p = std::string("expect.") + origin + "." + entry.key;
        if (entry.block) fail_at(entry.line, p + " must be a value");
        if (!kExpectKeys.count(entry.key)) fail_at(entry.line, p + " unknown key");
        if (!kRepeatable.count(entry.key) && seen[entry.key]++) fail_at(entry.line, p + " given twice");
        doc.expect.push_back({entry.key, entry.value, origin, entry.line});
      }
    }
    x->finish();
  }
  top.finish();
  return doc;
}

SpecDocument load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_spec(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

FieldSpec parse_field_override(const std::string& text) {
  if (text == "rational" || text == "Q") return {"rational", 0};
  if (text == "rational_function" || text == "qq") return {"rational_function", 0};
  const std::string prefix = "cyclotomic:";
  if (text.rfind(prefix, 0) == 0) return {"cyclotomic", to_int(text.substr(prefix.size()), "--field", 1, 1000)};
  throw InputError("--field: expected rational, rational_function or cyclotomic:N, got '" + text + "'");
}

Field make_field(const FieldSpec& f) {
  if (f.kind == "cyclotomic") return Field::cyclotomic(f.order);
  if (f.kind == "rational_function") return Field::rational_function();
  return Field::rational();
}

std::shared_ptr<const Algebra> make_base(const BaseSpec& b, const Field& F) {
  if (b.family == "polynomial") return std::make_shared<PolynomialAlgebra>(F, b.var.empty() ? "t" : b.var);
  if (b.family == "laurent") return GroupAlgebra::laurent(F, b.var.empty() ? "t" : b.var);
  if (b.family == "group") return std::make_shared<GroupAlgebra>(F, b.rank, b.torsion, b.var.empty() ? "g" : b.var);
  // uqsl2: q is read in the scalar context of the field.
  const PolynomialAlgebra scalars(F, "t");
  Scalar q;
  try {
    q = parse_scalar(b.q, scalars);
  } catch (const InputError& e) {
    throw InputError(std::string("base.q: ") + e.what());
  }
  return UqSl2::create(q);
}

// ---------------------------------------------------------------- sessions

namespace {

Element element_at(const std::string& src, const Algebra& A, const std::string& path) {
  try {
    return parse_element(src, A);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Scalar scalar_at(const std::string& src, const Algebra& A, const std::string& path) {
  try {
    return parse_scalar(src, A);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Character character_at(const ExtensionSpec& ext, const Algebra& R) {
  std::set<std::string> letters;
  for (const auto& l : R.letters()) letters.insert(l.name);
  for (const auto& [name, e] : R.named_generators()) letters.insert(name);
  std::map<std::string, Scalar> values;
  for (const auto& [name, src] : ext.chi) {
    const std::string path = "extension.chi." + name;
    if (!letters.count(name)) throw InputError(path + ": unknown generator " + name);
    values.emplace(name, scalar_at(src, R, path));
  }
  try {
    return R.make_character(values);
  } catch (const InputError& e) {
    throw InputError(std::string("extension.chi: ") + e.what());
  }
}

/// Random products of up to three letters with small integer coefficients.
std::vector<Element> sample_elements(const Algebra& A, int count) {
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(count));
  std::uniform_int_distribution<int> letter(0, static_cast<int>(A.letters().size()) - 1), len(0, 3), coeff(-3, 3),
      terms(1, 3);
  std::vector<Element> out;
  while (static_cast<int>(out.size()) < count) {
    Element e = A.zero();
    for (int t = terms(rng); t > 0; --t) {
      Element w = A.one();
      for (int k = len(rng); k > 0; --k) w = w * A.letter(letter(rng));
      e += w.scaled(A.field().from_int(coeff(rng)));
    }
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

void run_extra_checks(Session& s) {
  const auto& checks = s.doc.options.checks;
  auto wants = [&](const char* c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };
  if (wants("fast_path") && s.data) {
    const Descriptor d = s.base->descriptor();
    if (d.commutative || d.cocommutative) {
      const bool main = s.report.overall;
      const CheckReport fast = fast_path_check(*s.data);
      s.report.add("fast path agrees with the checker", fast.overall == main,
                   std::string("fast path ") + (fast.overall ? "pass" : "fail") + ", checker " + (main ? "pass" : "fail"));
    } else {
      s.report.notes.push_back("fast path skipped: base neither commutative nor cocommutative");
    }
  }
  if (wants("samples") && s.report.overall && s.algebra && s.doc.options.samples > 0) {
    const CheckReport r = verify_hopf_on_elements(*s.algebra, sample_elements(*s.algebra, s.doc.options.samples));
    s.report.merge(r, "samples: ");
  }
}

}  // namespace

Session build_session(const SpecDocument& doc, const SessionOptions& opts) {
  Session s{doc, make_field(opts.field ? *opts.field : doc.field), nullptr, std::nullopt, nullptr, std::nullopt, {}, nullptr};
  if (opts.nmax) s.doc.options.nmax = *opts.nmax;
  s.base = make_base(doc.base, s.field);
  const Algebra& R = *s.base;
  const ExtensionSpec& ext = doc.extension;
  const Character chi = character_at(ext, R);
  const Element h = element_at(ext.h, R, "extension.h");
  AmbiskewNames names;
  if (!doc.name.empty()) names.family = doc.name;

  if (ext.general_form) {
    const GeneralFormSpec& g = *ext.general_form;
    const CoproductData cp{element_at(g.l_plus, R, "extension.general_form.l_plus"),
                           element_at(g.l_minus, R, "extension.general_form.l_minus"),
                           element_at(g.r_plus, R, "extension.general_form.r_plus"),
                           element_at(g.r_minus, R, "extension.general_form.r_minus")};
    const auto rp_inv = R.inverse_of_grouplike(cp.r_plus);
    if (!rp_inv) throw InputError("extension.general_form.r_plus: not an invertible grouplike");
    // sigma = ad_l(r+) o tau^l_chi
    const Automorphism tau = winding_automorphism_left(chi);
    std::vector<Element> ims, inv_ims;
    for (std::size_t i = 0; i < R.letters().size(); ++i) {
      const Element x = R.letter(static_cast<int>(i));
      ims.push_back(adjoint_left(cp.r_plus, tau.apply(x)));
      inv_ims.push_back(tau.apply_inverse(adjoint_left(*rp_inv, x)));
    }
    AmbiskewParams p;
    p.base = s.base;
    p.sigma = Automorphism(&R, ims, inv_ims);
    p.h = h;
    p.xi = scalar_at(*ext.xi, R, "extension.xi");
    p.coproduct = cp;
    p.family = names.family;
    try {
      s.general = std::make_shared<AmbiskewAlgebra>(std::move(p));
    } catch (const DomainError& e) {
      s.report.add("general form constructible", false, e.what());
      return s;
    }
    try {
      s.relabeled = relabel(*s.general);
    } catch (const DomainError& e) {
      s.report.add("relabel preconditions", false, e.what());
      return s;
    }
    s.data = s.relabeled->data;
    s.report = s.relabeled->report;
    s.algebra = s.relabeled->algebra;
  } else {
    std::optional<Scalar> xi;
    if (ext.xi) xi = scalar_at(*ext.xi, R, "extension.xi");
    s.data = make_extension_data(s.base, chi, element_at(ext.y_plus, R, "extension.y_plus"),
                                 element_at(ext.y_minus, R, "extension.y_minus"), h, xi);
    s.report = check_main_theorem(*s.data, names);
    s.algebra = s.report.algebra;
  }
  if (!s.algebra) {
    try {
      s.algebra = build_hat_form(*s.data, names);
    } catch (const DomainError& e) {
      s.report.notes.push_back(std::string("not constructible: ") + e.what());
    }
  }
  run_extra_checks(s);
  return s;
}

const AmbiskewAlgebra& session_algebra(const Session& s) {
  if (!s.algebra) throw DomainError("the extension data do not define an ambiskew algebra");
  return *s.algebra;
}

const AmbiskewAlgebra& verified_algebra(const Session& s) {
  const AmbiskewAlgebra& A = session_algebra(s);
  if (!A.hopf_verified()) throw NotHopfError("extension fails the Hopf checker: " + s.report.first_failure());
  return A;
}

}  // namespace abhk
