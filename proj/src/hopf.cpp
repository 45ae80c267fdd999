#include "abhk/hopf.hpp"

#include <sstream>

#include "abhk/errors.hpp"

namespace abhk {

namespace {

std::string clip(const std::string& s, std::size_t limit = 240) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + " ...";
}

std::string difference(const Element& a, const Element& b) { return "difference " + clip((a - b).to_string()); }
std::string difference(const Tensor& a, const Tensor& b) { return "difference " + clip((a - b).to_string()); }

}  // namespace

// ---------------------------------------------------------------- reports

void CheckReport::add(std::string name, bool pass, std::string witness) {
  conditions.push_back(ConditionResult{std::move(name), pass, std::move(witness)});
  overall = overall && pass;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.conditions) add(prefix + c.name, c.pass, c.witness);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  overall = overall && other.overall;
}

const ConditionResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

std::string CheckReport::first_failure() const {
  for (const auto& c : conditions)
    if (!c.pass) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
  return "";
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : conditions) {
    out << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.witness.empty()) out << ": " << c.witness;
    out << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  out << "overall: " << (overall ? "pass" : "fail") << "\n";
  return out.str();
}

std::string CheckReport::to_machine() const {
  std::ostringstream out;
  for (const auto& c : conditions) out << "condition\t" << c.name << "\t" << (c.pass ? "pass" : "fail") << "\t" << c.witness << "\n";
  for (const auto& n : notes) out << "note\t" << n << "\n";
  out << "overall\t" << (overall ? "pass" : "fail") << "\n";
  return out.str();
}

// ---------------------------------------------------------------- tensors

Tensor apply_delta_at(const Tensor& t, int index) {
  const Algebra* alg = t.algebra();
  Tensor out(alg, t.arity() + 1);
  const auto idx = static_cast<std::size_t>(index);
  for (const auto& [key, c] : t.terms()) {
    for (const auto& [pair, d] : alg->delta_monomial(key[idx]).terms()) {
      Tensor::Key k(key.begin(), key.begin() + static_cast<long>(idx));
      k.push_back(pair[0]);
      k.push_back(pair[1]);
      k.insert(k.end(), key.begin() + static_cast<long>(idx) + 1, key.end());
      out.add_term(k, c * d);
    }
  }
  return out;
}

Tensor apply_counit_at(const Tensor& t, int index) {
  const Algebra* alg = t.algebra();
  Tensor out(alg, t.arity() - 1);
  const auto idx = static_cast<std::size_t>(index);
  for (const auto& [key, c] : t.terms()) {
    const Scalar e = alg->counit(alg->monomial(key[idx]));
    if (e.is_zero()) continue;
    Tensor::Key k = key;
    k.erase(k.begin() + static_cast<long>(idx));
    out.add_term(k, c * e);
  }
  return out;
}

Element multiply_out(const Tensor& t, int antipode_index) {
  const Algebra* alg = t.algebra();
  Element out = alg->zero();
  for (const auto& [key, c] : t.terms()) {
    const Element a = antipode_index == 0 ? alg->antipode_monomial(key[0]) : alg->monomial(key[0]);
    const Element b = antipode_index == 1 ? alg->antipode_monomial(key[1]) : alg->monomial(key[1]);
    out += (a * b).scaled(c);
  }
  return out;
}

Element flatten(const Tensor& t) {
  if (t.arity() != 1) throw DomainError("flatten needs an arity-one tensor");
  Element out = t.algebra()->zero();
  for (const auto& [key, c] : t.terms()) out.add_term(key[0], c);
  return out;
}

// ---------------------------------------------------------------- axioms

namespace {

void check_laws(CheckReport& report, const Algebra& A, const Element& a, const std::string& label) {
  const Tensor D = A.delta(a);
  const Tensor left = apply_delta_at(D, 0), right = apply_delta_at(D, 1);
  report.add("coassociativity on " + label, left == right, left == right ? "" : difference(left, right));
  const Element c1 = flatten(apply_counit_at(D, 0)), c2 = flatten(apply_counit_at(D, 1));
  const bool counit_ok = c1 == a && c2 == a;
  report.add("counit on " + label, counit_ok, counit_ok ? "" : difference(c1 == a ? c2 : c1, a));
  const Element target = A.scalar(A.counit(a));
  const Element s1 = multiply_out(D, 0), s2 = multiply_out(D, 1);
  const bool antipode_ok = s1 == target && s2 == target;
  report.add("antipode on " + label, antipode_ok, antipode_ok ? "" : difference(s1 == target ? s2 : s1, target));
}

}  // namespace

CheckReport verify_hopf_axioms(const Algebra& A) {
  CheckReport report;
  if (!A.has_coproduct()) {
    report.add("coproduct attached", false, "algebra has no coproduct");
    return report;
  }
  const auto& ls = A.letters();
  std::vector<Tensor> delta_images;
  std::vector<Element> antipode_images;
  std::vector<Scalar> counit_images;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const int l = static_cast<int>(i);
    check_laws(report, A, A.letter(l), ls[i].name);
    delta_images.push_back(A.delta_letter(l));
    antipode_images.push_back(A.antipode_letter(l));
    counit_images.push_back(A.counit_letter(l));
  }
  const Tensor one2 = A.tensor_one(2);
  const Element one = A.one();
  auto tmul = [](const Tensor& x, const Tensor& y) { return x * y; };
  auto opmul = [](const Element& x, const Element& y) { return y * x; };
  for (const auto& rel : A.relations()) {
    const Tensor dl = evaluate_letter_poly(rel.lhs, delta_images, one2, tmul);
    const Tensor dr = evaluate_letter_poly(rel.rhs, delta_images, one2, tmul);
    report.add("Delta preserves " + rel.name, dl == dr, dl == dr ? "" : difference(dl, dr));
    const Scalar el = evaluate_letter_poly(rel.lhs, counit_images, A.field());
    const Scalar er = evaluate_letter_poly(rel.rhs, counit_images, A.field());
    report.add("epsilon preserves " + rel.name, el == er, el == er ? "" : el.to_string() + " vs " + er.to_string());
    const Element sl = evaluate_letter_poly(rel.lhs, antipode_images, one, opmul);
    const Element sr = evaluate_letter_poly(rel.rhs, antipode_images, one, opmul);
    report.add("S reverses " + rel.name, sl == sr, sl == sr ? "" : difference(sl, sr));
  }
  report.notes.push_back("verified on generators");
  return report;
}

CheckReport verify_hopf_on_elements(const Algebra& A, const std::vector<Element>& samples) {
  CheckReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string label = "sample " + std::to_string(i);
    check_laws(report, A, samples[i], label);
    if (i + 1 < samples.size()) {
      const Tensor lhs = A.delta(samples[i] * samples[i + 1]);
      const Tensor rhs = A.delta(samples[i]) * A.delta(samples[i + 1]);
      report.add("Delta multiplicative on " + label, lhs == rhs, lhs == rhs ? "" : difference(lhs, rhs));
    }
  }
  return report;
}

namespace {

void require_hopf(const AmbiskewAlgebra& A) {
  if (!A.hopf_verified()) throw NotHopfError("algebra has not been verified as a Hopf algebra");
}

}  // namespace

Tensor delta(const AmbiskewAlgebra& A, const Element& a) {
  require_hopf(A);
  return A.delta(a);
}

Scalar counit(const AmbiskewAlgebra& A, const Element& a) {
  require_hopf(A);
  return A.counit(a);
}

Element antipode(const AmbiskewAlgebra& A, const Element& a) {
  require_hopf(A);
  return A.antipode(a);
}

// ---------------------------------------------------------------- main check

ExtensionData make_extension_data(std::shared_ptr<const Algebra> base, Character chi, Element y_plus, Element y_minus,
                                  Element h, std::optional<Scalar> xi) {
  ExtensionData d;
  d.base = std::move(base);
  d.sigma = winding_automorphism_left(chi);
  d.xi = xi ? *xi : chi(y_plus);
  d.z = y_plus * y_minus;
  d.chi = std::move(chi);
  d.y_plus = std::move(y_plus);
  d.y_minus = std::move(y_minus);
  d.h = std::move(h);
  return d;
}

std::shared_ptr<AmbiskewAlgebra> build_hat_form(const ExtensionData& data, const AmbiskewNames& names) {
  AmbiskewParams p;
  p.base = data.base;
  p.sigma = data.sigma;
  p.h = data.h;
  p.xi = data.xi;
  p.coproduct = CoproductData{data.y_plus, data.y_minus, data.base->one(), data.base->one()};
  p.x_plus_name = names.x_plus;
  p.x_minus_name = names.x_minus;
  p.family = names.family;
  return std::make_shared<AmbiskewAlgebra>(std::move(p));
}

namespace {

std::string non_commuting_generator(const Algebra& R, const Element& y) {
  for (int g : R.grouplike_generators()) {
    const Element e = R.letter(g);
    if (y * e != e * y) return R.letters()[static_cast<std::size_t>(g)].name;
  }
  return "";
}

void add_antipode_notes(CheckReport& report, const AmbiskewAlgebra& A, const ExtensionData& data) {
  for (const bool plus : {true, false}) {
    const std::string sign = plus ? "+" : "-";
    const Element x = plus ? A.x_plus() : A.x_minus();
    const Element y = A.embed_base(plus ? data.y_plus : data.y_minus);
    const Element y_inv = A.embed_base(data.base->antipode(plus ? data.y_plus : data.y_minus));
    const Element s = A.antipode(x);
    const bool inverse_form = s == -(y_inv * x);
    const bool direct_form = s == -(y * x);
    report.notes.push_back("S(X" + sign + ") = " + s.to_string() + " (derived); -y" + sign + "^-1*X" + sign + ": " +
                           (inverse_form ? "holds" : "fails") + "; -y" + sign + "*X" + sign + ": " +
                           (direct_form ? "holds" : "fails"));
  }
}

}  // namespace

CheckReport check_main_theorem(const ExtensionData& data, const AmbiskewNames& names) {
  const Algebra& R = *data.base;
  CheckReport report;
  for (const Element* e : {&data.y_plus, &data.y_minus, &data.z, &data.h})
    if (e->algebra() != &R) throw AlgebraMismatch("extension data must lie in the base algebra");
  if (data.xi.field() != R.field()) throw FieldMismatch("xi lies in a different field from the base");

  const auto bad_relation = data.chi.violated_relation();
  report.add("chi is a character", !bad_relation, bad_relation ? "violates " + *bad_relation : "");
  report.add("xi nonzero", !data.xi.is_zero());

  const bool yp = R.is_grouplike(data.y_plus), ym = R.is_grouplike(data.y_minus);
  report.add("y+ grouplike", yp, yp ? "" : data.y_plus.to_string());
  report.add("y- grouplike", ym, ym ? "" : data.y_minus.to_string());
  const Element prod = data.y_plus * data.y_minus;
  report.add("z = y+*y-", data.z == prod, data.z == prod ? "" : difference(data.z, prod));
  const Element rev = data.y_minus * data.y_plus;
  report.add("y+*y- = y-*y+", prod == rev, prod == rev ? "" : difference(prod, rev));
  const bool zg = R.is_grouplike(data.z);
  report.add("z grouplike", zg, zg ? "" : data.z.to_string());
  report.add("z central", R.is_central(data.z), data.z.to_string());
  report.add("h central", R.is_central(data.h), data.h.to_string());
  const Tensor dh = R.delta(data.h);
  const Tensor skew = Tensor::pure({data.h, R.one()}) + Tensor::pure({data.z, data.h});
  report.add("h in P(1,z)", dh == skew, dh == skew ? "" : difference(dh, skew));
  for (const bool plus : {true, false}) {
    const Element& y = plus ? data.y_plus : data.y_minus;
    const std::string g = non_commuting_generator(R, y);
    report.add(std::string("y") + (plus ? "+" : "-") + " in Z(G(R))", g.empty(), g.empty() ? "" : "fails to commute with " + g);
  }
  const Scalar cp = data.chi(data.y_plus), cm = data.chi(data.y_minus);
  const bool xi_ok = cp == data.xi && cm == data.xi;
  report.add("xi = chi(y+) = chi(y-)", xi_ok,
             xi_ok ? "" : "ξ mismatch: chi(y+) = " + cp.to_string() + ", chi(y-) = " + cm.to_string() + ", xi = " + data.xi.to_string());

  std::string sigma_witness, strange_witness;
  for (std::size_t i = 0; i < R.letters().size(); ++i) {
    const Element g = R.letter(static_cast<int>(i));
    const Element left = winding_left(data.chi, g);
    if (sigma_witness.empty() && data.sigma.images()[i] != left) sigma_witness = R.letters()[i].name;
    if (strange_witness.empty() && left != adjoint_left(data.y_plus, winding_right(data.chi, g)))
      strange_witness = R.letters()[i].name;
  }
  report.add("sigma = tau^l_chi", sigma_witness.empty(), sigma_witness.empty() ? "" : "differs on " + sigma_witness);
  report.add("tau^l_chi = ad_l(y+) tau^r_chi", strange_witness.empty(),
             strange_witness.empty() ? "" : "differs on " + strange_witness);
  report.notes.push_back("conditions quantified over R are verified on generators");
  if (!report.overall) return report;

  auto A = build_hat_form(data, names);
  const CheckReport axioms = verify_hopf_axioms(*A);
  report.merge(axioms, "hopf: ");
  if (axioms.overall) {
    A->mark_hopf_verified();
    add_antipode_notes(report, *A, data);
    report.algebra = A;
  }
  return report;
}

// ---------------------------------------------------------------- relabel

Character character_of_sigma(const Algebra& base, const Automorphism& sigma) {
  std::vector<Scalar> vals;
  for (const auto& im : sigma.images()) vals.push_back(base.counit(im));
  return Character(&base, std::move(vals));
}

namespace {

Element conj_left(const Algebra& R, const Element& g, const Element& a) {  // g a g^-1
  return g * a * R.antipode(g);
}

}  // namespace

RelabelResult relabel(const AmbiskewAlgebra& general) {
  if (!general.coproduct()) throw DomainError("relabel needs a coproduct on X+ and X-");
  const Algebra& R = general.base();
  const auto& cp = *general.coproduct();
  CheckReport report;
  for (const auto& [name, g] : {std::pair<std::string, const Element*>{"l+", &cp.l_plus}, {"l-", &cp.l_minus},
                                {"r+", &cp.r_plus}, {"r-", &cp.r_minus}}) {
    if (!R.inverse_of_grouplike(*g)) throw DomainError(name + " = " + g->to_string() + " is not an invertible grouplike");
  }
  const Element rr = cp.r_plus * cp.r_minus, ll = cp.l_plus * cp.l_minus;
  report.add("r+*r- = r-*r+", rr == cp.r_minus * cp.r_plus);
  report.add("l+*l- = l-*l+", ll == cp.l_minus * cp.l_plus);
  report.add("r+*r- central", R.is_central(rr));
  report.add("l+*l- central", R.is_central(ll));
  const Tensor dh = R.delta(general.h());
  const Tensor want = Tensor::pure({general.h(), rr}) + Tensor::pure({ll, general.h()});
  report.add("Delta(h) = h (x) r+r- + l+l- (x) h", dh == want, dh == want ? "" : difference(dh, want));

  const Character chi = character_of_sigma(R, general.sigma());
  const auto bad = chi.violated_relation();
  report.add("epsilon o sigma is a character", !bad, bad ? *bad : "");
  std::string w_plus, w_minus;
  for (std::size_t i = 0; i < R.letters().size(); ++i) {
    const Element g = R.letter(static_cast<int>(i));
    const Element s = general.sigma().apply(g);
    const Element tl = winding_left(chi, g), tr = winding_right(chi, g);
    if (w_plus.empty() && (s != adjoint_left(cp.l_plus, tr) || s != adjoint_left(cp.r_plus, tl))) w_plus = R.letters()[i].name;
    if (w_minus.empty() && (s != adjoint_right(cp.l_minus, tr) || s != adjoint_right(cp.r_minus, tl)))
      w_minus = R.letters()[i].name;
  }
  report.add("sigma = ad_l(l+) tau^r_chi = ad_l(r+) tau^l_chi", w_plus.empty(), w_plus.empty() ? "" : "differs on " + w_plus);
  report.add("sigma = ad_r(l-) tau^r_chi = ad_r(r-) tau^l_chi", w_minus.empty(), w_minus.empty() ? "" : "differs on " + w_minus);
  const std::vector<Element> B{cp.l_plus, cp.l_minus, cp.r_plus, cp.r_minus};
  bool abelian = true, eigen = true;
  for (const auto& a : B) {
    for (const auto& b : B) abelian = abelian && a * b == b * a;
    eigen = eigen && general.sigma().apply(a) == a.scaled(chi(a));
  }
  report.add("<l+-, r+-> abelian", abelian);
  report.add("sigma(g) = chi(g) g on <l+-, r+->", eigen);
  const Scalar x1 = chi(cp.l_minus * cp.r_plus), x2 = chi(cp.l_plus * cp.r_minus);
  const bool xi_ok = x1 == general.xi() && x2 == general.xi();
  report.add("xi = chi(l- r+) = chi(l+ r-)", xi_ok,
             xi_ok ? "" : "chi(l- r+) = " + x1.to_string() + ", chi(l+ r-) = " + x2.to_string());
  if (!report.overall) throw DomainError("relabel precondition failed: " + report.first_failure());

  const Element rp_inv = R.antipode(cp.r_plus), rm_inv = R.antipode(cp.r_minus);
  const Scalar xi_hat = general.xi() / chi(rr);
  const Element h_hat = (general.h() * R.antipode(rr)).scaled(chi(cp.r_plus).inverse());
  const Element y_plus = cp.l_plus * rp_inv, y_minus = cp.l_minus * rm_inv;

  RelabelResult result;
  result.data = make_extension_data(general.base_ptr(), chi, y_plus, y_minus, h_hat, xi_hat);
  // sigma-hat = ad_r(r+) o sigma must coincide with tau^l_chi.
  std::string hat_witness;
  for (std::size_t i = 0; i < R.letters().size(); ++i) {
    const Element g = R.letter(static_cast<int>(i));
    const Element sh = adjoint_right(cp.r_plus, general.sigma().apply(g));
    if (hat_witness.empty() && sh != result.data.sigma.images()[i]) hat_witness = R.letters()[i].name;
  }
  report.add("ad_r(r+) o sigma = tau^l_chi", hat_witness.empty(), hat_witness.empty() ? "" : "differs on " + hat_witness);

  // Postconditions inside the general algebra.
  const Element xp = general.x_plus() * general.embed_base(rp_inv);
  const Element xm = general.x_minus() * general.embed_base(rm_inv);
  const Element rel = xp * xm - (xm * xp).scaled(xi_hat);
  result.xi_hat_witness = rel;
  const Element hh = general.embed_base(h_hat);
  report.add("Xh+ Xh- = h-hat + xi-hat Xh- Xh+", rel == hh, rel == hh ? "" : difference(rel, hh));
  std::string comm_witness;
  for (std::size_t i = 0; i < R.letters().size(); ++i) {
    const Element g = R.letter(static_cast<int>(i));
    const Element lhs = xp * general.embed_base(g);
    const Element rhs = general.embed_base(result.data.sigma.apply(g)) * xp;
    const Element lhs2 = xm * general.embed_base(g);
    const Element rhs2 = general.embed_base(result.data.sigma.apply_inverse(g)) * xm;
    if (comm_witness.empty() && (lhs != rhs || lhs2 != rhs2)) comm_witness = R.letters()[i].name;
  }
  report.add("Xh+- r = sigma-hat^(+-1)(r) Xh+-", comm_witness.empty(), comm_witness.empty() ? "" : "differs on " + comm_witness);
  if (general.has_coproduct() && R.has_coproduct()) {
    for (const bool plus : {true, false}) {
      const Element& x = plus ? xp : xm;
      const Element y = general.embed_base(plus ? y_plus : y_minus);
      const Tensor d = general.delta(x);
      const Tensor expect = Tensor::pure({x, general.one()}) + Tensor::pure({y, x});
      report.add(std::string("Delta(Xh") + (plus ? "+" : "-") + ") hat form", d == expect, d == expect ? "" : difference(d, expect));
    }
  }
  if (!report.overall) throw InvariantBreach("relabel postcondition failed: " + report.first_failure());

  CheckReport check = check_main_theorem(result.data);
  report.merge(check, "hat: ");
  result.algebra = check.algebra;
  result.report = report;
  return result;
}

std::shared_ptr<AmbiskewAlgebra> to_general_form(const ExtensionData& hat, const Element& r_plus, const Element& r_minus,
                                                 const AmbiskewNames& names) {
  const Algebra& R = *hat.base;
  const auto rp_inv = R.inverse_of_grouplike(r_plus);
  if (!rp_inv || !R.inverse_of_grouplike(r_minus)) throw DomainError("r+- must be invertible grouplikes");
  // X+ = Xh+ r+ gives sigma = sigma-hat o ad_l(r+).
  std::vector<Element> ims, inv_ims;
  for (std::size_t i = 0; i < R.letters().size(); ++i) {
    const Element g = R.letter(static_cast<int>(i));
    ims.push_back(hat.sigma.apply(conj_left(R, r_plus, g)));
    inv_ims.push_back(conj_left(R, *rp_inv, hat.sigma.apply_inverse(g)));
  }
  AmbiskewParams p;
  p.base = hat.base;
  p.sigma = Automorphism(&R, ims, inv_ims);
  p.xi = hat.xi * hat.chi(r_plus * r_minus);
  p.h = (hat.h * r_plus * r_minus).scaled(hat.chi(r_plus));
  p.coproduct = CoproductData{hat.y_plus * r_plus, hat.y_minus * r_minus, r_plus, r_minus};
  p.x_plus_name = names.x_plus;
  p.x_minus_name = names.x_minus;
  p.family = names.family;
  return std::make_shared<AmbiskewAlgebra>(std::move(p));
}

// ---------------------------------------------------------------- trichotomy

std::set<std::string> classify_trichotomy(const ExtensionData& data) {
  const Algebra& R = *data.base;
  const Scalar chi_h = data.chi(data.h);
  const Scalar xi2m1 = data.xi * data.xi - R.field().one();
  const Element zm1 = data.z - R.one();
  if (data.h.scaled(xi2m1) != zm1.scaled(chi_h))
    throw InvariantBreach("(xi^2 - 1) h = chi(h)(z - 1) fails for h = " + data.h.to_string());
  std::set<std::string> cases;
  if (xi2m1.is_zero()) {
    if (chi_h.is_zero()) cases.insert("i");
    if (data.z == R.one()) cases.insert("ii");
  } else if (data.h == zm1.scaled(chi_h / xi2m1)) {
    cases.insert("iii");
  }
  if (cases.empty()) throw InvariantBreach("no trichotomy case applies");
  return cases;
}

std::string format_cases(const std::set<std::string>& cases) {
  std::string out = "{";
  // i < ii < iii in set order already.
  bool first = true;
  for (const auto& c : cases) {
    out += (first ? "" : ", ") + c;
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------- fast paths

CheckReport fast_path_check(const ExtensionData& data) {
  const Algebra& R = *data.base;
  const Descriptor desc = R.descriptor();
  if (!desc.commutative && !desc.cocommutative)
    throw DomainError("fast path needs a commutative or cocommutative base; use the full checker");
  CheckReport report;
  const auto bad = data.chi.violated_relation();
  report.add("chi is a character", !bad, bad ? *bad : "");
  const bool yp = R.is_grouplike(data.y_plus), ym = R.is_grouplike(data.y_minus);
  report.add("y+ grouplike", yp);
  report.add("y- grouplike", ym);
  report.add("z = y+*y-", data.z == data.y_plus * data.y_minus);
  const Scalar cp = data.chi(data.y_plus), cm = data.chi(data.y_minus);
  report.add("xi = chi(y+) = chi(y-)", cp == data.xi && cm == data.xi,
             cp == data.xi && cm == data.xi ? "" : "ξ mismatch: chi(y+) = " + cp.to_string() + ", chi(y-) = " + cm.to_string());
  if (desc.commutative) {
    std::string w;
    for (std::size_t i = 0; i < R.letters().size(); ++i) {
      const Element g = R.letter(static_cast<int>(i));
      if (w.empty() && winding_left(data.chi, g) != winding_right(data.chi, g)) w = R.letters()[i].name;
    }
    report.add("tau^l_chi = tau^r_chi", w.empty(), w.empty() ? "" : "differs on " + w);
    const Tensor dh = R.delta(data.h);
    const Tensor skew = Tensor::pure({data.h, R.one()}) + Tensor::pure({data.z, data.h});
    report.add("h in P(1,z)", dh == skew);
  }
  if (desc.cocommutative) {
    report.add("y+ central", R.is_central(data.y_plus));
    report.add("y- central", R.is_central(data.y_minus));
    const bool zg = R.is_grouplike(data.z);
    report.add("z grouplike", zg);
    // h in k(z - 1) with z grouplike, or h primitive with z = 1.
    const Element zm1 = data.z - R.one();
    bool in_line = data.h.is_zero();
    if (!in_line && zg && !zm1.is_zero()) {
      const auto& [m, c] = *zm1.terms().begin();
      in_line = data.h == zm1.scaled(data.h.coefficient(m) / c);
    }
    if (in_line) {
      report.add("h in k(z-1)", true);
    } else {
      const Tensor dh = R.delta(data.h);
      const bool primitive = dh == Tensor::pure({data.h, R.one()}) + Tensor::pure({R.one(), data.h});
      report.add("h in k(z-1) or h primitive", primitive);
      if (primitive) {
        report.add("z = 1 required when h primitive", data.z == R.one(), data.z.to_string());
        report.add("xi = +-1 when h primitive", (data.xi * data.xi).is_one(), data.xi.to_string());
      }
    }
  }
  return report;
}

}  // namespace abhk
