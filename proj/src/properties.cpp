#include "abhk/properties.hpp"

#include <numeric>
#include <set>

#include "abhk/errors.hpp"

namespace abhk {

std::string SigmaOrder::to_string() const {
  if (order.is_finite()) return order.to_string();
  if (structural) return "infinite";
  return "order > " + std::to_string(bound);
}

namespace {

/// sigma(g) = g + c with c a nonzero scalar, for the single letter of k[t].
bool is_translation(const AmbiskewAlgebra& A) {
  const Algebra& R = A.base();
  if (R.descriptor().family != "polynomial") return false;
  const Element t = R.letter(0);
  const Element diff = A.sigma().apply(t) - t;
  return !diff.is_zero() && diff.terms().size() == 1 && diff.terms().begin()->first == R.identity_monomial();
}

}  // namespace

SigmaOrder sigma_order(const AmbiskewAlgebra& A, int n_max) {
  SigmaOrder out;
  out.bound = n_max;
  if (is_translation(A)) {
    out.structural = true;
    return out;
  }
  const Algebra& R = A.base();
  std::vector<Element> gens, cur;
  for (std::size_t i = 0; i < R.letters().size(); ++i) gens.push_back(R.letter(static_cast<int>(i)));
  // sigma(x) = c x with c of infinite multiplicative order: no period exists.
  for (const Element& x : gens) {
    const Element s = A.sigma().apply(x);
    if (s.terms().size() != 1 || x.terms().size() != 1) continue;
    if (s.terms().begin()->first != x.terms().begin()->first) continue;
    const Scalar c = s.terms().begin()->second / x.terms().begin()->second;
    if (mul_order(c).is_infinite()) {
      out.structural = true;
      return out;
    }
  }
  cur = gens;
  for (int k = 1; k <= n_max; ++k) {
    bool identity = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] = A.sigma().apply(cur[i]);
      identity = identity && cur[i] == gens[i];
    }
    if (identity) {
      out.order = Order::finite(static_cast<std::uint64_t>(k));
      return out;
    }
  }
  out.exceeded_bound = true;
  return out;
}

GkReport gk_report(const AmbiskewAlgebra& A, int dimension_bound) {
  GkReport r;
  const Dim base = A.base().descriptor().gk_dim;
  if (A.hopf_verified()) {
    r.locally_finite = true;
    r.reason = "sigma is a winding automorphism";
  } else {
    // Monomial closure of each letter under sigma must stay finite.
    const Algebra& R = A.base();
    r.locally_finite = true;
    for (std::size_t i = 0; i < R.letters().size() && r.locally_finite; ++i) {
      std::set<Monomial> seen;
      std::vector<Monomial> todo{R.letter_monomial(static_cast<int>(i))};
      while (!todo.empty() && r.locally_finite) {
        const Monomial m = todo.back();
        todo.pop_back();
        if (!seen.insert(m).second) continue;
        if (static_cast<int>(seen.size()) > dimension_bound) r.locally_finite = false;
        for (const auto& [mm, c] : A.sigma().apply(R.monomial(m)).terms())
          if (!seen.count(mm)) todo.push_back(mm);
      }
    }
    r.reason = r.locally_finite ? "sigma-invariant monomial span found for every generator"
                                : "no sigma-invariant span within dimension " + std::to_string(dimension_bound);
  }
  r.value = r.locally_finite ? base.plus(2) : Dim::unknown();
  return r;
}

DimBounds dim_bounds(const AmbiskewAlgebra& A) {
  const Descriptor b = A.base().descriptor();
  DimBounds d;
  if (b.gl_dim.is_finite()) {
    d.gl_lower = b.gl_dim.plus(1);
    d.gl_upper = b.gl_dim.plus(2);
    if (A.hopf_verified()) {
      d.gl_lower = d.gl_upper;
      d.gl_exact = true;
    }
  }
  if (b.inj_dim.is_finite()) {
    d.inj_lower = b.inj_dim.plus(1);
    d.inj_upper = b.inj_dim.plus(2);
    if (A.hopf_verified() && b.as_gorenstein) {
      d.inj_lower = d.inj_upper;
      d.inj_exact = true;
    }
  }
  d.as_gorenstein = A.hopf_verified() && b.as_gorenstein;
  d.as_regular = A.hopf_verified() && b.as_regular;
  return d;
}

std::vector<EigenComponent> eigen_decomposition(const AmbiskewAlgebra& A, const Element& h, const Scalar& eta, std::uint64_t n) {
  const Algebra& R = A.base();
  std::vector<Scalar> powers;
  Scalar p = eta.field().one();
  for (std::uint64_t i = 0; i < n; ++i, p *= eta) powers.push_back(p);
  std::vector<EigenComponent> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(EigenComponent{static_cast<int>(i), R.zero()});
  for (const auto& [m, c] : h.terms()) {
    const Element image = A.sigma().apply(R.monomial(m));
    if (image.terms().size() != 1 || image.terms().begin()->first != m)
      throw DomainError("eigendecomposition unsupported: sigma is not diagonal on " + R.monomial_to_string(m));
    const Scalar lambda = image.terms().begin()->second;
    std::size_t i = 0;
    while (i < powers.size() && powers[i] != lambda) ++i;
    if (i == powers.size()) throw InvariantBreach("eigenvalue " + lambda.to_string() + " is not a power of eta");
    out[i].h_i.add_term(m, c);
  }
  Element sum = R.zero();
  for (const auto& e : out) {
    sum += e.h_i;
    if (A.sigma().apply(e.h_i) != e.h_i.scaled(powers[static_cast<std::size_t>(e.i)]))
      throw InvariantBreach("component " + std::to_string(e.i) + " is not an eigenvector");
  }
  if (sum != h) throw InvariantBreach("eigencomponents do not sum to h");
  return out;
}

PiReport pi_check(const AmbiskewAlgebra& A, int n_max) {
  const Descriptor b = A.base().descriptor();
  if (!b.affine_commutative_domain) throw DomainError("PI criterion needs a commutative affine domain base");
  PiReport r;
  r.n = sigma_order(A, n_max);
  r.t = mul_order(A.xi());
  if (r.n.order.is_infinite() && !r.n.structural) {
    r.reason = "sigma has no period up to " + std::to_string(n_max);
    return r;
  }
  if (r.n.order.is_infinite() || r.t.is_infinite()) {
    r.satisfies_pi = false;
    r.reason = r.n.order.is_infinite() ? "sigma has infinite order" : "xi has infinite order";
    return r;
  }
  const std::uint64_t n = r.n.order.value(), t = r.t.value();
  // Prefer an eigenvalue of sigma on a letter as eta, so that sigma(t) = eta t reads naturally.
  std::optional<Scalar> eta;
  if (auto diag = A.sigma().diagonal_letters())
    for (const Scalar& v : *diag)
      if (!eta && !v.is_zero() && mul_order(v) == Order::finite(n)) eta = v;
  if (!eta) eta = A.field().primitive_root(n);
  if (!eta) throw DomainError("field " + A.field().name() + " has no primitive " + std::to_string(n) + "-th root of unity");
  r.eta = *eta;
  r.decomposition = eigen_decomposition(A, A.h(), *eta, n);
  if (n % t == 0) {
    Scalar p = A.field().one();
    for (std::uint64_t j = 0; j < n; ++j, p *= *eta)
      if (p == A.xi()) r.j = static_cast<int>(j);
    if (!r.j) throw InvariantBreach("xi of order dividing n is not a power of eta");
    const Element& hj = r.decomposition[static_cast<std::size_t>(*r.j)].h_i;
    if (!hj.is_zero()) {
      r.satisfies_pi = false;
      r.obstruction = "h_" + std::to_string(*r.j) + " = " + hj.to_string();
      r.reason = "eigencomponent of h at xi is nonzero";
      return r;
    }
  }
  r.satisfies_pi = true;
  r.m = std::lcm(n, t);
  r.pi_degree = 2 * *r.m * n;
  r.reason = n % t == 0 ? "sigma and xi of finite order, h_j = 0" : "sigma and xi of finite order, t does not divide n";
  return r;
}

FlagsReport flags_report(const AmbiskewAlgebra& A) {
  const Descriptor b = A.base().descriptor();
  FlagsReport f;
  f.noetherian = b.noetherian;
  f.domain = b.domain;
  f.semiprime_goldie = b.semiprime_goldie;
  f.prime = b.prime ? "true (base prime)" : "unknown";
  f.auslander_gorenstein = b.auslander_gorenstein;
  f.auslander_regular = b.auslander_regular;
  return f;
}

namespace {

std::string yes_no(bool v) { return v ? "true" : "false"; }

std::string interval(const Dim& lo, const Dim& hi, bool exact) {
  if (lo.is_unknown() || hi.is_unknown()) return "unknown";
  if (exact) return hi.to_string();
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> property_lines(const AmbiskewAlgebra& A, int n_max) {
  std::vector<std::pair<std::string, std::string>> out;
  const Descriptor base = A.base().descriptor();
  out.emplace_back("family", A.descriptor().family);
  out.emplace_back("base", base.family);
  out.emplace_back("hopf", yes_no(A.hopf_verified()));
  const FlagsReport f = flags_report(A);
  out.emplace_back("noetherian", yes_no(f.noetherian));
  out.emplace_back("domain", yes_no(f.domain));
  out.emplace_back("semiprime_goldie", yes_no(f.semiprime_goldie));
  out.emplace_back("prime", f.prime);
  out.emplace_back("auslander_gorenstein", yes_no(f.auslander_gorenstein));
  out.emplace_back("auslander_regular", yes_no(f.auslander_regular));
  const GkReport gk = gk_report(A);
  out.emplace_back("gk_dim", gk.value.to_string());
  const DimBounds d = dim_bounds(A);
  out.emplace_back("gl_dim", interval(d.gl_lower, d.gl_upper, d.gl_exact));
  out.emplace_back("inj_dim", interval(d.inj_lower, d.inj_upper, d.inj_exact));
  out.emplace_back("as_gorenstein", yes_no(d.as_gorenstein));
  out.emplace_back("as_regular", yes_no(d.as_regular));
  const SigmaOrder so = sigma_order(A, n_max);
  out.emplace_back("sigma_order", so.to_string());
  out.emplace_back("xi_order", mul_order(A.xi()).to_string());
  if (!base.affine_commutative_domain) {
    out.emplace_back("pi", "unsupported (base is not a commutative affine domain)");
    return out;
  }
  try {
    const PiReport pi = pi_check(A, n_max);
    out.emplace_back("pi", pi.satisfies_pi ? yes_no(*pi.satisfies_pi) : "unknown");
    if (pi.m) out.emplace_back("pi_m", std::to_string(*pi.m));
    if (pi.pi_degree) out.emplace_back("pi_degree", std::to_string(*pi.pi_degree));
    if (!pi.obstruction.empty()) out.emplace_back("pi_obstruction", pi.obstruction);
    out.emplace_back("pi_reason", pi.reason);
  } catch (const DomainError& e) {
    out.emplace_back("pi", std::string("unsupported (") + e.what() + ")");
  }
  return out;
}

}  // namespace abhk
