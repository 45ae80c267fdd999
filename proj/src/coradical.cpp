#include "abhk/coradical.hpp"

#include <algorithm>

#include "abhk/errors.hpp"

namespace abhk {

CoradicalContext coradical_context(const AmbiskewAlgebra& A) { return CoradicalContext{mul_order(A.xi())}; }

std::vector<CoradicalTerm> corad_breakdown(const AmbiskewAlgebra& A, const Element& a) {
  if (!A.hopf_verified()) throw NotHopfError("coradical degree needs a verified Hopf algebra");
  if (!A.hat_form()) throw DomainError("coradical degree is computed in hat form");
  if (a.algebra() != &A) throw AlgebraMismatch("element does not belong to this algebra");
  const CoradicalContext ctx = coradical_context(A);
  std::vector<CoradicalTerm> out;
  const std::size_t b = A.base().monomial_size();
  for (const auto& [mono, c] : a.terms()) {
    CoradicalTerm t;
    t.monomial = mono;
    t.m = mono[b];
    t.n = mono[b + 1];
    t.base_degree = A.base().monomial_coradical_degree(A.base_part(mono));
    t.hat_m = static_cast<int>(hat(static_cast<std::uint64_t>(t.m), ctx.d).hat);
    t.hat_n = static_cast<int>(hat(static_cast<std::uint64_t>(t.n), ctx.d).hat);
    out.push_back(t);
  }
  return out;
}

int corad_degree(const AmbiskewAlgebra& A, const Element& a) {
  if (a.is_zero()) throw DomainError("coradical degree of zero is undefined");
  int best = 0;
  for (const auto& t : corad_breakdown(A, a)) best = std::max(best, t.total());
  return best;
}

namespace {

const CoproductData& hat_data(const AmbiskewAlgebra& A) {
  if (!A.hopf_verified()) throw NotHopfError("closed-form coproducts need a verified Hopf algebra");
  if (!A.hat_form()) throw DomainError("closed-form coproducts are stated in hat form");
  return *A.coproduct();
}

Element power(const Algebra& R, const Element& g, int k) {
  Element out = R.one();
  for (int i = 0; i < k; ++i) out = out * g;
  return out;
}

}  // namespace

Tensor delta_power_closed(const AmbiskewAlgebra& A, bool plus, int m) {
  const CoproductData& cp = hat_data(A);
  const Algebra& R = A.base();
  const Element& y = plus ? cp.l_plus : cp.l_minus;
  const Scalar x = plus ? A.xi() : A.xi().inverse();
  Tensor out(&A, 2);
  for (int j = 0; j <= m; ++j) {
    const Scalar c = q_binomial(static_cast<unsigned>(m), static_cast<unsigned>(j), x);
    if (c.is_zero()) continue;
    const Element left = plus ? A.make(power(R, y, m - j), j, 0) : A.make(power(R, y, m - j), 0, j);
    const Element right = plus ? A.make(R.one(), m - j, 0) : A.make(R.one(), 0, m - j);
    out += Tensor::pure({left, right}).scaled(c);
  }
  return out;
}

Tensor delta_mixed_closed(const AmbiskewAlgebra& A, int m, int n) {
  const CoproductData& cp = hat_data(A);
  const Algebra& R = A.base();
  const Scalar xi = A.xi(), xi_inv = A.xi().inverse();
  Tensor out(&A, 2);
  for (int j = 0; j <= m; ++j) {
    const Scalar bj = q_binomial(static_cast<unsigned>(m), static_cast<unsigned>(j), xi);
    if (bj.is_zero()) continue;
    for (int k = 0; k <= n; ++k) {
      const Scalar bk = q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k), xi_inv);
      if (bk.is_zero()) continue;
      const Scalar c = bj * bk * xi.pow(static_cast<long>(j) * (n - k));
      const Element g = power(R, cp.l_plus, m - j) * power(R, cp.l_minus, n - k);
      out += Tensor::pure({A.make(g, j, k), A.make(R.one(), m - j, n - k)}).scaled(c);
    }
  }
  return out;
}

std::vector<SupportEntry> sparse_support(std::uint64_t m, const Scalar& x) {
  const Order d = mul_order(x);
  const HatProfile hm = hat(m, d);
  std::vector<SupportEntry> out;
  for (std::uint64_t p = 0; p <= m; ++p) {
    if (!prec(p, m, d)) continue;
    Scalar alpha = x.field().one();
    if (d.is_finite() && d.value() > 1) {
      const HatProfile hp = hat(p, d);
      alpha = q_binomial(static_cast<unsigned>(hm.q), static_cast<unsigned>(hp.q), x.field().one()) *
              q_binomial(static_cast<unsigned>(hm.r), static_cast<unsigned>(hp.r), x);
    } else {
      alpha = q_binomial(static_cast<unsigned>(m), static_cast<unsigned>(p), x);
    }
    if (alpha.is_zero()) throw InvariantBreach("vanishing coefficient at p = " + std::to_string(p));
    if (alpha != q_binomial(static_cast<unsigned>(m), static_cast<unsigned>(p), x))
      throw InvariantBreach("coefficient mismatch at p = " + std::to_string(p));
    out.push_back(SupportEntry{p, alpha});
  }
  return out;
}

}  // namespace abhk
