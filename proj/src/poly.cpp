#include "abhk/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "abhk/errors.hpp"

namespace abhk::poly {

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  if (sgn(c) == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly shift(const ZPoly& a, int k) {
  if (a.empty()) return {};
  ZPoly r(static_cast<std::size_t>(k), mpz_class(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  remainder = a;
  trim(remainder);
  quotient.clear();
  if (remainder.size() < b.size()) return;
  quotient.assign(remainder.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead_inv = 1 / b.back();
  while (!remainder.empty() && remainder.size() >= b.size()) {
    const std::size_t shift_by = remainder.size() - b.size();
    const mpq_class c = remainder.back() * lead_inv;
    quotient[shift_by] = c;
    for (std::size_t i = 0; i < b.size(); ++i) remainder[i + shift_by] -= c * b[i];
    remainder.pop_back();  // leading term cancels exactly
    trim(remainder);
  }
  trim(quotient);
}

QPoly mod(const QPoly& a, const QPoly& m) {
  QPoly q, r;
  divmod(a, m, q, r);
  return r;
}

namespace {
void make_monic(QPoly& p) {
  if (p.empty()) return;
  const mpq_class inv = 1 / p.back();
  for (auto& x : p) x *= inv;
}
}  // namespace

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the cofactor of a.
  QPoly r0 = m, r1 = mod(a, m);
  QPoly s0, s1 = {mpq_class(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return {};
  return mod(scale(s0, 1 / r0[0]), m);
}

namespace {

const ZPoly& cyclotomic_locked(int n, std::map<int, ZPoly>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  QPoly p(static_cast<std::size_t>(n) + 1, mpq_class(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly q, r;
    divmod(p, to_q(cyclotomic_locked(d, cache)), q, r);
    if (!r.empty()) throw InvariantBreach("inexact cyclotomic division");
    p = std::move(q);
  }
  ZPoly z;
  for (auto& c : p) z.push_back(c.get_num());
  return cache.emplace(n, std::move(z)).first->second;
}

}  // namespace

const ZPoly& cyclotomic(int n) {
  if (n < 1) throw DomainError("cyclotomic polynomial needs n >= 1");
  static std::mutex mutex;
  static std::map<int, ZPoly> cache;  // node-based: references stay valid
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_locked(n, cache);
}

QPoly to_q(const ZPoly& p) {
  QPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

void to_primitive_pair(const QPoly& num, const QPoly& den, ZPoly& znum, ZPoly& zden) {
  mpz_class l = 1;
  for (const auto& c : num) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : den) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  znum.clear();
  zden.clear();
  mpz_class g = 0;
  for (const auto& c : num) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    znum.push_back(v);
  }
  for (const auto& c : den) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    zden.push_back(v);
  }
  if (!zden.empty() && sgn(zden.back()) < 0) g = -g;
  if (g != 0 && g != 1) {
    for (auto& c : znum) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : zden) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

template <class Coeff>
std::string render(const std::vector<Coeff>& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Coeff& c = p[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    Coeff a = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (a == 1);
    if (k == 0) {
      out << a.get_str();
    } else {
      if (!unit) out << a.get_str() << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  if (first) return "0";
  return out.str();
}

template <class Coeff>
std::size_t count_terms(const std::vector<Coeff>& p) {
  std::size_t n = 0;
  for (const auto& c : p)
    if (sgn(c) != 0) ++n;
  return n;
}

}  // namespace

std::string to_string(const QPoly& p, const std::string& var) { return render(p, var); }
std::string to_string(const ZPoly& p, const std::string& var) { return render(p, var); }
std::size_t term_count(const ZPoly& p) { return count_terms(p); }
std::size_t term_count(const QPoly& p) { return count_terms(p); }

}  // namespace abhk::poly
