#include "abhk/qcomb.hpp"

#include <map>
#include <mutex>

#include "abhk/errors.hpp"

namespace abhk {

Scalar q_int(unsigned n, const Scalar& x) {
  Scalar sum = x.field().zero();
  Scalar power = x.field().one();
  for (unsigned k = 0; k < n; ++k) {
    sum += power;
    power *= x;
  }
  return sum;
}

Scalar q_factorial(unsigned n, const Scalar& x) {
  Scalar prod = x.field().one();
  for (unsigned k = 1; k <= n; ++k) prod *= q_int(k, x);
  return prod;
}

namespace {

const poly::ZPoly& binom_locked(unsigned n, unsigned i, std::map<std::pair<unsigned, unsigned>, poly::ZPoly>& cache) {
  auto key = std::make_pair(n, i);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  poly::ZPoly value;
  if (i == 0 || i == n) {
    value = {mpz_class(1)};
  } else {
    const poly::ZPoly& a = binom_locked(n - 1, i - 1, cache);
    const poly::ZPoly& b = binom_locked(n - 1, i, cache);
    value = poly::add(a, poly::shift(b, static_cast<int>(i)));
  }
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

const poly::ZPoly& q_binomial_poly(unsigned n, unsigned i) {
  if (i > n) throw DomainError("q_binomial: i > n");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, poly::ZPoly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  return binom_locked(n, i, cache);
}

Scalar evaluate(const poly::ZPoly& p, const Scalar& x) {
  const Field f = x.field();
  Scalar acc = f.zero();
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * x + f.from_rational(mpq_class(p[k]));
  }
  return acc;
}

Scalar q_binomial(unsigned n, unsigned i, const Scalar& x) { return evaluate(q_binomial_poly(n, i), x); }

HatProfile hat(std::uint64_t m, Order d) {
  HatProfile h;
  h.d = d;
  if (d.is_finite() && d.value() > 1) {
    h.q = m / d.value();
    h.r = m % d.value();
  } else {
    h.q = m;
    h.r = 0;
  }
  h.hat = h.q + h.r;
  return h;
}

bool prec(std::uint64_t p, std::uint64_t m, Order d) {
  const HatProfile a = hat(p, d), b = hat(m, d);
  return a.q <= b.q && a.r <= b.r;
}

}  // namespace abhk
