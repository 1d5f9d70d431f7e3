#include "univgate/rational.h"

#include <cmath>
#include <numeric>

#include "univgate/errors.h"

namespace univgate {

Rational::Rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw Error(ErrorCode::kBadArgument, "zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  num = p / g;
  den = q / g;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

Rational mod_two(const Rational& a) {
  const std::int64_t period = 2 * a.den;
  std::int64_t p = a.num % period;
  if (p < 0) p += period;
  return Rational(p, a.den);
}

std::int64_t su2_order(const Rational& a) {
  return a.num % 2 == 0 ? a.den : 2 * a.den;
}

std::optional<Rational> rationalize(double x, std::int64_t max_den,
                                    double tol) {
  // Convergents h/k of the continued fraction of x.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(r);
    if (std::abs(fl) > 1e15) break;
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / k1) <= tol) {
      return Rational(h1, k1);
    }
    const double frac = r - fl;
    if (frac < 1e-300) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace univgate
