#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace univgate {

/// A reduced fraction p/q with q > 0. Angles are stored as a, meaning aπ.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t p, std::int64_t q = 1);

  double value() const { return static_cast<double>(num) / den; }
  long double value_ld() const {
    return static_cast<long double>(num) / den;
  }
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);

/// Representative in [0, 2), i.e. the angle aπ reduced mod 2π.
Rational mod_two(const Rational& a);

/// Order of U(aπ, k) in SU(2): smallest n > 0 with n·a even.
std::int64_t su2_order(const Rational& a);

/// Best rational approximation p/q of x with q ≤ max_den (continued
/// fractions), accepted when |x − p/q| ≤ tol.
std::optional<Rational> rationalize(double x, std::int64_t max_den,
                                    double tol);

}  // namespace univgate
