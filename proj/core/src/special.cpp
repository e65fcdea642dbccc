#include "luxdec/special.hpp"

#include <cmath>
#include <numbers>

#include "luxdec/errors.hpp"

namespace luxdec {

namespace {

// Below this the power series reaches machine precision without overflow;
// above it the asymptotic expansions are good to ~1e-13 relative.
constexpr double kBesselCrossover = 80.0;

double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

double i1_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1.0));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return 0.5 * x * sum;
}

double log_i0_asymptotic(double x) {
  const double u = 1.0 / x;
  // e^x / sqrt(2 pi x) * (1 + 1/(8x) + 9/(128x^2) + ...)
  const double corr = 1.0 +
                      u * (0.125 +
                           u * (0.0703125 +
                                u * (0.0732421875 +
                                     u * (0.112152099609375 +
                                          u * (0.22710800170898438 +
                                               u * 0.5725014209747314)))));
  return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(corr);
}

}  // namespace

double bessel_i0(double x) {
  x = std::abs(x);
  if (x < kBesselCrossover) return i0_series(x);
  return std::exp(log_i0_asymptotic(x));
}

double log_bessel_i0(double x) {
  x = std::abs(x);
  if (x < kBesselCrossover) return std::log(i0_series(x));
  return log_i0_asymptotic(x);
}

double bessel_i1_over_i0(double x) {
  if (x < 0.0) throw ValidationError("bessel_i1_over_i0: x must be non-negative");
  if (x == 0.0) return 0.0;
  if (x < kBesselCrossover) return i1_series(x) / i0_series(x);
  const double u = 1.0 / x;
  return 1.0 - u * (0.5 + u * (0.125 + u * (0.125 + u * (0.1953125 + u * 0.40625))));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw ValidationError("log_gamma: x must be positive");
  // Lanczos, g = 7, 9 coefficients.
  static const double coef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps the approximation in its accurate range.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double a = coef[0];
  for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double digamma(double x) {
  if (!(x > 0.0)) throw ValidationError("digamma: x must be positive");
  double result = 0.0;
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
  return result;
}

}  // namespace luxdec
