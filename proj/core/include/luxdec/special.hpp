#pragma once

namespace luxdec {

/// Modified Bessel function of the first kind, order zero.
/// Power series below the asymptotic crossover; overflows to inf near x ~ 713.
double bessel_i0(double x);

/// log I0(x), finite for arbitrarily large x.
double log_bessel_i0(double x);

/// I1(x)/I0(x), the derivative of log I0. Maps [0, inf) onto [0, 1).
double bessel_i1_over_i0(double x);

/// log Gamma(x) for x > 0 (Lanczos approximation).
double log_gamma(double x);

/// Digamma psi(x) for x > 0 (recurrence + asymptotic series).
double digamma(double x);

}  // namespace luxdec
