#include "luxdec/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "luxdec/errors.hpp"

namespace luxdec {

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

Rng Rng::split(std::uint64_t tag) const {
  std::uint64_t sm = s_[0] ^ rotl(s_[2], 17) ^ (tag * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
  Rng child(0);
  for (auto& word : child.s_) word = splitmix64(sm);
  return child;
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  if (n == 0) throw ValidationError("uniform_index: n must be positive");
  // Rejection to remove modulo bias.
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return x % n;
}

double Rng::normal() {
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double r2 = u * u + v * v;
    if (r2 > 0.0 && r2 < 1.0) {
      return u * std::sqrt(-2.0 * std::log(r2) / r2);
    }
  }
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw ValidationError("gamma: shape must be positive");
  if (shape < 1.0) {
    // Boost via Gamma(shape+1) * U^{1/shape}.
    const double g = gamma(shape + 1.0);
    const double u = uniform();
    return g * std::pow(u > 0.0 ? u : 0x1.0p-53, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::beta(double alpha, double beta) {
  const double x = gamma(alpha);
  const double y = gamma(beta);
  const double s = x + y;
  if (s <= 0.0) return 0.5;
  return x / s;
}

double Rng::von_mises(double mu, double kappa) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (kappa < 1e-8) {
    return uniform(0.0, two_pi);
  }
  // Best & Fisher (1979) wrapped-Cauchy envelope rejection.
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
  const double r = (1.0 + rho * rho) / (2.0 * rho);
  double f = 0.0;
  for (;;) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double z = std::cos(std::numbers::pi * u1);
    f = (1.0 + r * z) / (r + z);
    const double c = kappa * (r - f);
    if (c * (2.0 - c) - u2 > 0.0) break;
    if (u2 > 0.0 && std::log(c / u2) + 1.0 - c >= 0.0) break;
  }
  const double u3 = uniform();
  const double angle = (u3 - 0.5 >= 0.0 ? 1.0 : -1.0) * std::acos(f);
  double x = mu + angle;
  x = std::fmod(x, two_pi);
  if (x < 0.0) x += two_pi;
  if (x >= two_pi) x = 0.0;
  return x;
}

std::string Rng::serialize() const {
  std::ostringstream out;
  out << s_[0] << ' ' << s_[1] << ' ' << s_[2] << ' ' << s_[3];
  return out.str();
}

Rng Rng::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::array<std::uint64_t, 4> s{};
  for (auto& word : s) {
    if (!(in >> word)) throw ValidationError("Rng::deserialize: malformed state string");
  }
  Rng rng(0);
  rng.set_state(s);
  return rng;
}

}  // namespace luxdec
