#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace luxdec {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ generator with self-contained sampling routines.
///
/// We own the whole sampling stack (no std::*_distribution) so that streams
/// are byte-reproducible across standard-library versions and can be
/// serialized into checkpoints.
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(std::uint64_t seed);

  /// Independent child stream; `tag` separates streams derived from one seed.
  Rng split(std::uint64_t tag) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal via polar rejection (no cached spare, keeps state minimal).
  double normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang.
  double gamma(double shape);
  /// Beta(alpha, beta) via the gamma ratio.
  double beta(double alpha, double beta);
  /// Von Mises on [0, 2pi) via the Best-Fisher rejection algorithm.
  double von_mises(double mu, double kappa);

  std::array<std::uint64_t, 4> state() const { return s_; }
  void set_state(const std::array<std::uint64_t, 4>& s) { s_ = s; }

  std::string serialize() const;
  static Rng deserialize(const std::string& text);

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace luxdec
