#include "luxdec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "luxdec/errors.hpp"

namespace luxdec {

namespace {

void require_same_kind(const Histogram& p, const Histogram& q, const char* op) {
  if (p.kind() != q.kind()) {
    throw ValidationError(std::string(op) + ": histogram kinds differ (" + to_string(p.kind()) +
                          " vs " + to_string(q.kind()) + ")");
  }
}

std::vector<double> smoothed(const Histogram& h) {
  const auto& bins = h.bins();
  const double norm = 1.0 + kSmoothEps * static_cast<double>(bins.size());
  std::vector<double> out(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) out[i] = (bins[i] + kSmoothEps) / norm;
  return out;
}

double kl_raw(const std::vector<double>& p, const std::vector<double>& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) sum += p[i] * std::log(p[i] / q[i]);
  }
  return sum;
}

}  // namespace

double l1_distance(const Histogram& p, const Histogram& q) {
  require_same_kind(p, q, "l1_distance");
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return sum;
}

double wasserstein_1d(const Histogram& p, const Histogram& q, bool circular) {
  require_same_kind(p, q, "wasserstein_1d");
  const int n = p.size();
  std::vector<double> diff(static_cast<std::size_t>(n));
  double cp = 0.0, cq = 0.0;
  for (int i = 0; i < n; ++i) {
    cp += p[i];
    cq += q[i];
    diff[static_cast<std::size_t>(i)] = cp - cq;
  }
  if (!circular) {
    double sum = 0.0;
    for (double d : diff) sum += std::abs(d);
    return sum / n;
  }
  // Minimal cyclic transport: shift the CDF difference by its median.
  std::vector<double> sorted = diff;
  std::sort(sorted.begin(), sorted.end());
  const double shift = sorted[static_cast<std::size_t>(n / 2)];
  double sum = 0.0;
  for (double d : diff) sum += std::abs(d - shift);
  return sum / n;
}

double kl_divergence(const Histogram& p, const Histogram& q) {
  require_same_kind(p, q, "kl_divergence");
  return kl_raw(smoothed(p), smoothed(q));
}

double js_divergence(const Histogram& p, const Histogram& q) {
  require_same_kind(p, q, "js_divergence");
  const auto ps = smoothed(p);
  const auto qs = smoothed(q);
  std::vector<double> m(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) m[i] = 0.5 * (ps[i] + qs[i]);
  return 0.5 * kl_raw(ps, m) + 0.5 * kl_raw(qs, m);
}

double bhattacharyya(const Histogram& p, const Histogram& q) {
  require_same_kind(p, q, "bhattacharyya");
  const auto ps = smoothed(p);
  const auto qs = smoothed(q);
  double coeff = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) coeff += std::sqrt(ps[i] * qs[i]);
  // Clamp against rounding slightly above 1 for identical inputs.
  return -std::log(std::min(coeff, 1.0));
}

double cosine_similarity(const Histogram& p, const Histogram& q) {
  require_same_kind(p, q, "cosine_similarity");
  double dot = 0.0, np = 0.0, nq = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    dot += p[i] * q[i];
    np += p[i] * p[i];
    nq += q[i] * q[i];
  }
  if (np <= 0.0 || nq <= 0.0) throw ValidationError("cosine_similarity: zero vector");
  return std::min(dot / (std::sqrt(np) * std::sqrt(nq)), 1.0);
}

double hue_distance(double x, double y) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double d = std::abs(x - y);
  return std::min(d, two_pi - d);
}

double value_distance(double x, double y) {
  return std::abs(x - y);
}

}  // namespace luxdec
