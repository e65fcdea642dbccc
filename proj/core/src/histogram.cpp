#include "luxdec/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "luxdec/errors.hpp"

namespace luxdec {

const char* to_string(HistKind kind) {
  return kind == HistKind::Hue ? "hue" : "value";
}

HistKind hist_kind_from_string(const std::string& name) {
  if (name == "hue") return HistKind::Hue;
  if (name == "value") return HistKind::Value;
  throw ValidationError("unknown histogram kind: '" + name + "'");
}

Histogram::Histogram(HistKind kind, std::vector<double> bins)
    : kind_(kind), bins_(std::move(bins)) {
  const int expected = bin_count(kind);
  if (static_cast<int>(bins_.size()) != expected) {
    throw ValidationError("histogram bin count " + std::to_string(bins_.size()) +
                          " does not match kind '" + to_string(kind) + "' (" +
                          std::to_string(expected) + ")");
  }
  double total = 0.0;
  for (double b : bins_) {
    if (!(b >= 0.0)) throw ValidationError("histogram bins must be non-negative and finite");
    total += b;
  }
  if (total <= 0.0) throw ValidationError("histogram has zero total mass");
  if (std::abs(total - 1.0) > 1e-9) {
    for (double& b : bins_) b /= total;
  }
}

Histogram Histogram::delta(HistKind kind, int bin) {
  std::vector<double> bins(static_cast<std::size_t>(bin_count(kind)), 0.0);
  if (bin < 0 || bin >= bin_count(kind)) throw ValidationError("delta bin out of range");
  bins[static_cast<std::size_t>(bin)] = 1.0;
  return Histogram(kind, std::move(bins));
}

Histogram Histogram::uniform(HistKind kind) {
  const int n = bin_count(kind);
  return Histogram(kind, std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

double wrap_angle(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double x = std::fmod(radians, two_pi);
  if (x < 0.0) x += two_pi;
  if (x >= two_pi) x = 0.0;
  return x;
}

ScalarHV::ScalarHV(double h, double v)
    : hue(wrap_angle(h)), value(std::clamp(v, 0.0, 1.0)) {}

}  // namespace luxdec
