#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace luxdec {

constexpr int kHueBins = 360;
constexpr int kValueBins = 100;

enum class HistKind { Hue, Value };

const char* to_string(HistKind kind);
HistKind hist_kind_from_string(const std::string& name);

constexpr int bin_count(HistKind kind) {
  return kind == HistKind::Hue ? kHueBins : kValueBins;
}

/// Normalized discrete distribution over hue (360 bins) or value (100 bins).
/// Invariants: every bin >= 0 and the bins sum to 1 within 1e-9.
class Histogram {
 public:
  /// Normalizes `bins`; rejects negative entries, wrong length, or all-zero mass.
  Histogram(HistKind kind, std::vector<double> bins);

  static Histogram hue(std::vector<double> bins) { return Histogram(HistKind::Hue, std::move(bins)); }
  static Histogram value(std::vector<double> bins) { return Histogram(HistKind::Value, std::move(bins)); }
  /// Delta mass at one bin.
  static Histogram delta(HistKind kind, int bin);
  static Histogram uniform(HistKind kind);

  HistKind kind() const { return kind_; }
  int size() const { return static_cast<int>(bins_.size()); }
  double operator[](int i) const { return bins_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& bins() const { return bins_; }

  bool operator==(const Histogram& other) const = default;

 private:
  HistKind kind_;
  std::vector<double> bins_;
};

/// One light's control: hue angle (radians, circular) and value in [0, 1].
/// Construction wraps hue into [0, 2pi) and clamps value to [0, 1].
struct ScalarHV {
  double hue = 0.0;
  double value = 0.0;

  ScalarHV() = default;
  ScalarHV(double h, double v);

  bool operator==(const ScalarHV&) const = default;
};

double wrap_angle(double radians);

}  // namespace luxdec
