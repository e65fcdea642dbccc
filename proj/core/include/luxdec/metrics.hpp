#pragma once

#include "luxdec/histogram.hpp"

namespace luxdec {

/// Smoothing added per bin (then renormalized) before KL / JS / Bhattacharyya,
/// so sparse histograms produce finite divergences.
constexpr double kSmoothEps = 1e-8;

/// Sum of absolute bin differences; range [0, 2].
double l1_distance(const Histogram& p, const Histogram& q);

/// 1-D Wasserstein with bin support mapped onto [0, 1]:
/// sum_k |CDF_p(k) - CDF_q(k)| / bin_count. Linear support for both kinds;
/// set `circular` to use the minimal cyclic transport instead (hue only,
/// not used by the reporting pipeline).
double wasserstein_1d(const Histogram& p, const Histogram& q, bool circular = false);

/// KL(p || q), natural log, smoothed inputs.
double kl_divergence(const Histogram& p, const Histogram& q);

/// Jensen-Shannon divergence; symmetric, bounded by log 2.
double js_divergence(const Histogram& p, const Histogram& q);

/// -ln sum_i sqrt(p_i q_i), smoothed inputs.
double bhattacharyya(const Histogram& p, const Histogram& q);

/// Cosine similarity of the bin vectors; in [0, 1] for histograms.
double cosine_similarity(const Histogram& p, const Histogram& q);

/// Circular distance between two angles in [0, 2pi); result in [0, pi].
double hue_distance(double x, double y);

/// |x - y| for values in [0, 1].
double value_distance(double x, double y);

}  // namespace luxdec
