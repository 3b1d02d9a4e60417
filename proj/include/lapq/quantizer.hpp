#pragma once

#include <utility>

namespace lapq {

// Two-level scalar quantizer for the unit-variance Laplacian source,
// p(x) = (1/sqrt(2)) exp(-sqrt(2)|x|).
//
// The free design variable is the non-negative decision threshold t1.
// Cell 1 is (-inf, t1], cell 2 is (t1, inf); the representation level of
// each cell sits at its conditional mean, so the reconstruction keeps the
// source's zero mean. t1 = 0 is the symmetric minimum-MSE design with
// D = 0.5 (SQNR = 10*log10(2) dB); raising t1 trades SQNR for skewed
// symbol probabilities that entropy coding can exploit.
//
// All functions here are pure and thread-safe.

// Minimum achievable mean squared error, attained at t1 = 0.
inline constexpr double kMinDistortion = 0.5;

// Targets whose implied distortion is below 0.5 by at most this much are
// treated as requests for the t1 = 0 optimum (absorbs 4-decimal roundings
// of the optimal SQNR such as 3.0103 dB).
inline constexpr double kFeasibilitySlack = 1e-7;

// exp(sqrt(2)*t1) overflows IEEE doubles a little past 501.
inline constexpr double kMaxThreshold = 500.0;

// SQNR of the optimal (t1 = 0) design: 10*log10(2) dB.
double optimal_sqnr_db();

struct QuantizerDesign {
    double t1;         // decision threshold, >= 0
    double y1;         // representation level of (-inf, t1], negative
    double y2;         // representation level of (t1, inf), = t1 + 1/sqrt(2)
    double distortion; // mean squared error, in [0.5, 1)
    double sqnr_db;    // 10*log10(1/distortion)
    double p1;         // P(X <= t1)
    double p2;         // P(X > t1) = exp(-sqrt(2)*t1)/2
};

// Unit-variance Laplacian density.
double laplacian_pdf(double x);

// Conditional means of the two cells. Rejects t1 < 0 or t1 > kMaxThreshold.
std::pair<double, double> representation_levels(double t1);

// Closed-form mean squared error of the design with threshold t1.
// Strictly increasing in t1, from 0.5 at t1 = 0 toward 1.
double distortion(double t1);

// dB <-> mean squared error conversions (source variance fixed at 1).
double sqnr_to_distortion(double sqnr_db);
double distortion_to_sqnr(double d);

// Cell probabilities (p1, p2); p1 + p2 = 1.
std::pair<double, double> symbol_probabilities(double t1);

// Populate a full design from its threshold.
QuantizerDesign design_from_threshold(double t1);

// Invert distortion() by bisection: find the design whose MSE equals
// target_distortion to within 1e-10. Throws InfeasibleTargetError when the
// target is below 0.5 - kFeasibilitySlack, or when no threshold up to the
// bracket cap of 50 reaches it.
QuantizerDesign solve_distortion(double target_distortion);

// Same inversion with the target given in dB.
QuantizerDesign solve_threshold(double target_sqnr_db);

// Symbol index of x: 1 if x <= t1 (closed upper cell boundary), else 2.
int quantize(double x, const QuantizerDesign& design);

} // namespace lapq
