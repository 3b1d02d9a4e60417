#include "lapq/quantizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lapq/errors.hpp"

namespace lapq {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_threshold(double t1) {
    if (!std::isfinite(t1) || t1 < 0.0) {
        throw DomainError("decision threshold must be finite and non-negative, got " +
                          std::to_string(t1));
    }
    if (t1 > kMaxThreshold) {
        throw DomainError("decision threshold " + std::to_string(t1) +
                          " is beyond the supported range (max " +
                          std::to_string(kMaxThreshold) + ")");
    }
}

} // namespace

double optimal_sqnr_db() {
    return 10.0 * std::log10(2.0);
}

double laplacian_pdf(double x) {
    return kInvSqrt2 * std::exp(-kSqrt2 * std::fabs(x));
}

std::pair<double, double> representation_levels(double t1) {
    require_threshold(t1);
    const double y1 = (kSqrt2 + 2.0 * t1) / (2.0 - 4.0 * std::exp(kSqrt2 * t1));
    const double y2 = t1 + kInvSqrt2;
    return {y1, y2};
}

double distortion(double t1) {
    require_threshold(t1);
    const double e = std::exp(kSqrt2 * t1);
    return (3.0 - 4.0 * e + 2.0 * kSqrt2 * t1 + 2.0 * t1 * t1) / (2.0 - 4.0 * e);
}

double sqnr_to_distortion(double sqnr_db) {
    if (!std::isfinite(sqnr_db)) {
        throw DomainError("SQNR target must be finite");
    }
    return std::pow(10.0, -sqnr_db / 10.0);
}

double distortion_to_sqnr(double d) {
    if (!std::isfinite(d) || d <= 0.0) {
        throw DomainError("distortion must be positive, got " + std::to_string(d));
    }
    return 10.0 * std::log10(1.0 / d);
}

std::pair<double, double> symbol_probabilities(double t1) {
    require_threshold(t1);
    const double p2 = 0.5 * std::exp(-kSqrt2 * t1);
    return {1.0 - p2, p2};
}

QuantizerDesign design_from_threshold(double t1) {
    QuantizerDesign d{};
    d.t1 = t1;
    auto [y1, y2] = representation_levels(t1);
    d.y1 = y1;
    d.y2 = y2;
    d.distortion = distortion(t1);
    d.sqnr_db = distortion_to_sqnr(d.distortion);
    auto [p1, p2] = symbol_probabilities(t1);
    d.p1 = p1;
    d.p2 = p2;
    return d;
}

QuantizerDesign solve_distortion(double target_distortion) {
    if (!std::isfinite(target_distortion)) {
        throw DomainError("distortion target must be finite");
    }
    if (target_distortion < kMinDistortion - kFeasibilitySlack) {
        throw InfeasibleTargetError(
            "infeasible target: distortion " + std::to_string(target_distortion) +
            " is below the minimum 0.5 (SQNR above the 3.0103 dB optimum)");
    }
    if (target_distortion <= kMinDistortion) {
        return design_from_threshold(0.0);
    }

    // D(t1) is strictly increasing, so double the upper end until it
    // brackets the target, then bisect.
    double lo = 0.0;
    double hi = 1.0;
    while (distortion(hi) < target_distortion) {
        hi *= 2.0;
        if (hi > 50.0) {
            hi = 50.0;
            if (distortion(hi) < target_distortion) {
                throw InfeasibleTargetError(
                    "infeasible target: no threshold up to 50 reaches distortion " +
                    std::to_string(target_distortion));
            }
            break;
        }
    }

    double mid = lo;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break; // interval has collapsed to adjacent doubles
        }
        const double d_mid = distortion(mid);
        if (std::fabs(d_mid - target_distortion) <= 1e-12) {
            break;
        }
        if (d_mid < target_distortion) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return design_from_threshold(mid);
}

QuantizerDesign solve_threshold(double target_sqnr_db) {
    return solve_distortion(sqnr_to_distortion(target_sqnr_db));
}

int quantize(double x, const QuantizerDesign& design) {
    return x <= design.t1 ? 1 : 2;
}

} // namespace lapq
