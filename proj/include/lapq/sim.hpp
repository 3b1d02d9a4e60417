#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lapq/quantizer.hpp"

namespace lapq {

// Monte Carlo verification and analytic table/curve generation.

// n iid unit-variance Laplacian draws via the inverse CDF
//   u ~ U(0,1),  x = -sign(u - 1/2) * (1/sqrt(2)) * ln(1 - 2|u - 1/2|)
// driven by std::mt19937_64 with an explicit 53-bit uniform mapping, so the
// stream is bit-reproducible for a given seed on any platform.
std::vector<double> sample_laplacian(std::uint64_t seed, std::size_t n);

struct SimulationReport {
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 0;
    double sqnr_target_db = 0.0;

    // analytic half
    QuantizerDesign design{};
    double entropy_per_symbol = 0.0;
    std::map<int, double> rate_per_symbol; // keyed by block size

    // empirical half
    double empirical_mse = 0.0;
    double empirical_sqnr_db = 0.0;
    std::map<int, double> empirical_bits_per_symbol;
    double p1_hat = 0.0; // observed frequency of symbol 1
};

// Design at the target, encode+decode one n-sample stream per requested
// block size through the real codec, and report analytic vs empirical
// figures. Pure function of its arguments: equal inputs give byte-identical
// reports.
SimulationReport run_simulation(double target_sqnr_db, const std::vector<int>& block_sizes,
                                std::uint64_t n, std::uint64_t seed);

struct TableRow {
    double sqnr_db = 0.0; // requested design point
    double distortion = 0.0;
    double t1 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double entropy_per_symbol = 0.0;
    std::map<int, double> rate_per_symbol;
};

// Analytic performance table over a grid of SQNR design points; no sampling
// involved. Grid values of 3.0 dB and above (up to the feasibility slack)
// are reported as the t1 = 0 optimum row, the table convention for the
// 10*log10(2) = 3.0103 dB optimum.
std::vector<TableRow> make_table(const std::vector<double>& sqnr_grid_db,
                                 const std::vector<int>& block_sizes);

struct CurvePoint {
    double distortion = 0.0;
    double entropy_per_symbol = 0.0;
    std::map<int, double> rate_per_symbol;
};

// Rate and entropy per symbol as functions of distortion (distortion-domain
// companion of make_table). Rejects points below 0.5 - kFeasibilitySlack.
std::vector<CurvePoint> make_curve(const std::vector<double>& distortion_grid,
                                   const std::vector<int>& block_sizes);

// CSV renderings: UTF-8, header row, '.' decimal separator, 6 decimals.
std::string table_csv(const std::vector<TableRow>& rows, const std::vector<int>& block_sizes);
std::string curve_csv(const std::vector<CurvePoint>& points, const std::vector<int>& block_sizes);

} // namespace lapq
