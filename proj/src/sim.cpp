#include "lapq/sim.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "lapq/block_code.hpp"
#include "lapq/codec.hpp"
#include "lapq/errors.hpp"

namespace lapq {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Grid values of 3 dB and up (when still within the feasibility slack of the
// 3.0103 dB optimum) mean "the optimum row" in table output.
constexpr double kTableOptimumCutoffDb = 3.0;

double uniform_open01(std::mt19937_64& rng) {
    // 53-bit mantissa draw shifted to the open interval (0, 1)
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

QuantizerDesign design_for_table_point(double sqnr_db) {
    const double d_target = sqnr_to_distortion(sqnr_db);
    if (sqnr_db >= kTableOptimumCutoffDb - 1e-9 &&
        d_target >= kMinDistortion - kFeasibilitySlack) {
        return design_from_threshold(0.0);
    }
    return solve_threshold(sqnr_db);
}

} // namespace

std::vector<double> sample_laplacian(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = uniform_open01(rng) - 0.5;
        const double sign = s < 0.0 ? -1.0 : 1.0;
        out.push_back(-sign * kInvSqrt2 * std::log1p(-2.0 * std::fabs(s)));
    }
    return out;
}

SimulationReport run_simulation(double target_sqnr_db, const std::vector<int>& block_sizes,
                                std::uint64_t n, std::uint64_t seed) {
    if (n == 0) {
        throw DomainError("sample count must be positive");
    }
    if (block_sizes.empty()) {
        throw DomainError("at least one block size is required");
    }
    for (int m : block_sizes) {
        if (static_cast<std::uint64_t>(m) > n) {
            throw DomainError("sample count " + std::to_string(n) +
                              " is smaller than block size " + std::to_string(m));
        }
    }

    SimulationReport report;
    report.seed = seed;
    report.n_samples = n;
    report.sqnr_target_db = target_sqnr_db;
    report.design = solve_threshold(target_sqnr_db);
    report.entropy_per_symbol = single_symbol_entropy(report.design.p1, report.design.p2);

    const std::vector<double> samples = sample_laplacian(seed, n);

    std::uint64_t ones = 0;
    for (double x : samples) {
        ones += quantize(x, report.design) == 1;
    }
    report.p1_hat = static_cast<double>(ones) / static_cast<double>(n);

    bool have_mse = false;
    for (int m : block_sizes) {
        const BlockModel model = build_block_model(report.design.p1, report.design.p2, m);
        const CodeBook book = build_huffman(model);
        report.rate_per_symbol[m] = book.avg_bits_per_symbol;

        const BitStream stream = encode(samples, report.design, book);
        report.empirical_bits_per_symbol[m] = stream.bits_per_symbol();

        if (!have_mse) {
            // reconstruction, hence the MSE, is the same for every block size
            const std::vector<double> recon = decode(stream);
            double sq = 0.0;
            for (std::size_t i = 0; i < samples.size(); ++i) {
                const double e = samples[i] - recon[i];
                sq += e * e;
            }
            report.empirical_mse = sq / static_cast<double>(n);
            report.empirical_sqnr_db = distortion_to_sqnr(report.empirical_mse);
            have_mse = true;
        }
    }
    return report;
}

std::vector<TableRow> make_table(const std::vector<double>& sqnr_grid_db,
                                 const std::vector<int>& block_sizes) {
    std::vector<TableRow> rows;
    rows.reserve(sqnr_grid_db.size());
    for (double sqnr_db : sqnr_grid_db) {
        const QuantizerDesign d = design_for_table_point(sqnr_db);
        TableRow row;
        row.sqnr_db = sqnr_db;
        row.distortion = d.distortion;
        row.t1 = d.t1;
        row.p1 = d.p1;
        row.p2 = d.p2;
        row.entropy_per_symbol = single_symbol_entropy(d.p1, d.p2);
        for (int m : block_sizes) {
            row.rate_per_symbol[m] =
                build_huffman(build_block_model(d.p1, d.p2, m)).avg_bits_per_symbol;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CurvePoint> make_curve(const std::vector<double>& distortion_grid,
                                   const std::vector<int>& block_sizes) {
    std::vector<CurvePoint> points;
    points.reserve(distortion_grid.size());
    for (double d_req : distortion_grid) {
        const QuantizerDesign d = solve_distortion(d_req);
        CurvePoint pt;
        pt.distortion = d_req;
        pt.entropy_per_symbol = single_symbol_entropy(d.p1, d.p2);
        for (int m : block_sizes) {
            pt.rate_per_symbol[m] =
                build_huffman(build_block_model(d.p1, d.p2, m)).avg_bits_per_symbol;
        }
        points.push_back(std::move(pt));
    }
    return points;
}

std::string table_csv(const std::vector<TableRow>& rows, const std::vector<int>& block_sizes) {
    std::string out = "sqnr_db,distortion,t1,p1,p2,entropy_per_symbol";
    for (int m : block_sizes) {
        out += ",rate_m" + std::to_string(m);
    }
    out += '\n';
    for (const TableRow& r : rows) {
        out += fixed6(r.sqnr_db) + ',' + fixed6(r.distortion) + ',' + fixed6(r.t1) + ',' +
               fixed6(r.p1) + ',' + fixed6(r.p2) + ',' + fixed6(r.entropy_per_symbol);
        for (int m : block_sizes) {
            out += ',' + fixed6(r.rate_per_symbol.at(m));
        }
        out += '\n';
    }
    return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points, const std::vector<int>& block_sizes) {
    std::string out = "distortion,entropy_per_symbol";
    for (int m : block_sizes) {
        out += ",rate_m" + std::to_string(m);
    }
    out += '\n';
    for (const CurvePoint& p : points) {
        out += fixed6(p.distortion) + ',' + fixed6(p.entropy_per_symbol);
        for (int m : block_sizes) {
            out += ',' + fixed6(p.rate_per_symbol.at(m));
        }
        out += '\n';
    }
    return out;
}

} // namespace lapq
