// lapq: design, tabulate, encode/decode and simulate the asymmetric
// two-level Laplacian quantizer with block Huffman coding.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lapq/block_code.hpp"
#include "lapq/codec.hpp"
#include "lapq/errors.hpp"
#include "lapq/quantizer.hpp"
#include "lapq/serialize.hpp"
#include "lapq/sim.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "start:step:stop", inclusive of stop within half a step.
std::vector<double> parse_grid(const std::string& text) {
    double start = 0.0;
    double step = 0.0;
    double stop = 0.0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &step, &stop, &tail) != 3) {
        throw UsageError("grid '" + text + "' is not of the form start:step:stop");
    }
    if (step <= 0.0) {
        if (start == stop) {
            return {start};
        }
        throw UsageError("grid step must be positive");
    }
    if (start > stop + step / 2.0) {
        throw UsageError("grid start exceeds stop");
    }
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double v = start + k * step;
        if (v > stop + step / 2.0) {
            break;
        }
        grid.push_back(v);
        if (grid.size() > 1000000) {
            throw UsageError("grid has more than 1e6 points");
        }
    }
    return grid;
}

std::vector<int> parse_blocks(const std::string& text) {
    std::vector<int> blocks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t used = 0;
        int m = 0;
        try {
            m = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("block list '" + text + "' is not a comma-separated list of integers");
        }
        if (used != item.size()) {
            throw UsageError("block list '" + text + "' is not a comma-separated list of integers");
        }
        if (m < 1 || m > lapq::kMaxBlockSize) {
            throw lapq::DomainError("block size " + std::to_string(m) + " out of range [1, " +
                                    std::to_string(lapq::kMaxBlockSize) + "]");
        }
        blocks.push_back(m);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    if (blocks.empty()) {
        throw UsageError("block list is empty");
    }
    return blocks;
}

std::vector<double> read_raw_samples(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw lapq::IoError("cannot open '" + path + "' for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw lapq::IoError("read failure on '" + path + "'");
    }
    if (bytes.size() % 8 != 0) {
        throw lapq::FormatError("'" + path + "' is not a sequence of 8-byte doubles");
    }
    std::vector<double> samples;
    samples.reserve(bytes.size() / 8);
    for (std::size_t i = 0; i < bytes.size(); i += 8) {
        std::uint64_t v = 0;
        for (int b = 7; b >= 0; --b) { // little-endian on disk
            v = (v << 8) | bytes[i + static_cast<std::size_t>(b)];
        }
        samples.push_back(std::bit_cast<double>(v));
    }
    return samples;
}

void write_raw_samples(const std::string& path, const std::vector<double>& samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw lapq::IoError("cannot open '" + path + "' for writing");
    }
    for (double x : samples) {
        const auto v = std::bit_cast<std::uint64_t>(x);
        char buf[8];
        for (int b = 0; b < 8; ++b) {
            buf[b] = static_cast<char>(v >> (8 * b));
        }
        out.write(buf, 8);
    }
    if (!out) {
        throw lapq::IoError("write failure on '" + path + "'");
    }
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw lapq::IoError("cannot open '" + path + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw lapq::IoError("write failure on '" + path + "'");
    }
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw lapq::IoError("cannot open '" + path + "' for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw lapq::IoError("read failure on '" + path + "'");
    }
    return bytes;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw lapq::IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw lapq::IoError("write failure on '" + path + "'");
    }
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(out_path, text);
    }
}

void print_design_text(const lapq::QuantizerDesign& d) {
    std::printf("t1          %.10g\n", d.t1);
    std::printf("y1          %.10g\n", d.y1);
    std::printf("y2          %.10g\n", d.y2);
    std::printf("distortion  %.10g\n", d.distortion);
    std::printf("sqnr_db     %.10g\n", d.sqnr_db);
    std::printf("p1          %.10g\n", d.p1);
    std::printf("p2          %.10g\n", d.p2);
}

double mse_between(const std::vector<double>& a, const std::vector<double>& b) {
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double e = a[i] - b[i];
        sq += e * e;
    }
    return sq / static_cast<double>(a.size());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymmetric two-level Laplacian quantizer with block Huffman coding"};
    app.require_subcommand(1);

    auto* design_cmd = app.add_subcommand("design", "solve a quantizer design for a target");
    double design_sqnr = 0.0;
    double design_dist = 0.0;
    bool design_json = false;
    auto* opt_sqnr = design_cmd->add_option("--sqnr", design_sqnr, "target SQNR in dB");
    auto* opt_dist =
        design_cmd->add_option("--distortion", design_dist, "target mean squared error");
    design_cmd->add_flag("--json", design_json, "print the design as JSON");

    auto* table_cmd = app.add_subcommand("table", "analytic performance table over an SQNR grid");
    std::string table_grid = "2.0:0.1:3.0";
    std::string table_blocks = "2,3,4,5";
    std::string table_out;
    table_cmd->add_option("--grid", table_grid, "SQNR grid start:step:stop in dB");
    table_cmd->add_option("--blocks", table_blocks, "comma-separated block sizes");
    table_cmd->add_option("--out", table_out, "CSV output path (default: stdout)");

    auto* curve_cmd = app.add_subcommand("curve", "rate/entropy vs distortion curve data");
    std::string curve_grid;
    std::string curve_blocks = "2,3";
    std::string curve_out;
    curve_cmd->add_option("--dgrid", curve_grid, "distortion grid start:step:stop")->required();
    curve_cmd->add_option("--blocks", curve_blocks, "comma-separated block sizes");
    curve_cmd->add_option("--out", curve_out, "CSV output path (default: stdout)");

    auto* encode_cmd = app.add_subcommand("encode", "compress a raw little-endian f64 file");
    std::string enc_in;
    std::string enc_out;
    double enc_sqnr = 0.0;
    int enc_block = 3;
    encode_cmd->add_option("--in", enc_in, "input file of little-endian doubles")->required();
    encode_cmd->add_option("--sqnr", enc_sqnr, "target SQNR in dB")->required();
    encode_cmd->add_option("--block", enc_block, "symbols per Huffman block");
    encode_cmd->add_option("--out", enc_out, "output LAPQ container path")->required();

    auto* decode_cmd = app.add_subcommand("decode", "decompress a LAPQ container");
    std::string dec_in;
    std::string dec_out;
    decode_cmd->add_option("--in", dec_in, "input LAPQ container")->required();
    decode_cmd->add_option("--out", dec_out, "output file of little-endian doubles")->required();

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo run against the analytic design");
    double sim_sqnr = 0.0;
    std::string sim_blocks = "2,3,4,5";
    std::uint64_t sim_n = 1000000;
    std::uint64_t sim_seed = 1;
    std::string sim_out;
    sim_cmd->add_option("--sqnr", sim_sqnr, "target SQNR in dB")->required();
    sim_cmd->add_option("--blocks", sim_blocks, "comma-separated block sizes");
    sim_cmd->add_option("--n", sim_n, "number of samples");
    sim_cmd->add_option("--seed", sim_seed, "PRNG seed");
    sim_cmd->add_option("--out", sim_out, "JSON output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (design_cmd->parsed()) {
            if ((opt_sqnr->count() > 0) == (opt_dist->count() > 0)) {
                throw UsageError("design needs exactly one of --sqnr or --distortion");
            }
            const lapq::QuantizerDesign d = opt_sqnr->count() > 0
                                                ? lapq::solve_threshold(design_sqnr)
                                                : lapq::solve_distortion(design_dist);
            if (design_json) {
                std::cout << lapq::to_json(d) << '\n';
            } else {
                print_design_text(d);
            }
        } else if (table_cmd->parsed()) {
            const std::vector<int> blocks = parse_blocks(table_blocks);
            const auto rows = lapq::make_table(parse_grid(table_grid), blocks);
            emit(table_out, lapq::table_csv(rows, blocks));
        } else if (curve_cmd->parsed()) {
            const std::vector<int> blocks = parse_blocks(curve_blocks);
            const auto points = lapq::make_curve(parse_grid(curve_grid), blocks);
            emit(curve_out, lapq::curve_csv(points, blocks));
        } else if (encode_cmd->parsed()) {
            if (enc_block < 1 || enc_block > lapq::kMaxBlockSize) {
                throw lapq::DomainError("block size " + std::to_string(enc_block) +
                                        " out of range [1, " +
                                        std::to_string(lapq::kMaxBlockSize) + "]");
            }
            const std::vector<double> samples = read_raw_samples(enc_in);
            const lapq::QuantizerDesign d = lapq::solve_threshold(enc_sqnr);
            const lapq::CodeBook book =
                lapq::build_huffman(lapq::build_block_model(d.p1, d.p2, enc_block));
            const lapq::BitStream stream = lapq::encode(samples, d, book);
            write_bytes(enc_out, lapq::serialize(stream));
            const std::vector<double> recon = lapq::decode(stream);
            std::printf("samples          %zu\n", samples.size());
            std::printf("block_size       %d\n", enc_block);
            std::printf("t1               %.10g\n", d.t1);
            std::printf("bits_per_symbol  %.6f\n", stream.bits_per_symbol());
            std::printf("mse              %.6f\n", mse_between(samples, recon));
            std::printf("analytic_rate    %.6f\n", book.avg_bits_per_symbol);
            std::printf("analytic_mse     %.6f\n", d.distortion);
        } else if (decode_cmd->parsed()) {
            const lapq::BitStream stream = lapq::parse(read_bytes(dec_in));
            const std::vector<double> recon = lapq::decode(stream);
            write_raw_samples(dec_out, recon);
            std::printf("samples          %llu\n",
                        static_cast<unsigned long long>(stream.sample_count));
            std::printf("block_size       %d\n", stream.block_size);
            std::printf("t1               %.10g\n", stream.t1);
            std::printf("bits_per_symbol  %.6f\n", stream.bits_per_symbol());
        } else if (sim_cmd->parsed()) {
            const lapq::SimulationReport report =
                lapq::run_simulation(sim_sqnr, parse_blocks(sim_blocks), sim_n, sim_seed);
            emit(sim_out, lapq::to_json(report) + "\n");
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const lapq::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lapq::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const lapq::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
