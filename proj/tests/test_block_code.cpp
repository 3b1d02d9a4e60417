#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "lapq/block_code.hpp"
#include "lapq/errors.hpp"
#include "lapq/quantizer.hpp"
#include "support/kraft_oracle.hpp"
#include "support/reference_data.hpp"

using namespace lapq;

namespace {

std::vector<double> probabilities(const BlockModel& m) {
    std::vector<double> ps;
    for (const auto& b : m.blocks) {
        ps.push_back(b.probability);
    }
    return ps;
}

double kraft_sum(const CodeBook& cb) {
    double s = 0.0;
    for (const auto& e : cb.entries) {
        s += std::ldexp(1.0, -e.length);
    }
    return s;
}

bool is_prefix_free(const CodeBook& cb) {
    for (std::size_t i = 0; i < cb.entries.size(); ++i) {
        for (std::size_t j = 0; j < cb.entries.size(); ++j) {
            if (i == j) {
                continue;
            }
            const auto& a = cb.entries[i].code;
            const auto& b = cb.entries[j].code;
            if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("block model enumerates tuples in lexicographic order") {
    const BlockModel m = build_block_model(0.5, 0.5, 2);
    REQUIRE(m.blocks.size() == 4);
    CHECK(m.blocks[0].tuple == std::vector<int>{1, 1});
    CHECK(m.blocks[1].tuple == std::vector<int>{1, 2});
    CHECK(m.blocks[2].tuple == std::vector<int>{2, 1});
    CHECK(m.blocks[3].tuple == std::vector<int>{2, 2});
    for (const auto& b : m.blocks) {
        CHECK(b.probability == 0.25);
    }
}

TEST_CASE("block probabilities are products of symbol probabilities") {
    const double p1 = 0.9067 / 0.9999; // normalized 4-decimal inputs
    const double p2 = 0.0932 / 0.9999;
    const BlockModel m = build_block_model(p1, p2, 2);
    CHECK(std::fabs(m.blocks[0].probability - p1 * p1) < 1e-15);
    CHECK(std::fabs(m.blocks[1].probability - p1 * p2) < 1e-15);
    CHECK(std::fabs(m.blocks[2].probability - p2 * p1) < 1e-15);
    CHECK(std::fabs(m.blocks[3].probability - p2 * p2) < 1e-15);
    CHECK(std::fabs(m.blocks[0].probability - 0.8221) < 3e-4);
    CHECK(std::fabs(m.blocks[1].probability - 0.0845) < 3e-4);
    CHECK(std::fabs(m.blocks[3].probability - 0.0087) < 3e-4);
}

TEST_CASE("block probabilities sum to one") {
    for (double t1 : {0.0, 0.3866, 0.7943, 1.1876}) {
        auto [p1, p2] = symbol_probabilities(t1);
        for (int m = 1; m <= 8; ++m) {
            const BlockModel model = build_block_model(p1, p2, m);
            double sum = 0.0;
            for (const auto& b : model.blocks) {
                sum += b.probability;
            }
            CHECK(std::fabs(sum - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("single-symbol blocks degenerate to the symbol distribution") {
    const BlockModel m = build_block_model(0.7, 0.3, 1);
    REQUIRE(m.blocks.size() == 2);
    CHECK(m.blocks[0].probability == 0.7);
    CHECK(m.blocks[1].probability == 0.3);
}

TEST_CASE("block model rejects bad inputs") {
    CHECK_THROWS_AS(build_block_model(0.6, 0.3, 2), DomainError);
    CHECK_THROWS_AS(build_block_model(0.0, 1.0, 2), DomainError);
    CHECK_THROWS_AS(build_block_model(-0.1, 1.1, 2), DomainError);
    CHECK_THROWS_AS(build_block_model(0.5, 0.5, 0), DomainError);
    CHECK_THROWS_AS(build_block_model(0.5, 0.5, 17), DomainError);
}

TEST_CASE("entropy of uniform blocks") {
    CHECK(block_entropy(build_block_model(0.5, 0.5, 2)) == 2.0);
    CHECK(block_entropy(build_block_model(0.5, 0.5, 5)) == 5.0);
}

TEST_CASE("single symbol entropy values") {
    CHECK(single_symbol_entropy(0.5, 0.5) == 1.0);
    CHECK(single_symbol_entropy(1.0, 0.0) == 0.0);
    CHECK(single_symbol_entropy(0.0, 1.0) == 0.0);
    CHECK(single_symbol_entropy(0.9067, 0.0932) == doctest::Approx(0.447191902884).epsilon(1e-9));
    CHECK(std::fabs(single_symbol_entropy(0.9067, 0.0932) - 0.4471) < 2e-4);
    CHECK(std::fabs(single_symbol_entropy(0.8373, 0.1626) - 0.6405) < 2e-4);
}

TEST_CASE("block entropy factorizes for independent symbols") {
    const double h1 = single_symbol_entropy(0.9067, 0.0933);
    const BlockModel m2 = build_block_model(0.9067, 0.0933, 2);
    CHECK(std::fabs(block_entropy(m2) - 2.0 * h1) < 1e-10);
    CHECK(block_entropy(m2) == doctest::Approx(0.894779817268).epsilon(1e-9));
    CHECK(std::fabs(block_entropy(m2) - 0.8942) < 1e-3); // doubled 4-decimal reference print

    for (const auto& row : refdata::kAnalyticRows) {
        for (int m : {2, 3, 4, 5}) {
            const BlockModel model = build_block_model(row.p1, row.p2, m);
            CHECK(std::fabs(block_entropy(model) -
                            m * single_symbol_entropy(row.p1, row.p2)) < 1e-10);
        }
    }
}

TEST_CASE("huffman on uniform blocks is the fixed-length code") {
    const CodeBook cb = build_huffman(build_block_model(0.5, 0.5, 2));
    for (const auto& e : cb.entries) {
        CHECK(e.length == 2);
    }
    CHECK(cb.avg_bits_per_block == 2.0);
    CHECK(cb.avg_bits_per_symbol == 1.0);
}

TEST_CASE("huffman lengths at the most skewed design point") {
    const QuantizerDesign d = solve_threshold(2.0);
    const CodeBook cb = build_huffman(build_block_model(d.p1, d.p2, 2));
    std::vector<int> lengths;
    for (const auto& e : cb.entries) {
        lengths.push_back(e.length);
    }
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{1, 2, 3, 3});
    CHECK(std::fabs(cb.avg_bits_per_symbol - 0.6353) < 1e-3);

    const CodeBook cb3 = build_huffman(build_block_model(d.p1, d.p2, 3));
    CHECK(std::fabs(cb3.avg_bits_per_symbol - 0.5191) < 1e-3);
}

TEST_CASE("huffman codebooks are prefix-free with Kraft equality") {
    for (const auto& row : refdata::kAnalyticRows) {
        for (int m : {1, 2, 3, 4, 5}) {
            const CodeBook cb = build_huffman(build_block_model(row.p1, row.p2, m));
            CHECK(kraft_sum(cb) == 1.0);
            CHECK(is_prefix_free(cb));
        }
    }
}

TEST_CASE("huffman matches the exhaustive optimum for small alphabets") {
    for (const auto& row : refdata::kAnalyticRows) {
        for (int m : {2, 3}) {
            const BlockModel model = build_block_model(row.p1, row.p2, m);
            const CodeBook cb = build_huffman(model);
            const double oracle_min = oracle::min_average_block_length(probabilities(model));
            CHECK(cb.avg_bits_per_block == doctest::Approx(oracle_min).epsilon(1e-12));
        }
    }
}

TEST_CASE("average rate sits between entropy and entropy plus one") {
    for (const auto& row : refdata::kAnalyticRows) {
        for (int m : {2, 3, 4, 5}) {
            const BlockModel model = build_block_model(row.p1, row.p2, m);
            const CodeBook cb = build_huffman(model);
            const double h = block_entropy(model);
            CHECK(cb.avg_bits_per_block >= h);
            CHECK(cb.avg_bits_per_block < h + 1.0);
        }
    }
}

TEST_CASE("per-symbol rates reproduce the analytic reference") {
    for (const auto& row : refdata::kAnalyticRows) {
        for (int m : {2, 3, 4, 5}) {
            const CodeBook cb = build_huffman(build_block_model(row.p1, row.p2, m));
            CHECK(cb.avg_bits_per_symbol ==
                  doctest::Approx(row.rate[static_cast<std::size_t>(m - 2)]).epsilon(1e-9));
        }
    }
}

TEST_CASE("equal models give bit-identical codebooks") {
    const QuantizerDesign d = solve_threshold(2.4);
    const CodeBook a = build_huffman(build_block_model(d.p1, d.p2, 4));
    const CodeBook b = build_huffman(build_block_model(d.p1, d.p2, 4));
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].code == b.entries[i].code);
        CHECK(a.entries[i].length == b.entries[i].length);
    }
    CHECK(a.avg_bits_per_block == b.avg_bits_per_block);
}

TEST_CASE("huffman rejects degenerate models") {
    BlockModel degenerate;
    degenerate.block_size = 1;
    degenerate.blocks.push_back({{1}, 1.0});
    CHECK_THROWS_AS(build_huffman(degenerate), DomainError);

    BlockModel zero;
    zero.block_size = 1;
    zero.blocks.push_back({{1}, 1.0});
    zero.blocks.push_back({{2}, 0.0});
    CHECK_THROWS_AS(build_huffman(zero), DomainError);
}

TEST_CASE("average bit rate agrees with the codebook and detects mismatches") {
    const BlockModel uniform = build_block_model(0.5, 0.5, 2);
    const CodeBook cb = build_huffman(uniform);
    const auto [per_block, per_symbol] = average_bit_rate(cb, uniform);
    CHECK(per_block == 2.0);
    CHECK(per_symbol == 1.0);

    const auto row25 = refdata::kAnalyticRows[5];
    const BlockModel m25 = build_block_model(row25.p1, row25.p2, 2);
    CHECK(std::fabs(average_bit_rate(build_huffman(m25), m25).second - 0.7306) < 1e-3);

    const auto row29 = refdata::kAnalyticRows[9];
    const BlockModel m29 = build_block_model(row29.p1, row29.p2, 4);
    CHECK(std::fabs(average_bit_rate(build_huffman(m29), m29).second - 0.8758) < 1.5e-3);

    const BlockModel other = build_block_model(0.5, 0.5, 3);
    CHECK_THROWS_AS(average_bit_rate(cb, other), DomainError);

    BlockModel reordered = uniform;
    std::swap(reordered.blocks[1].tuple, reordered.blocks[2].tuple);
    CHECK_THROWS_AS(average_bit_rate(cb, reordered), DomainError);
}

TEST_CASE("canonical code assignment") {
    const std::vector<std::string> codes = canonical_codes({1, 3, 2, 3});
    CHECK(codes[0] == "0");
    CHECK(codes[2] == "10");
    CHECK(codes[1] == "110");
    CHECK(codes[3] == "111");

    CHECK_THROWS_AS(canonical_codes({1, 1, 2}), DomainError);  // overfull
    CHECK_THROWS_AS(canonical_codes({2, 2, 2}), DomainError);  // underfull
    CHECK_THROWS_AS(canonical_codes({1}), DomainError);
    CHECK_THROWS_AS(canonical_codes({0, 1}), DomainError);
}
