#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lapq {

// Huffman coding over blocks of M quantizer symbols. Blocking the two-symbol
// source into M-tuples grows the alphabet to 2^M and lets the average rate
// approach the entropy from above.

inline constexpr int kMaxBlockSize = 16; // 2^16 blocks is the enumeration ceiling

struct BlockEntry {
    std::vector<int> tuple; // M symbol indices, each 1 or 2
    double probability;     // product of the per-symbol probabilities
};

// The 2^M block probabilities of an iid two-symbol source, in lexicographic
// tuple order: entry k's tuple is the binary expansion of k (0 -> symbol 1).
struct BlockModel {
    int block_size = 0;
    std::vector<BlockEntry> blocks;
};

struct CodeEntry {
    std::vector<int> tuple;
    std::string code; // '0'/'1' characters
    int length = 0;
};

// Canonical prefix-free codebook for a BlockModel, entries in the same
// (lexicographic) order as the model's blocks.
struct CodeBook {
    int block_size = 0;
    std::vector<CodeEntry> entries;
    double avg_bits_per_block = 0.0;
    double avg_bits_per_symbol = 0.0;
};

// Symbol tuple of the block with the given lexicographic rank.
std::vector<int> tuple_for_rank(std::uint32_t rank, int block_size);

// Build the 2^block_size block distribution from per-symbol probabilities.
// Requires p1, p2 in (0,1) with p1 + p2 = 1 within 1e-9, and
// 1 <= block_size <= kMaxBlockSize.
BlockModel build_block_model(double p1, double p2, int block_size);

// Shannon entropy of the block distribution, bits per block. Zero-probability
// entries contribute nothing.
double block_entropy(const BlockModel& model);

// -p1*log2(p1) - p2*log2(p2); p in {0, 1} contributes 0.
double single_symbol_entropy(double p1, double p2);

// Huffman code for the block distribution: repeatedly merge the two
// least-probable nodes (ties broken toward the smaller node index, leaves
// first, so equal inputs give bit-identical codebooks), then reassign
// codewords canonically by (length, tuple rank). Lengths, and therefore the
// average rate, are those of an optimal prefix-free code.
CodeBook build_huffman(const BlockModel& model);

// (bits per block, bits per symbol) of codebook under model. Throws when the
// two disagree on block size or ordering.
std::pair<double, double> average_bit_rate(const CodeBook& codebook, const BlockModel& model);

// Canonical codeword per entry given per-entry lengths (entry order = tuple
// rank): sort by (length, rank), assign sequential binary codes. Throws
// DomainError unless the lengths satisfy Kraft equality (complete code).
std::vector<std::string> canonical_codes(const std::vector<int>& lengths);

} // namespace lapq
