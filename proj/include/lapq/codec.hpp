#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lapq/block_code.hpp"
#include "lapq/quantizer.hpp"

namespace lapq {

// LAPQ container: a self-describing encoding of a quantized, block-Huffman
// coded sample sequence.
//
// Layout:
//   bytes 0-3   magic "LAPQ"
//   byte  4     format version (1)
//   byte  5     block size M
//   bytes 6-13  threshold t1, IEEE-754 double, big-endian
//   bytes 14-21 sample count before padding, unsigned 64-bit big-endian
//   byte  22    pad_bits: trailing non-code bits of the final payload byte
//   4-byte big-endian length + CodeBook JSON
//   payload bytes, codewords packed MSB-first
//
// The header carries t1 rather than derived quantities; the decoder
// recomputes levels and probabilities from it, so headers cannot disagree
// with themselves.

inline constexpr std::uint8_t kFormatVersion = 1;

struct BitStream {
    std::uint8_t version = kFormatVersion;
    int block_size = 0;
    double t1 = 0.0;
    std::uint64_t sample_count = 0; // samples supplied by the encoder
    int pad_bits = 0;               // in [0, 7]
    CodeBook codebook;
    std::vector<std::uint8_t> payload;

    std::uint64_t code_bits() const {
        return payload.size() * 8 - static_cast<std::uint64_t>(pad_bits);
    }
    double bits_per_symbol() const {
        return static_cast<double>(code_bits()) / static_cast<double>(sample_count);
    }
};

// Quantize samples with design, group symbols into M-tuples (the tail is
// completed with symbol 1, the most probable one; the true count goes in the
// header), and emit one codeword per tuple. Throws DomainError on empty
// input, non-finite samples, or a codebook that was not built from design's
// symbol probabilities.
BitStream encode(std::span<const double> samples, const QuantizerDesign& design,
                 const CodeBook& codebook);

// Inverse mapping: returns exactly sample_count reconstruction values, each
// y1 or y2 recomputed from the header threshold. Throws FormatError variants
// on malformed streams: CorruptHeaderError (inconsistent fields),
// TruncatedPayloadError (bits run out mid-codeword), DanglingBitsError
// (leftover bits beyond the declared padding).
std::vector<double> decode(const BitStream& stream);

std::vector<std::uint8_t> serialize(const BitStream& stream);

// Parse and validate a container. Throws CorruptHeaderError on any deviation
// from the layout above, including a codebook whose codewords are not the
// canonical prefix-free code for their lengths.
BitStream parse(std::span<const std::uint8_t> bytes);

} // namespace lapq
