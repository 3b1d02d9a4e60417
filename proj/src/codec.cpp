#include "lapq/codec.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "lapq/errors.hpp"
#include "lapq/serialize.hpp"

namespace lapq {

namespace {

struct BitWriter {
    std::vector<std::uint8_t> bytes;
    int used = 0; // bits filled in the last byte

    void put_bit(int b) {
        if (used == 0) {
            bytes.push_back(0);
        }
        if (b) {
            bytes.back() |= static_cast<std::uint8_t>(1u << (7 - used));
        }
        used = (used + 1) & 7;
    }
    void put_code(const std::string& code) {
        for (char c : code) {
            put_bit(c == '1');
        }
    }
    // zero-fill to a byte boundary, returning the number of pad bits
    int finish() {
        const int pad = used == 0 ? 0 : 8 - used;
        used = 0;
        return pad;
    }
};

struct BitReader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0; // bit position

    bool next(int& bit) {
        if (pos >= bytes.size() * 8) {
            return false;
        }
        bit = (bytes[pos >> 3] >> (7 - (pos & 7))) & 1;
        ++pos;
        return true;
    }
    std::size_t bits_remaining() const { return bytes.size() * 8 - pos; }
};

// Binary trie over the codewords; decoding walks it bit by bit.
struct DecodeTrie {
    struct Node {
        std::int32_t child[2] = {-1, -1};
        std::int32_t rank = -1;
    };
    std::vector<Node> nodes;

    explicit DecodeTrie(const CodeBook& cb) {
        nodes.emplace_back();
        for (std::size_t r = 0; r < cb.entries.size(); ++r) {
            std::int32_t cur = 0;
            for (char c : cb.entries[r].code) {
                const int b = c == '1';
                if (nodes[static_cast<std::size_t>(cur)].child[b] < 0) {
                    nodes[static_cast<std::size_t>(cur)].child[b] =
                        static_cast<std::int32_t>(nodes.size());
                    nodes.emplace_back();
                }
                cur = nodes[static_cast<std::size_t>(cur)].child[b];
            }
            nodes[static_cast<std::size_t>(cur)].rank = static_cast<std::int32_t>(r);
        }
    }
};

void append_be64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

void append_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 3; i >= 0; --i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint64_t read_be64(std::span<const std::uint8_t> b, std::size_t off) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v = (v << 8) | b[off + static_cast<std::size_t>(i)];
    }
    return v;
}

std::uint32_t read_be32(std::span<const std::uint8_t> b, std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v = (v << 8) | b[off + static_cast<std::size_t>(i)];
    }
    return v;
}

// Reject streams whose fields cannot have come from a valid encode. Shared
// by parse() and decode() so hand-assembled BitStreams get the same checks.
void validate_stream(const BitStream& s) {
    if (s.version != kFormatVersion) {
        throw CorruptHeaderError("unsupported format version " + std::to_string(s.version));
    }
    if (s.block_size < 1 || s.block_size > kMaxBlockSize) {
        throw CorruptHeaderError("block size " + std::to_string(s.block_size) +
                                 " out of range");
    }
    if (!std::isfinite(s.t1) || s.t1 < 0.0 || s.t1 > kMaxThreshold) {
        throw CorruptHeaderError("threshold out of range");
    }
    if (s.sample_count == 0) {
        throw CorruptHeaderError("sample count must be positive");
    }
    if (s.pad_bits < 0 || s.pad_bits > 7) {
        throw CorruptHeaderError("pad_bits out of range");
    }
    if (s.codebook.block_size != s.block_size) {
        throw CorruptHeaderError("codebook block size disagrees with header");
    }
    const std::size_t expected = std::size_t{1} << s.block_size;
    if (s.codebook.entries.size() != expected) {
        throw CorruptHeaderError("codebook entry count disagrees with block size");
    }
    std::vector<int> lengths(expected);
    for (std::size_t r = 0; r < expected; ++r) {
        const CodeEntry& e = s.codebook.entries[r];
        if (e.tuple != tuple_for_rank(static_cast<std::uint32_t>(r), s.block_size)) {
            throw CorruptHeaderError("codebook entries are not in canonical tuple order");
        }
        if (e.length < 1 || static_cast<std::size_t>(e.length) != e.code.size() ||
            e.code.find_first_not_of("01") != std::string::npos) {
            throw CorruptHeaderError("codebook entry " + std::to_string(r) +
                                     " has a malformed codeword");
        }
        lengths[r] = e.length;
    }
    std::vector<std::string> canon;
    try {
        canon = canonical_codes(lengths);
    } catch (const DomainError& e) {
        throw CorruptHeaderError(std::string("codebook is not a complete prefix code: ") +
                                 e.what());
    }
    for (std::size_t r = 0; r < expected; ++r) {
        if (s.codebook.entries[r].code != canon[r]) {
            throw CorruptHeaderError("codebook codewords are not in canonical form");
        }
    }
}

} // namespace

BitStream encode(std::span<const double> samples, const QuantizerDesign& design,
                 const CodeBook& codebook) {
    if (samples.empty()) {
        throw DomainError("cannot encode an empty sample sequence");
    }

    // The codebook must be the one this design implies; rebuilding it is
    // cheap and catches silent mismatches. Codeword sets alone can coincide
    // across designs, so the probability-weighted averages are checked too.
    const CodeBook expected =
        build_huffman(build_block_model(design.p1, design.p2, codebook.block_size));
    bool matches = codebook.entries.size() == expected.entries.size() &&
                   std::fabs(codebook.avg_bits_per_block - expected.avg_bits_per_block) <= 1e-12 &&
                   std::fabs(codebook.avg_bits_per_symbol - expected.avg_bits_per_symbol) <= 1e-12;
    for (std::size_t i = 0; matches && i < expected.entries.size(); ++i) {
        matches = codebook.entries[i].code == expected.entries[i].code;
    }
    if (!matches) {
        throw DomainError("codebook does not match the design's symbol probabilities");
    }

    const int m = codebook.block_size;
    BitWriter writer;
    std::uint32_t rank = 0;
    int in_block = 0;
    for (double x : samples) {
        if (!std::isfinite(x)) {
            throw DomainError("samples must be finite");
        }
        rank = (rank << 1) | static_cast<std::uint32_t>(quantize(x, design) == 2);
        if (++in_block == m) {
            writer.put_code(codebook.entries[rank].code);
            rank = 0;
            in_block = 0;
        }
    }
    if (in_block > 0) {
        // complete the final block with symbol 1 (bit 0)
        rank <<= (m - in_block);
        writer.put_code(codebook.entries[rank].code);
    }

    BitStream stream;
    stream.version = kFormatVersion;
    stream.block_size = m;
    stream.t1 = design.t1;
    stream.sample_count = samples.size();
    stream.pad_bits = writer.finish();
    stream.codebook = codebook;
    stream.payload = std::move(writer.bytes);
    return stream;
}

std::vector<double> decode(const BitStream& stream) {
    validate_stream(stream);

    const auto [y1, y2] = representation_levels(stream.t1);
    const int m = stream.block_size;
    const std::uint64_t n_blocks =
        (stream.sample_count + static_cast<std::uint64_t>(m) - 1) / m;

    DecodeTrie trie(stream.codebook);
    BitReader reader{stream.payload};
    std::vector<double> out;
    out.reserve(stream.sample_count);

    for (std::uint64_t blk = 0; blk < n_blocks; ++blk) {
        std::int32_t node = 0;
        while (trie.nodes[static_cast<std::size_t>(node)].rank < 0) {
            int bit = 0;
            if (!reader.next(bit)) {
                throw TruncatedPayloadError("payload ended mid-codeword at block " +
                                            std::to_string(blk));
            }
            node = trie.nodes[static_cast<std::size_t>(node)].child[bit];
        }
        const auto rank =
            static_cast<std::uint32_t>(trie.nodes[static_cast<std::size_t>(node)].rank);
        for (int i = 0; i < m && out.size() < stream.sample_count; ++i) {
            const bool upper = (rank >> (m - 1 - i)) & 1u;
            out.push_back(upper ? y2 : y1);
        }
    }

    if (reader.bits_remaining() != static_cast<std::size_t>(stream.pad_bits)) {
        throw DanglingBitsError("payload has " + std::to_string(reader.bits_remaining()) +
                                " leftover bits, header declares " +
                                std::to_string(stream.pad_bits) + " pad bits");
    }
    return out;
}

std::vector<std::uint8_t> serialize(const BitStream& stream) {
    std::vector<std::uint8_t> out;
    const std::string cb_json = to_json(stream.codebook);
    out.reserve(23 + 4 + cb_json.size() + stream.payload.size());
    out.insert(out.end(), {'L', 'A', 'P', 'Q'});
    out.push_back(stream.version);
    out.push_back(static_cast<std::uint8_t>(stream.block_size));
    append_be64(out, std::bit_cast<std::uint64_t>(stream.t1));
    append_be64(out, stream.sample_count);
    out.push_back(static_cast<std::uint8_t>(stream.pad_bits));
    append_be32(out, static_cast<std::uint32_t>(cb_json.size()));
    out.insert(out.end(), cb_json.begin(), cb_json.end());
    out.insert(out.end(), stream.payload.begin(), stream.payload.end());
    return out;
}

BitStream parse(std::span<const std::uint8_t> bytes) {
    constexpr std::size_t kFixedHeader = 4 + 1 + 1 + 8 + 8 + 1 + 4;
    if (bytes.size() < kFixedHeader) {
        throw CorruptHeaderError("container shorter than the fixed header");
    }
    if (std::memcmp(bytes.data(), "LAPQ", 4) != 0) {
        throw CorruptHeaderError("bad magic, not a LAPQ container");
    }

    BitStream stream;
    stream.version = bytes[4];
    stream.block_size = bytes[5];
    stream.t1 = std::bit_cast<double>(read_be64(bytes, 6));
    stream.sample_count = read_be64(bytes, 14);
    stream.pad_bits = bytes[22];

    const std::uint32_t json_len = read_be32(bytes, 23);
    if (bytes.size() < kFixedHeader + json_len) {
        throw CorruptHeaderError("container ends inside the codebook");
    }
    const std::string_view json_text(reinterpret_cast<const char*>(bytes.data() + kFixedHeader),
                                     json_len);
    try {
        stream.codebook = codebook_from_json(json_text);
    } catch (const FormatError& e) {
        throw CorruptHeaderError(e.what());
    }
    stream.payload.assign(bytes.begin() + static_cast<std::ptrdiff_t>(kFixedHeader + json_len),
                          bytes.end());
    validate_stream(stream);
    return stream;
}

} // namespace lapq
