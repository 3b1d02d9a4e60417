#include "lapq/block_code.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "lapq/errors.hpp"

namespace lapq {

std::vector<int> tuple_for_rank(std::uint32_t rank, int block_size) {
    std::vector<int> tuple(static_cast<std::size_t>(block_size));
    for (int i = 0; i < block_size; ++i) {
        tuple[static_cast<std::size_t>(i)] =
            ((rank >> (block_size - 1 - i)) & 1u) ? 2 : 1;
    }
    return tuple;
}

BlockModel build_block_model(double p1, double p2, int block_size) {
    if (!(p1 > 0.0 && p1 < 1.0 && p2 > 0.0 && p2 < 1.0) ||
        std::fabs(p1 + p2 - 1.0) > 1e-9) {
        throw DomainError("invalid symbol probabilities (" + std::to_string(p1) + ", " +
                          std::to_string(p2) + "): need p1, p2 in (0,1) with p1 + p2 = 1");
    }
    if (block_size < 1 || block_size > kMaxBlockSize) {
        throw DomainError("block size " + std::to_string(block_size) +
                          " out of range [1, " + std::to_string(kMaxBlockSize) + "]");
    }

    BlockModel model;
    model.block_size = block_size;
    const std::uint32_t count = 1u << block_size;
    model.blocks.reserve(count);
    for (std::uint32_t rank = 0; rank < count; ++rank) {
        BlockEntry entry;
        entry.tuple = tuple_for_rank(rank, block_size);
        double prob = 1.0;
        for (int sym : entry.tuple) {
            prob *= (sym == 1) ? p1 : p2;
        }
        entry.probability = prob;
        model.blocks.push_back(std::move(entry));
    }
    return model;
}

double block_entropy(const BlockModel& model) {
    double h = 0.0;
    for (const BlockEntry& b : model.blocks) {
        if (b.probability > 0.0) {
            h -= b.probability * std::log2(b.probability);
        }
    }
    return h;
}

double single_symbol_entropy(double p1, double p2) {
    double h = 0.0;
    if (p1 > 0.0) {
        h -= p1 * std::log2(p1);
    }
    if (p2 > 0.0) {
        h -= p2 * std::log2(p2);
    }
    return h;
}

std::vector<std::string> canonical_codes(const std::vector<int>& lengths) {
    const std::size_t n = lengths.size();
    if (n < 2) {
        throw DomainError("canonical code needs at least 2 entries");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lengths[a] < lengths[b];
    });

    std::vector<std::string> codes(n);
    std::string code; // running codeword, treated as a binary counter
    for (std::size_t i = 0; i < n; ++i) {
        const int len = lengths[order[i]];
        if (len < 1) {
            throw DomainError("codeword length must be positive");
        }
        if (i == 0) {
            code.assign(static_cast<std::size_t>(len), '0');
        } else {
            // increment, then extend to the next length with zeros
            std::size_t pos = code.size();
            while (pos > 0 && code[pos - 1] == '1') {
                code[--pos] = '0';
            }
            if (pos == 0) {
                throw DomainError("codeword lengths violate Kraft equality (overfull)");
            }
            code[pos - 1] = '1';
            code.resize(static_cast<std::size_t>(len), '0');
        }
        codes[order[i]] = code;
    }
    if (code.find('0') != std::string::npos) {
        throw DomainError("codeword lengths violate Kraft equality (underfull)");
    }
    return codes;
}

CodeBook build_huffman(const BlockModel& model) {
    const std::size_t n = model.blocks.size();
    if (n < 2) {
        throw DomainError("degenerate block model: need at least 2 blocks");
    }
    for (const BlockEntry& b : model.blocks) {
        if (!(b.probability > 0.0)) {
            throw DomainError("block model contains a zero-probability entry");
        }
    }

    // Merge the two least-probable nodes until one remains. Node ids are
    // leaf rank first, then creation order, so probability ties resolve the
    // same way on every run.
    using Node = std::pair<double, std::size_t>;
    std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
    std::vector<std::size_t> parent(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        heap.emplace(model.blocks[i].probability, i);
    }
    std::size_t next_id = n;
    while (heap.size() > 1) {
        const Node a = heap.top();
        heap.pop();
        const Node b = heap.top();
        heap.pop();
        parent[a.second] = next_id;
        parent[b.second] = next_id;
        heap.emplace(a.first + b.first, next_id);
        ++next_id;
    }
    const std::size_t root = next_id - 1;

    std::vector<int> lengths(n);
    for (std::size_t i = 0; i < n; ++i) {
        int depth = 0;
        for (std::size_t node = i; node != root; node = parent[node]) {
            ++depth;
        }
        lengths[i] = depth;
    }

    CodeBook book;
    book.block_size = model.block_size;
    const std::vector<std::string> codes = canonical_codes(lengths);
    book.entries.reserve(n);
    double avg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        book.entries.push_back(CodeEntry{model.blocks[i].tuple, codes[i], lengths[i]});
        avg += model.blocks[i].probability * lengths[i];
    }
    book.avg_bits_per_block = avg;
    book.avg_bits_per_symbol = avg / model.block_size;
    return book;
}

std::pair<double, double> average_bit_rate(const CodeBook& codebook, const BlockModel& model) {
    if (codebook.block_size != model.block_size ||
        codebook.entries.size() != model.blocks.size()) {
        throw DomainError("codebook and block model disagree on block size");
    }
    double per_block = 0.0;
    for (std::size_t i = 0; i < model.blocks.size(); ++i) {
        if (codebook.entries[i].tuple != model.blocks[i].tuple) {
            throw DomainError("codebook and block model disagree on block ordering");
        }
        per_block += model.blocks[i].probability * codebook.entries[i].length;
    }
    return {per_block, per_block / model.block_size};
}

} // namespace lapq
