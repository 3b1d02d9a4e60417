#pragma once

#include <string>
#include <string_view>

#include "lapq/block_code.hpp"
#include "lapq/quantizer.hpp"
#include "lapq/sim.hpp"

namespace lapq {

// JSON emission is deterministic: insertion-ordered keys, doubles rendered
// with up to 17 significant digits (%.17g), which round-trip exactly.
// Parsing accepts any valid JSON of the right shape.

std::string to_json(const QuantizerDesign& design);
std::string to_json(const CodeBook& codebook);
std::string to_json(const SimulationReport& report);

// Throws FormatError when the text is not a CodeBook of the documented shape.
CodeBook codebook_from_json(std::string_view text);

} // namespace lapq
