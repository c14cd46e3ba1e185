#pragma once

// Sequence files and canonical JSON output.
//
// A sequence file is a JSON object
//   {"d": 2, "offset": [0, 0], "shape": [2, 3], "values": [...]}
// with `values` in row-major order (last axis fastest). Output is canonical:
// keys in insertion order and every floating-point number printed with 17
// significant digits, so identical data always produces identical bytes and
// doubles survive a write/read cycle unchanged.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "agmon/lattice.hpp"

namespace agmon {

using Json = nlohmann::ordered_json;

/// Malformed sequence document; the message names the line or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] LatticeSeq parse_sequence(std::string_view text);
[[nodiscard]] LatticeSeq read_sequence_file(const std::filesystem::path& path);

[[nodiscard]] Json to_json(const LatticeSeq& seq);
void write_sequence_file(const std::filesystem::path& path, const LatticeSeq& seq);

/// printf("%.17g"); non-finite values become "null".
[[nodiscard]] std::string format_double(double value);

/// Two-space indented JSON with arrays of scalars kept on one line.
[[nodiscard]] std::string dump_canonical(const Json& value);

}  // namespace agmon
