#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnc/channel.hpp"
#include "gnc/network.hpp"

namespace gnc {

/// A parsed channel description.
///
/// Text format: `[section]` headers, `key = value` lines, `#` comments.
/// Vectors are comma-separated symbols, matrices are rows separated by `;`,
/// shapes are written `RxC`. Symbols are indices in field enumeration order.
///
///   [field]   characteristic, degree, modulus (constant term first), max_size
///   [weight]  kind = hamming | rank | sum_rank, blocks
///   [channel] kind = classical | matrix | network | table
///             a, b (matrix); error_shape, output_shape, row (table)
///   [code]    codeword (repeatable) | generator [+ shape] | whole_space = RxC
///   [network] nodes, edges = s>a, ..., source, sink, emission,
///             map = b>d : 0,1 -> 2 (repeatable)
///   [budget]  max_pairs
///
/// A table row reads `row = <codeword index> : <z> -> <y>`.
struct Config {
    std::string text;  // source text, hashed into reports
    FieldSpec field;
    std::size_t max_field_size = kDefaultMaxFieldSize;
    WeightMeasure weight = WeightMeasure::hamming();
    std::string kind;
    std::vector<Matrix> codewords;
    Matrix a, b;  // matrix channels
    Shape error_shape, output_shape;
    std::vector<Matrix> table;  // table channels, outputs[xi * |E| + error index]
    NetworkSpec network;
    Budget budget;
};

/// Throws ParseError with the offending line for syntax errors, unknown
/// sections or keys, out-of-field symbols and inconsistent dimensions.
Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

/// Canonical text for a config; parse_config(render_config(c)) rebuilds c.
std::string render_config(const Config& c);

/// The toy network example as a config.
Config toy_config();

Field config_field(const Config& c);
Channel build_channel(const Config& c);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

/// Parses "a,b,c" (or "a,b;c,d") into a matrix over a field of size q.
Matrix parse_symbols(std::string_view text, std::size_t q);

}  // namespace gnc
