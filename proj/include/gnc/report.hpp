#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gnc/distances.hpp"
#include "gnc/properties.hpp"

namespace gnc {

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

/// One distance value: metric is "D0", "D1", "D2" or "D2[c]" (then c is set).
/// pair is "(#i,#j)" or "min" for code minima.
struct DistanceEntry {
    std::string pair;
    std::string metric;
    std::optional<std::size_t> c;
    Distance value;

    friend bool operator==(const DistanceEntry&, const DistanceEntry&) = default;
};

struct Report {
    std::string command;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 1;
    std::vector<Table> tables;
    std::vector<DistanceEntry> distances;
    std::vector<TheoremVerdict> verdicts;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, double>> timing;  // seconds per phase
    int exit_code = 0;

    friend bool operator==(const Report&, const Report&) = default;
};

std::string render_text(const Report& r);

/// JSON document; parse_structured inverts it exactly.
std::string render_structured(const Report& r);
Report parse_structured(std::string_view text);

std::string hex64(std::uint64_t v);

}  // namespace gnc
