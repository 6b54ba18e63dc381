#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gnc/config.hpp"
#include "gnc/report.hpp"

namespace gnc {

struct CommandOptions {
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> max_pairs;  // overrides the config budget
    unsigned parallelism = 0;                // 0 = hardware concurrency
    bool corrupt_distances = false;          // test hook for verify
};

/// Per-pair D0/D1/D2, tau and c*, D2[c] for c in [0, tau], and the code minima.
Report cmd_distances(const Config& config, const CommandOptions& options = {});

/// Correction and detection capability plus the joint-correction grid.
Report cmd_capability(const Config& config, const CommandOptions& options = {});

/// (c, c') joint error correction by d2min[c] >= c' + 1. With cross_check
/// the ball test also runs and a disagreement throws ConsistencyError.
Report cmd_joint(const Config& config, std::size_t c, std::size_t cprime, bool cross_check = false,
                 const CommandOptions& options = {});

/// Full theorem ledger; exit_code is 1 when any verdict fails.
Report cmd_verify(const Config& config, const CommandOptions& options = {});

/// Minimum weight decoding of y, or bounded decoding with radius `bounded`.
Report cmd_decode(const Config& config, const std::string& y, std::optional<std::size_t> bounded = std::nullopt,
                  const CommandOptions& options = {});

Report cmd_classify(const Config& config, const CommandOptions& options = {});

/// "(0,1,2)" for vectors, "[0,1;2,0]" for matrices.
std::string format_word(const Matrix& m);

}  // namespace gnc
