#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gnc/distances.hpp"

namespace gnc {

class DecodeOutcome {
public:
    static DecodeOutcome decoded(std::size_t codeword) { return DecodeOutcome(codeword); }
    static DecodeOutcome detected() { return DecodeOutcome(std::nullopt); }

    bool is_decoded() const noexcept { return codeword_.has_value(); }
    bool is_detected() const noexcept { return !codeword_.has_value(); }
    std::size_t codeword() const { return codeword_.value(); }

    friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;

private:
    explicit DecodeOutcome(std::optional<std::size_t> c) : codeword_(c) {}
    std::optional<std::size_t> codeword_;
};

/// Minimum weight decoder: among all (x, z) with F(x, z) = y, the
/// minimum-weight ones decide. Decoded when they all share one codeword,
/// Detected on a tie or when y is unreachable. Throws PreconditionError
/// when y does not have the output shape.
DecodeOutcome mwd(const DistanceEngine& engine, const Matrix& y);

/// Whether the radius-c balls of all codewords are pairwise disjoint.
bool balls_disjoint(const DistanceEngine& engine, std::size_t c);

/// Bounded distance decoder: Decoded(x) if y lies in Phi(x, c), else
/// Detected. Throws InvalidDecoderError when the radius-c balls overlap.
DecodeOutcome mwd_bounded(const DistanceEngine& engine, std::size_t c, const Matrix& y);

/// mwd(F(x, z)) = Decoded(x) for every codeword x.
bool is_correctable(const DistanceEngine& engine, const Matrix& z);

/// For every codeword x, the bounded decoder of radius 0 never returns a
/// codeword other than x on F(x, z). Throws PreconditionError for z = 0.
bool is_detectable(const DistanceEngine& engine, const Matrix& z);

struct JointVerdict {
    std::size_t c = 0;
    std::size_t cprime = 0;
    bool by_balls = false;     // Phi(x1, c) and Phi(x2, c + c') disjoint for all distinct x1, x2
    bool by_distance = false;  // d2_min[c] >= c' + 1
    bool agree() const noexcept { return by_balls == by_distance; }
};

/// Both verdicts, computed independently.
JointVerdict joint_verdict(const DistanceEngine& engine, const DistanceReport& report, std::size_t c,
                           std::size_t cprime);

/// (c, c')-joint error correction. Throws ConsistencyError if the two methods disagree.
bool is_joint_correcting(const DistanceEngine& engine, const DistanceReport& report, std::size_t c,
                         std::size_t cprime);
bool is_joint_correcting(const DistanceEngine& engine, std::size_t c, std::size_t cprime);

struct CapabilityReport {
    std::size_t w_max = 0;
    std::size_t t_c = 0;        // every error of weight <= t_c is correctable
    std::size_t t_d = 0;        // every nonzero error of weight <= t_d is detectable
    bool t_c_full = false;      // no uncorrectable error at all
    bool t_d_full = false;
    std::size_t t_c_bound = 0;  // floor((d0_min - 1) / 2), or w_max when d0_min is infinite
    std::size_t t_d_bound = 0;  // d1_min - 1, or w_max when d1_min is infinite
    std::vector<JointVerdict> grid;  // c + c' <= w_max
};

CapabilityReport capability(const DistanceEngine& engine, const DistanceReport& report);

}  // namespace gnc
