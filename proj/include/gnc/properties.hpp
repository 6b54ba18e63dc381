#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gnc/channel.hpp"
#include "gnc/decoder.hpp"
#include "gnc/distances.hpp"

namespace gnc {

enum class VerdictStatus { pass, fail, not_applicable };

std::string to_string(VerdictStatus s);
VerdictStatus verdict_status_from_string(const std::string& s);

struct TheoremVerdict {
    std::string id;         // stable dotted identifier, e.g. "bound.d1_floor"
    std::string statement;  // the claim in plain notation
    VerdictStatus status = VerdictStatus::not_applicable;
    std::size_t instances = 0;  // quantifier instances actually checked
    std::size_t skipped = 0;    // instances outside the hypotheses (infinite distances, ...)
    std::string counterexample;
    std::string note;

    friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

enum class DistanceKind { d0, d1, d2 };
std::string to_string(DistanceKind k);

struct MetricReport {
    DistanceKind which = DistanceKind::d0;
    TheoremVerdict nonnegativity;  // D(x,x) = 0 and D(x1,x2) > 0 for x1 != x2
    TheoremVerdict symmetry;
    TheoremVerdict triangle;
    bool is_metric() const noexcept {
        return nonnegativity.status == VerdictStatus::pass && symmetry.status == VerdictStatus::pass &&
               triangle.status == VerdictStatus::pass;
    }
};

struct Ledger {
    std::vector<TheoremVerdict> verdicts;
    std::vector<std::string> notes;  // observations that are reported but never asserted

    std::size_t count(VerdictStatus s) const;
    bool has_failures() const { return count(VerdictStatus::fail) > 0; }
    const TheoremVerdict* find(const std::string& id) const;
};

std::vector<TheoremVerdict> check_bounds(const DistanceReport& r);
std::vector<TheoremVerdict> check_refined(const DistanceReport& r);
std::vector<TheoremVerdict> check_error_linear_suite(const DistanceReport& r, const ChannelClass& cls);
/// Exhaustive over pairs (symmetry) and triples (triangle). Infinite
/// distances take part with inf + a = inf.
MetricReport check_metric(const DistanceReport& r, DistanceKind which);
std::vector<TheoremVerdict> check_conditions(const DistanceReport& r);
std::vector<TheoremVerdict> check_decoder(const DistanceEngine& engine, const DistanceReport& r,
                                          const CapabilityReport& cap);
std::vector<TheoremVerdict> check_weights(const Channel& ch, const AxiomOptions& options);
std::vector<TheoremVerdict> check_distance_invariants(const DistanceEngine& engine, const DistanceReport& r);

struct RunOptions {
    std::uint64_t seed = 1;
    std::uint64_t max_pairs = 1'000'000;  // weight-axiom pair checks beyond this are sampled
    /// Test hook: corrupts one D1 entry before the checks run.
    bool corrupt_distances = false;
};

Ledger run_all(const DistanceEngine& engine, const RunOptions& options = {});

/// Injects the fault used by RunOptions::corrupt_distances.
void corrupt_report(DistanceReport& r);

struct RandomTableOptions {
    std::size_t max_codewords = 4;
    std::size_t max_error_dim = 4;
    std::size_t max_output_len = 3;
};

/// Uniformly random transfer table over F_2 or F_3 with 2..max_codewords
/// codewords, redrawn until distinct codewords stay distinct at zero error.
Channel random_table_channel(std::uint64_t seed, const RandomTableOptions& options = {});

/// Random x*A + z*B channel with a linear code, cycling through Hamming,
/// rank and sum-rank error spaces by seed.
Channel random_matrix_channel(std::uint64_t seed);

}  // namespace gnc
