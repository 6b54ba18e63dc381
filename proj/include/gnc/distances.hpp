#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnc/channel.hpp"

namespace gnc {

/// A nonnegative integer distance or Infinite, which compares above every finite value.
class Distance {
public:
    constexpr Distance() = default;  // Infinite
    constexpr explicit Distance(std::size_t v) : finite_(true), value_(v) {}
    static constexpr Distance infinite() { return Distance(); }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr bool is_infinite() const noexcept { return !finite_; }
    /// Throws PreconditionError when infinite.
    std::size_t value() const;

    std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

    friend constexpr bool operator==(const Distance& a, const Distance& b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) noexcept {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(const Distance& a, std::size_t b) noexcept { return a.finite_ && a.value_ == b; }

private:
    bool finite_ = false;
    std::size_t value_ = 0;
};

/// Phi(x, c): every output reachable from codeword x with an error of weight <= c.
struct DecodingBall {
    std::size_t codeword = 0;
    std::size_t radius = 0;
    std::vector<Matrix> members;  // sorted, distinct

    bool contains(const Matrix& y) const;
    std::size_t size() const noexcept { return members.size(); }
};

/// Reachable output keys of one codeword with the least weight reaching each.
using ReachMap = std::vector<std::pair<std::uint64_t, std::uint16_t>>;  // sorted by key

/// Exact distance computations for one channel.
///
/// On construction every codeword's reach map is computed once (in
/// parallel, one codeword per task). A decoding ball Phi(x, c) is the set
/// of keys in that map with weight <= c, so every ball radius is served
/// from the same table. Distances between x1 and x2 reduce to the profile
/// M[c] = min { w2(y) : w1(y) <= c } over common outputs y.
class DistanceEngine {
public:
    /// `parallelism` = 0 uses the hardware concurrency.
    explicit DistanceEngine(const Channel& ch, unsigned parallelism = 0);

    const Channel& channel() const noexcept { return *ch_; }
    std::size_t num_codewords() const noexcept { return ch_->num_codewords(); }
    /// Radii beyond this add nothing to any ball.
    std::size_t w_max() const noexcept { return ch_->max_weight(); }
    unsigned parallelism() const noexcept { return threads_; }

    const ReachMap& reach(std::size_t x) const { return reach_.at(x); }
    /// Least weight of an error taking codeword x to y, if any.
    std::optional<std::size_t> min_weight_to(std::size_t x, const Matrix& y) const;

    DecodingBall ball(std::size_t x, std::size_t c) const;

    /// M[c] for c = 0..w_max.
    std::vector<Distance> profile(std::size_t x1, std::size_t x2) const;

    Distance d0(std::size_t x1, std::size_t x2) const;
    Distance d1(std::size_t x1, std::size_t x2) const;
    Distance d2(std::size_t x1, std::size_t x2) const;
    Distance d2_refined(std::size_t x1, std::size_t x2, std::size_t c) const;
    /// D2[c](x1, x2) for c = 0..w_max; constant afterwards.
    std::vector<Distance> d2_refined_sequence(std::size_t x1, std::size_t x2) const;

private:
    const Channel* ch_;
    unsigned threads_;
    std::vector<ReachMap> reach_;
};

struct Thresholds {
    std::size_t tau = 0;    // floor((D0 + 1) / 2)
    std::size_t cstar = 0;  // floor(D0 / 2)
    friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

/// Throws UndefinedThresholdError when d0 is infinite.
Thresholds tau_and_cstar(const Distance& d0);
Thresholds tau_and_cstar(const DistanceEngine& engine, std::size_t x1, std::size_t x2);

Distance d0_from_profile(const std::vector<Distance>& m);
Distance d2_from_profile(const std::vector<Distance>& m);
Distance d2_refined_from_profile(const std::vector<Distance>& m, std::size_t c);

struct PairDistances {
    std::size_t first = 0;
    std::size_t second = 0;
    Distance d0, d1, d2;
    std::vector<Distance> d2_refined;  // c = 0..w_max
    std::optional<Thresholds> thresholds;

    /// D2[c], extended past w_max by its last value.
    Distance refined(std::size_t c) const { return d2_refined.at(std::min(c, d2_refined.size() - 1)); }

    friend bool operator==(const PairDistances&, const PairDistances&) = default;
};

struct DistanceReport {
    std::size_t num_codewords = 0;
    std::size_t w_max = 0;
    std::vector<PairDistances> pairs;  // every ordered pair of distinct codewords, first-major
    Distance d0_min, d1_min, d2_min;
    std::vector<Distance> d2_min_refined;  // c = 0..w_max

    const PairDistances& pair(std::size_t x1, std::size_t x2) const;
    Distance d2_min_at(std::size_t c) const {
        return d2_min_refined.at(std::min(c, d2_min_refined.size() - 1));
    }
};

/// All pairwise distances and their minima. D1 and D2[c] minima run over
/// ordered pairs, D0 and D2 over unordered ones.
DistanceReport minimum_distances(const DistanceEngine& engine);

}  // namespace gnc
