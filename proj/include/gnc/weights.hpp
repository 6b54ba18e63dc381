#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnc/field.hpp"
#include "gnc/matrix.hpp"

namespace gnc {

enum class WeightKind { hamming, rank, sum_rank };

std::string to_string(WeightKind kind);
WeightKind weight_kind_from_string(const std::string& s);

/// A weight measure on an error space of matrices.
///
/// Hamming counts nonzero entries; rank is the column rank; sum-rank splits
/// the columns into consecutive blocks and adds the block ranks. A rank
/// measure is a sum-rank measure with a single block.
class WeightMeasure {
public:
    static WeightMeasure hamming() { return WeightMeasure(WeightKind::hamming, {}); }
    static WeightMeasure rank() { return WeightMeasure(WeightKind::rank, {}); }
    static WeightMeasure sum_rank(std::vector<std::size_t> blocks);

    WeightKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }

    /// Throws SpecificationError if the measure cannot act on `cols` columns.
    void check_width(std::size_t cols) const;

    std::size_t operator()(const Field& f, const Matrix& z) const;

    /// Largest weight any error of the given shape can have.
    std::size_t max_weight(std::size_t rows, std::size_t cols) const;

    /// Split z into z1 + z2 with weights c1 and c2 (requires c1 + c2 = w(z)).
    std::pair<Matrix, Matrix> decompose(const Field& f, const Matrix& z, std::size_t c1, std::size_t c2) const;

    std::string describe() const;

    friend bool operator==(const WeightMeasure&, const WeightMeasure&) = default;

private:
    WeightMeasure(WeightKind kind, std::vector<std::size_t> blocks) : kind_(kind), blocks_(std::move(blocks)) {}

    WeightKind kind_;
    std::vector<std::size_t> blocks_;
};

std::size_t hamming_weight(const Matrix& z);
std::size_t rank_weight(const Field& f, const Matrix& z);
std::size_t sum_rank_weight(const Field& f, const Matrix& z, const std::vector<std::size_t>& blocks);

/// Support split: the first c1 nonzero coordinates (row-major) go to z1.
std::pair<Matrix, Matrix> decompose_hamming(const Matrix& z, std::size_t c1, std::size_t c2);

/// Column-space split. The leftmost pivot columns p_1..p_{c1+c2} form a basis
/// of the column space; z1 keeps p_1..p_{c1} and the projection of every
/// other column onto their span, z2 keeps the rest.
std::pair<Matrix, Matrix> decompose_rank(const Field& f, const Matrix& z, std::size_t c1, std::size_t c2);

/// Per-block split with e_i filled greedily left to right, then decompose_rank per block.
std::pair<Matrix, Matrix> decompose_sum_rank(const Field& f, const Matrix& z, std::size_t c1, std::size_t c2,
                                             const std::vector<std::size_t>& blocks);

struct AxiomCheck {
    bool pass = true;
    std::size_t instances = 0;
    std::string witness;  // first counterexample, empty on pass
};

struct AxiomReport {
    AxiomCheck zero_iff_zero;   // w(z) >= 0, equality iff z = 0
    AxiomCheck triangle;        // w(z + z') <= w(z) + w(z')
    AxiomCheck inverse;         // w(-z) = w(z)
    AxiomCheck decomposable;    // every split c1 + c2 = w(z) is realizable
    bool exhaustive = true;     // false when pairs were sampled
    bool all_pass() const noexcept {
        return zero_iff_zero.pass && triangle.pass && inverse.pass && decomposable.pass;
    }
};

using WeightFn = std::function<std::size_t(const Matrix&)>;
using DecomposeFn = std::function<std::pair<Matrix, Matrix>(const Matrix&, std::size_t, std::size_t)>;

struct AxiomOptions {
    /// Pair checks above this count switch to seeded sampling.
    std::uint64_t max_pairs = 1'000'000;
    std::uint64_t seed = 1;
};

/// Checks the weight axioms on F_q^{rows x cols}. Without a decomposer,
/// decomposability is decided by exhaustive search for a witness split.
AxiomReport verify_weight_axioms(const Field& f, std::size_t rows, std::size_t cols, const WeightFn& w,
                                 const DecomposeFn& decompose = {}, const AxiomOptions& options = {});

AxiomReport verify_weight_axioms(const Field& f, std::size_t rows, std::size_t cols, const WeightMeasure& measure,
                                 const AxiomOptions& options = {});

}  // namespace gnc
