#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gnc/field.hpp"
#include "gnc/matrix.hpp"
#include "gnc/weights.hpp"

namespace gnc {

struct Shape {
    std::size_t rows = 1;
    std::size_t cols = 0;

    std::size_t entries() const noexcept { return rows * cols; }
    std::string to_string() const { return std::to_string(rows) + "x" + std::to_string(cols); }
    friend bool operator==(const Shape&, const Shape&) = default;
};

inline Shape shape_of(const Matrix& m) { return Shape{m.rows(), m.cols()}; }

/// Enumeration limits shared by every exhaustive computation.
struct Budget {
    /// Upper bound on |C| * |E|, the number of evaluated (codeword, error) pairs.
    std::uint64_t max_pairs = 1'000'000;
};

/// Realization of a transfer function. `xi` is the codeword's index in the
/// channel's codeword list, `x` the codeword itself.
class Transfer {
public:
    virtual ~Transfer() = default;
    virtual Matrix apply(std::size_t xi, const Matrix& x, const Matrix& z) const = 0;
    virtual std::string kind() const = 0;
};

struct ChannelParts {
    Field field = Field::prime(2);
    std::vector<Matrix> codewords;
    Shape error_shape;
    WeightMeasure weight = WeightMeasure::hamming();
    Shape output_shape;
    std::shared_ptr<const Transfer> transfer;
    Budget budget;
};

struct WeightedError {
    Matrix z;
    std::size_t weight = 0;
    std::uint64_t index = 0;  // position in the error space enumeration
};

/// A generalized network channel F: C x E -> Y with finite, enumerable C and E.
///
/// Errors live in F_q^{rows x cols} with a weight measure; outputs are
/// matrices of a fixed shape over the same field, compared through a base-q
/// integer key. Construction verifies that distinct codewords have distinct
/// error-free outputs.
class Channel {
public:
    const Field& field() const noexcept { return field_; }
    std::string kind() const { return transfer_->kind(); }

    std::size_t num_codewords() const noexcept { return codewords_.size(); }
    const std::vector<Matrix>& codewords() const noexcept { return codewords_; }
    const Matrix& codeword(std::size_t i) const { return codewords_.at(i); }
    std::optional<std::size_t> codeword_index(const Matrix& x) const;

    Shape codeword_shape() const noexcept { return shape_of(codewords_.front()); }
    Shape error_shape() const noexcept { return error_shape_; }
    Shape output_shape() const noexcept { return output_shape_; }
    const WeightMeasure& weight_measure() const noexcept { return weight_; }
    const Budget& budget() const noexcept { return budget_; }

    std::uint64_t num_errors() const noexcept { return num_errors_; }
    Matrix error_at(std::uint64_t index) const { return errors_.at(index); }
    std::uint64_t error_index(const Matrix& z) const;
    std::size_t error_weight(std::uint64_t index) const { return error_weights_.at(index); }
    std::size_t weight(const Matrix& z) const;
    /// Largest weight attained in the error space.
    std::size_t max_weight() const noexcept { return max_weight_; }
    Matrix zero_error() const { return Matrix(error_shape_.rows, error_shape_.cols); }

    /// Error indices sorted by (weight, index).
    const std::vector<std::uint64_t>& errors_by_weight() const noexcept { return by_weight_; }

    Matrix evaluate(std::size_t xi, const Matrix& z) const;
    Matrix evaluate(const Matrix& x, const Matrix& z) const;

    bool output_contains(const Matrix& y) const noexcept { return outputs_.contains(y); }
    std::uint64_t output_key(const Matrix& y) const;
    Matrix output_from_key(std::uint64_t key) const { return outputs_.at(key); }

    std::string describe() const;

private:
    friend Channel make_channel(ChannelParts parts);
    Channel(ChannelParts parts);

    Field field_;
    std::vector<Matrix> codewords_;
    Shape error_shape_;
    WeightMeasure weight_;
    Shape output_shape_;
    std::shared_ptr<const Transfer> transfer_;
    Budget budget_;
    MatrixSpace errors_;
    MatrixSpace outputs_;
    std::uint64_t num_errors_ = 0;
    std::vector<std::uint16_t> error_weights_;
    std::vector<std::uint64_t> by_weight_;
    std::size_t max_weight_ = 0;
};

/// Validates the parts and checks F(x,0) != F(x',0) for all distinct codewords.
/// Throws ConstructionError naming the colliding pair, SpecificationError for
/// inconsistent shapes, BudgetError when |C| * |E| exceeds the budget.
Channel make_channel(ChannelParts parts);

/// F(x, z) = x + z under Hamming weight; codewords are 1 x n vectors.
Channel classical_channel(const Field& f, std::vector<Matrix> codewords, Budget budget = {});

/// F(x, z) = x * A + z * B. Codewords are r x a matrices (r = 1 for vectors),
/// errors are r x b with b = B.rows().
Channel matrix_channel(const Field& f, std::vector<Matrix> codewords, Matrix a, Matrix b, WeightMeasure weight,
                       Budget budget = {});

/// Explicit transfer table: outputs[xi * |E| + error_index] = F(x_xi, z).
Channel table_channel(const Field& f, std::vector<Matrix> codewords, Shape error_shape, WeightMeasure weight,
                      Shape output_shape, std::vector<Matrix> outputs, Budget budget = {});

Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// The subspace spanned by the rows of `generator` (all u * G, u in F_q^k), in u order.
std::vector<Matrix> span_codewords(const Field& f, const Matrix& generator);

/// Every matrix of the given shape, in enumeration order.
std::vector<Matrix> whole_space(const Field& f, Shape shape);

struct ChannelClass {
    bool error_linear = false;
    /// error_linear, h is F_q-linear and x -> F(x, 0) extends to an F_q-linear map.
    bool linear = false;
    /// The codeword set is an F_q-subspace.
    bool code_linear = false;
    std::string witness;  // first counterexample when error_linear or linear is false
};

/// Exhaustive classification against the canonical split f(x) = F(x,0),
/// h(z) = F(x0,z) - F(x0,0).
ChannelClass classify(const Channel& ch);

/// Every error of weight <= c, ordered by weight then enumeration index.
std::vector<WeightedError> enumerate_errors_up_to(const Channel& ch, std::size_t c);

}  // namespace gnc
