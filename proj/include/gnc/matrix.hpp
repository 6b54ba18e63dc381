#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gnc/field.hpp"

namespace gnc {

/// Dense row-major matrix of field symbols. Vectors are 1 x n matrices.
///
/// The matrix does not own a field; arithmetic goes through the free
/// functions below, which take the field explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Symbol> data);

    static Matrix row_vector(std::vector<Symbol> entries);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    Symbol operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Symbol& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Symbol> entries() const noexcept { return data_; }
    std::span<Symbol> entries() noexcept { return data_; }

    bool is_zero() const noexcept;
    bool same_shape(const Matrix& other) const noexcept { return rows_ == other.rows_ && cols_ == other.cols_; }

    std::vector<Symbol> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Symbol> values);

    /// Columns [first, first + count).
    Matrix column_block(std::size_t first, std::size_t count) const;

    /// "1,0;0,1": entries comma separated, rows separated by ';'.
    std::string to_string() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix negate(const Field& f, const Matrix& a);
Matrix scale(const Field& f, Symbol s, const Matrix& a);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);

/// Reduced row echelon form; pivot columns are reported leftmost first.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
Echelon row_reduce(const Field& f, const Matrix& a);

/// Column rank (equal to row rank).
std::size_t rank(const Field& f, const Matrix& a);

/// Indices of the leftmost maximal linearly independent set of columns.
std::vector<std::size_t> pivot_columns(const Field& f, const Matrix& a);

/// Coefficients c with sum_i c_i * basis.column(i) == v, or nullopt when v is
/// outside the column span. Columns of `basis` must be independent.
std::optional<std::vector<Symbol>> coordinates_in_span(const Field& f, const Matrix& basis, std::span<const Symbol> v);

/// The set F_q^{rows x cols}, indexed so that index order is lexicographic
/// in row-major entry order (entry (0,0) most significant).
class MatrixSpace {
public:
    MatrixSpace(std::size_t rows, std::size_t cols, std::size_t q);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t q() const noexcept { return q_; }
    /// Number of elements; throws BudgetError when it does not fit 64 bits.
    std::uint64_t size() const;
    bool fits_u64() const noexcept { return fits_; }

    Matrix at(std::uint64_t index) const;
    std::uint64_t index_of(const Matrix& m) const;
    bool contains(const Matrix& m) const noexcept;

private:
    std::size_t rows_, cols_, q_;
    bool fits_ = true;
    std::uint64_t size_ = 1;
};

}  // namespace gnc
