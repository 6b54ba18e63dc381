#include "gnc/matrix.hpp"

#include <limits>

#include "gnc/errors.hpp"

namespace gnc {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Symbol> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw SpecificationError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                 std::to_string(rows_ * cols_));
    }
}

Matrix Matrix::row_vector(std::vector<Symbol> entries) {
    const std::size_t n = entries.size();
    return Matrix(1, n, std::move(entries));
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const noexcept {
    for (auto s : data_) {
        if (s != 0) return false;
    }
    return true;
}

std::vector<Symbol> Matrix::column(std::size_t c) const {
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Matrix::set_column(std::size_t c, std::span<const Symbol> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw SpecificationError("column block out of range");
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    }
    return out;
}

std::string Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r > 0) s += ';';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) s += ',';
            s += std::to_string((*this)(r, c));
        }
    }
    return s;
}

namespace {
void require_same_shape(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) {
        throw SpecificationError("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                 " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}
}  // namespace

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out(a.rows(), a.cols());
    auto x = a.entries();
    auto y = b.entries();
    auto o = out.entries();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = f.add(x[i], y[i]);
    return out;
}

Matrix sub(const Field& f, const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out(a.rows(), a.cols());
    auto x = a.entries();
    auto y = b.entries();
    auto o = out.entries();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = f.sub(x[i], y[i]);
    return out;
}

Matrix negate(const Field& f, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    auto x = a.entries();
    auto o = out.entries();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = f.neg(x[i]);
    return out;
}

Matrix scale(const Field& f, Symbol s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    auto x = a.entries();
    auto o = out.entries();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = f.mul(s, x[i]);
    return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw SpecificationError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                 " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Symbol aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    }
    return out;
}

Echelon row_reduce(const Field& f, const Matrix& a) {
    Echelon e{a, {}};
    Matrix& m = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
        }
        const Symbol inv = f.inv(m(row, col));
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(inv, m(row, c));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Symbol factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Field& f, const Matrix& a) { return row_reduce(f, a).pivots.size(); }

std::vector<std::size_t> pivot_columns(const Field& f, const Matrix& a) { return row_reduce(f, a).pivots; }

std::optional<std::vector<Symbol>> coordinates_in_span(const Field& f, const Matrix& basis, std::span<const Symbol> v) {
    if (v.size() != basis.rows()) throw SpecificationError("vector length does not match basis column length");
    // Augment [basis | v] and reduce; independence of the basis makes the pivots 0..k-1.
    const std::size_t k = basis.cols();
    Matrix aug(basis.rows(), k + 1);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < k; ++c) aug(r, c) = basis(r, c);
        aug(r, k) = v[r];
    }
    const Echelon e = row_reduce(f, aug);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    if (e.pivots.size() != k) throw SpecificationError("basis columns are not independent");
    std::vector<Symbol> coeffs(k);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = e.reduced(i, k);
    return coeffs;
}

MatrixSpace::MatrixSpace(std::size_t rows, std::size_t cols, std::size_t q) : rows_(rows), cols_(cols), q_(q) {
    const std::size_t n = rows * cols;
    for (std::size_t i = 0; i < n; ++i) {
        if (size_ > std::numeric_limits<std::uint64_t>::max() / q_) {
            fits_ = false;
            break;
        }
        size_ *= q_;
    }
}

std::uint64_t MatrixSpace::size() const {
    if (!fits_) throw BudgetError("space of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " matrices over a field of size " + std::to_string(q_) + " is too large to enumerate");
    return size_;
}

Matrix MatrixSpace::at(std::uint64_t index) const {
    Matrix m(rows_, cols_);
    auto e = m.entries();
    for (std::size_t i = e.size(); i-- > 0;) {
        e[i] = static_cast<Symbol>(index % q_);
        index /= q_;
    }
    return m;
}

std::uint64_t MatrixSpace::index_of(const Matrix& m) const {
    if (!contains(m)) throw SpecificationError("matrix " + m.to_string() + " is not in the " + std::to_string(rows_) + "x" + std::to_string(cols_) + " space");
    std::uint64_t v = 0;
    for (auto s : m.entries()) v = v * q_ + s;
    return v;
}

bool MatrixSpace::contains(const Matrix& m) const noexcept {
    if (m.rows() != rows_ || m.cols() != cols_) return false;
    for (auto s : m.entries()) {
        if (s >= q_) return false;
    }
    return true;
}

}  // namespace gnc
