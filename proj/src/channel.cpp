#include "gnc/channel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "gnc/errors.hpp"

namespace gnc {

namespace {

void require_in_field(const Field& f, const Matrix& m, const std::string& what) {
    for (auto s : m.entries()) {
        if (!f.contains(s)) {
            throw SpecificationError(what + " [" + m.to_string() + "] has a symbol outside " + f.describe());
        }
    }
}

MatrixSpace checked_space(Shape shape, std::size_t q, const std::string& what) {
    MatrixSpace space(shape.rows, shape.cols, q);
    if (!space.fits_u64()) {
        throw BudgetError(what + " of shape " + shape.to_string() + " is too large to enumerate");
    }
    return space;
}

}  // namespace

Channel::Channel(ChannelParts parts)
    : field_(std::move(parts.field)),
      codewords_(std::move(parts.codewords)),
      error_shape_(parts.error_shape),
      weight_(std::move(parts.weight)),
      output_shape_(parts.output_shape),
      transfer_(std::move(parts.transfer)),
      budget_(parts.budget),
      errors_(checked_space(parts.error_shape, field_.size(), "error space")),
      outputs_(checked_space(parts.output_shape, field_.size(), "output space")) {
    if (!transfer_) throw SpecificationError("channel has no transfer function");
    if (codewords_.size() < 2) {
        throw SpecificationError("a code needs at least two codewords, got " + std::to_string(codewords_.size()));
    }
    const Shape cw = shape_of(codewords_.front());
    if (cw.entries() == 0) throw SpecificationError("codewords must have at least one entry");
    for (const auto& x : codewords_) {
        if (shape_of(x) != cw) {
            throw SpecificationError("codeword [" + x.to_string() + "] has shape " + shape_of(x).to_string() +
                                     ", expected " + cw.to_string());
        }
        require_in_field(field_, x, "codeword");
    }
    if (error_shape_.entries() == 0) throw SpecificationError("error space must have at least one coordinate");
    if (output_shape_.entries() == 0) throw SpecificationError("output space must have at least one coordinate");
    weight_.check_width(error_shape_.cols);

    num_errors_ = errors_.size();
    if (num_errors_ > budget_.max_pairs / codewords_.size()) {
        throw BudgetError(std::to_string(codewords_.size()) + " codewords times " + std::to_string(num_errors_) +
                          " errors exceeds the budget of " + std::to_string(budget_.max_pairs) + " pairs");
    }

    error_weights_.resize(num_errors_);
    for (std::uint64_t i = 0; i < num_errors_; ++i) {
        const std::size_t w = weight_(field_, errors_.at(i));
        error_weights_[i] = static_cast<std::uint16_t>(w);
        max_weight_ = std::max(max_weight_, w);
    }
    by_weight_.resize(num_errors_);
    std::iota(by_weight_.begin(), by_weight_.end(), std::uint64_t{0});
    std::stable_sort(by_weight_.begin(), by_weight_.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return error_weights_[a] < error_weights_[b]; });

    const Matrix zero = zero_error();
    std::unordered_map<std::uint64_t, std::size_t> seen;
    for (std::size_t i = 0; i < codewords_.size(); ++i) {
        const Matrix y = evaluate(i, zero);
        auto [it, inserted] = seen.emplace(output_key(y), i);
        if (!inserted) {
            const std::size_t j = it->second;
            throw ConstructionError("codewords #" + std::to_string(j) + " [" + codewords_[j].to_string() + "] and #" +
                                    std::to_string(i) + " [" + codewords_[i].to_string() +
                                    "] produce the same output [" + y.to_string() + "] without errors");
        }
    }
}

Channel make_channel(ChannelParts parts) { return Channel(std::move(parts)); }

std::optional<std::size_t> Channel::codeword_index(const Matrix& x) const {
    for (std::size_t i = 0; i < codewords_.size(); ++i) {
        if (codewords_[i] == x) return i;
    }
    return std::nullopt;
}

std::uint64_t Channel::error_index(const Matrix& z) const {
    if (!errors_.contains(z)) {
        throw PreconditionError("[" + z.to_string() + "] is not an error of shape " + error_shape_.to_string() +
                                " over " + field_.describe());
    }
    return errors_.index_of(z);
}

std::size_t Channel::weight(const Matrix& z) const { return error_weights_[error_index(z)]; }

Matrix Channel::evaluate(std::size_t xi, const Matrix& z) const {
    if (xi >= codewords_.size()) throw PreconditionError("codeword index " + std::to_string(xi) + " out of range");
    if (!errors_.contains(z)) {
        throw PreconditionError("[" + z.to_string() + "] is not an error of shape " + error_shape_.to_string() +
                                " over " + field_.describe());
    }
    Matrix y = transfer_->apply(xi, codewords_[xi], z);
    if (!outputs_.contains(y)) {
        throw SpecificationError(transfer_->kind() + " transfer produced [" + y.to_string() +
                                 "], which is not an output of shape " + output_shape_.to_string());
    }
    return y;
}

Matrix Channel::evaluate(const Matrix& x, const Matrix& z) const {
    const auto xi = codeword_index(x);
    if (!xi) throw PreconditionError("[" + x.to_string() + "] is not a codeword");
    return evaluate(*xi, z);
}

std::uint64_t Channel::output_key(const Matrix& y) const {
    if (!outputs_.contains(y)) {
        throw PreconditionError("[" + y.to_string() + "] is not an output of shape " + output_shape_.to_string() +
                                " over " + field_.describe());
    }
    return outputs_.index_of(y);
}

std::string Channel::describe() const {
    std::ostringstream os;
    os << kind() << " channel over " << field_.describe() << ": " << codewords_.size() << " codewords of shape "
       << codeword_shape().to_string() << ", " << num_errors_ << " errors of shape " << error_shape_.to_string()
       << " (" << weight_.describe() << ", max weight " << max_weight_ << "), outputs of shape "
       << output_shape_.to_string();
    return os.str();
}

namespace {

class ClassicalTransfer final : public Transfer {
public:
    explicit ClassicalTransfer(Field f) : f_(std::move(f)) {}
    Matrix apply(std::size_t, const Matrix& x, const Matrix& z) const override { return add(f_, x, z); }
    std::string kind() const override { return "classical"; }

private:
    Field f_;
};

class MatrixTransfer final : public Transfer {
public:
    MatrixTransfer(Field f, Matrix a, Matrix b) : f_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {}
    Matrix apply(std::size_t, const Matrix& x, const Matrix& z) const override {
        return add(f_, multiply(f_, x, a_), multiply(f_, z, b_));
    }
    std::string kind() const override { return "matrix"; }

private:
    Field f_;
    Matrix a_, b_;
};

class TableTransfer final : public Transfer {
public:
    TableTransfer(MatrixSpace errors, std::vector<Matrix> outputs)
        : errors_(errors), outputs_(std::move(outputs)) {}
    Matrix apply(std::size_t xi, const Matrix&, const Matrix& z) const override {
        return outputs_.at(xi * errors_.size() + errors_.index_of(z));
    }
    std::string kind() const override { return "table"; }

private:
    MatrixSpace errors_;
    std::vector<Matrix> outputs_;
};

}  // namespace

Channel classical_channel(const Field& f, std::vector<Matrix> codewords, Budget budget) {
    if (codewords.empty()) throw SpecificationError("a code needs at least two codewords, got 0");
    const Shape shape = shape_of(codewords.front());
    ChannelParts parts;
    parts.field = f;
    parts.codewords = std::move(codewords);
    parts.error_shape = shape;
    parts.weight = WeightMeasure::hamming();
    parts.output_shape = shape;
    parts.transfer = std::make_shared<ClassicalTransfer>(f);
    parts.budget = budget;
    return make_channel(std::move(parts));
}

Channel matrix_channel(const Field& f, std::vector<Matrix> codewords, Matrix a, Matrix b, WeightMeasure weight,
                       Budget budget) {
    if (codewords.empty()) throw SpecificationError("a code needs at least two codewords, got 0");
    const Shape shape = shape_of(codewords.front());
    if (shape.cols != a.rows()) {
        throw SpecificationError("codewords have " + std::to_string(shape.cols) + " columns but A has " +
                                 std::to_string(a.rows()) + " rows");
    }
    if (a.cols() != b.cols()) {
        throw SpecificationError("x*A has " + std::to_string(a.cols()) + " columns but z*B has " +
                                 std::to_string(b.cols()));
    }
    require_in_field(f, a, "matrix A");
    require_in_field(f, b, "matrix B");
    ChannelParts parts;
    parts.field = f;
    parts.codewords = std::move(codewords);
    parts.error_shape = Shape{shape.rows, b.rows()};
    parts.weight = std::move(weight);
    parts.output_shape = Shape{shape.rows, a.cols()};
    parts.transfer = std::make_shared<MatrixTransfer>(f, std::move(a), std::move(b));
    parts.budget = budget;
    return make_channel(std::move(parts));
}

Channel table_channel(const Field& f, std::vector<Matrix> codewords, Shape error_shape, WeightMeasure weight,
                      Shape output_shape, std::vector<Matrix> outputs, Budget budget) {
    const MatrixSpace errors = checked_space(error_shape, f.size(), "error space");
    const std::uint64_t n = errors.size();
    if (n > budget.max_pairs / std::max<std::size_t>(1, codewords.size())) {
        throw BudgetError("table channel exceeds the budget of " + std::to_string(budget.max_pairs) + " pairs");
    }
    if (outputs.size() != codewords.size() * n) {
        throw SpecificationError("transfer table has " + std::to_string(outputs.size()) + " rows, expected " +
                                 std::to_string(codewords.size() * n) + " (every codeword with every error)");
    }
    ChannelParts parts;
    parts.field = f;
    parts.codewords = std::move(codewords);
    parts.error_shape = error_shape;
    parts.weight = std::move(weight);
    parts.output_shape = output_shape;
    parts.transfer = std::make_shared<TableTransfer>(errors, std::move(outputs));
    parts.budget = budget;
    return make_channel(std::move(parts));
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

std::vector<Matrix> span_codewords(const Field& f, const Matrix& generator) {
    require_in_field(f, generator, "generator");
    if (rank(f, generator) != generator.rows()) {
        throw SpecificationError("generator rows are linearly dependent");
    }
    const MatrixSpace messages = checked_space(Shape{1, generator.rows()}, f.size(), "message space");
    std::vector<Matrix> out;
    out.reserve(messages.size());
    for (std::uint64_t i = 0; i < messages.size(); ++i) out.push_back(multiply(f, messages.at(i), generator));
    return out;
}

std::vector<Matrix> whole_space(const Field& f, Shape shape) {
    const MatrixSpace space = checked_space(shape, f.size(), "codeword space");
    std::vector<Matrix> out;
    out.reserve(space.size());
    for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
    return out;
}

namespace {

Matrix flatten(const Matrix& m) {
    return Matrix(1, m.size(), std::vector<Symbol>(m.entries().begin(), m.entries().end()));
}

std::string show(const Matrix& m) { return "[" + m.to_string() + "]"; }

}  // namespace

ChannelClass classify(const Channel& ch) {
    const Field& f = ch.field();
    const std::uint64_t n = ch.num_errors();
    ChannelClass out;

    std::vector<Matrix> zero_out;
    for (std::size_t i = 0; i < ch.num_codewords(); ++i) zero_out.push_back(ch.evaluate(i, ch.zero_error()));

    std::vector<Matrix> h(n);
    for (std::uint64_t zi = 0; zi < n; ++zi) h[zi] = sub(f, ch.evaluate(0, ch.error_at(zi)), zero_out[0]);

    bool split_ok = true;
    for (std::size_t xi = 1; xi < ch.num_codewords() && split_ok; ++xi) {
        for (std::uint64_t zi = 0; zi < n; ++zi) {
            const Matrix z = ch.error_at(zi);
            const Matrix y = ch.evaluate(xi, z);
            if (y != add(f, zero_out[xi], h[zi])) {
                split_ok = false;
                out.witness = "F(x,z) != F(x,0) + h(z) at x=" + show(ch.codeword(xi)) + ", z=" + show(z) +
                              ": F(x,z)=" + show(y) + ", F(x,0)+h(z)=" + show(add(f, zero_out[xi], h[zi]));
                break;
            }
        }
    }
    if (!split_ok) return out;

    // Additivity of h: peel off one prime-subfield basis vector u from z and
    // require h(z) = h(z - u) + h(u). By induction on the digit sum this is
    // equivalent to h being a group homomorphism.
    const std::uint32_t p = f.characteristic();
    const MatrixSpace space(ch.error_shape().rows, ch.error_shape().cols, f.size());
    for (std::uint64_t zi = 1; zi < n; ++zi) {
        const Matrix z = ch.error_at(zi);
        auto e = z.entries();
        std::size_t j = 0;
        while (e[j] == 0) ++j;
        const auto coeffs = f.coefficients(e[j]);
        std::size_t t = 0;
        while (coeffs[t] == 0) ++t;
        std::uint32_t unit = 1;
        for (std::size_t i = 0; i < t; ++i) unit *= p;
        Matrix u = ch.zero_error();
        u.entries()[j] = static_cast<Symbol>(unit);
        const Matrix rest = sub(f, z, u);
        const std::uint64_t ri = space.index_of(rest);
        const std::uint64_t ui = space.index_of(u);
        if (h[zi] != add(f, h[ri], h[ui])) {
            out.witness = "h is not additive: z=" + show(rest) + ", z'=" + show(u) + ": h(z+z')=" + show(h[zi]) +
                          ", h(z)+h(z')=" + show(add(f, h[ri], h[ui]));
            return out;
        }
    }
    out.error_linear = true;

    // Rank of the codeword set decides whether C is a subspace.
    Matrix stacked(ch.num_codewords(), ch.codeword_shape().entries());
    for (std::size_t i = 0; i < ch.num_codewords(); ++i) {
        for (std::size_t k = 0; k < stacked.cols(); ++k) stacked(i, k) = ch.codeword(i).entries()[k];
    }
    const std::size_t r = rank(f, stacked);
    std::uint64_t span_size = 1;
    bool too_big = false;
    for (std::size_t i = 0; i < r; ++i) {
        if (span_size > ch.num_codewords()) {
            too_big = true;
            break;
        }
        span_size *= f.size();
    }
    out.code_linear = !too_big && span_size == ch.num_codewords();

    bool linear = true;
    for (std::size_t j = 0; j < ch.error_shape().entries() && linear; ++j) {
        Matrix u = ch.zero_error();
        u.entries()[j] = 1;
        const Matrix hu = h[space.index_of(u)];
        for (std::size_t lambda = 2; lambda < f.size(); ++lambda) {
            u.entries()[j] = static_cast<Symbol>(lambda);
            const Matrix scaled = scale(f, static_cast<Symbol>(lambda), hu);
            if (h[space.index_of(u)] != scaled) {
                linear = false;
                out.witness = "h is not F_q-homogeneous: h(" + show(u) + ")=" + show(h[space.index_of(u)]) +
                              " but " + std::to_string(lambda) + "*h(unit)=" + show(scaled);
                break;
            }
        }
    }

    // f extends to a linear map iff it respects every linear relation among
    // codewords; relations expressing each codeword over an independent
    // subset generate all of them.
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < ch.num_codewords() && linear; ++i) {
        const Matrix v = flatten(ch.codeword(i));
        Matrix b(v.cols(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) b.set_column(c, flatten(ch.codeword(basis[c])).entries());
        const auto coords = coordinates_in_span(f, b, v.entries());
        if (!coords) {
            basis.push_back(i);
            continue;
        }
        Matrix expect(zero_out[i].rows(), zero_out[i].cols());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            expect = add(f, expect, scale(f, (*coords)[c], zero_out[basis[c]]));
        }
        if (expect != zero_out[i]) {
            linear = false;
            out.witness = "x -> F(x,0) is not linear on the code: F(" + show(ch.codeword(i)) +
                          ",0)=" + show(zero_out[i]) + " but the combination of earlier codewords gives " +
                          show(expect);
        }
    }
    out.linear = linear;
    return out;
}

std::vector<WeightedError> enumerate_errors_up_to(const Channel& ch, std::size_t c) {
    std::vector<WeightedError> out;
    for (auto zi : ch.errors_by_weight()) {
        const std::size_t w = ch.error_weight(zi);
        if (w > c) break;
        out.push_back({ch.error_at(zi), w, zi});
    }
    return out;
}

}  // namespace gnc
