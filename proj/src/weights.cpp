#include "gnc/weights.hpp"

#include <numeric>
#include <random>

#include "gnc/errors.hpp"

namespace gnc {

std::string to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::hamming: return "hamming";
        case WeightKind::rank: return "rank";
        case WeightKind::sum_rank: return "sum-rank";
    }
    return "?";
}

WeightKind weight_kind_from_string(const std::string& s) {
    if (s == "hamming") return WeightKind::hamming;
    if (s == "rank") return WeightKind::rank;
    if (s == "sum-rank" || s == "sum_rank") return WeightKind::sum_rank;
    throw SpecificationError("unknown weight kind '" + s + "' (expected hamming, rank or sum-rank)");
}

WeightMeasure WeightMeasure::sum_rank(std::vector<std::size_t> blocks) {
    if (blocks.empty()) throw SpecificationError("sum-rank weight needs at least one block");
    for (auto b : blocks) {
        if (b == 0) throw SpecificationError("sum-rank blocks must be positive");
    }
    return WeightMeasure(WeightKind::sum_rank, std::move(blocks));
}

void WeightMeasure::check_width(std::size_t cols) const {
    if (kind_ != WeightKind::sum_rank) return;
    const std::size_t total = std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
    if (total != cols) {
        throw SpecificationError("sum-rank blocks add up to " + std::to_string(total) + " but the error has " +
                                 std::to_string(cols) + " columns");
    }
}

std::size_t WeightMeasure::operator()(const Field& f, const Matrix& z) const {
    switch (kind_) {
        case WeightKind::hamming: return hamming_weight(z);
        case WeightKind::rank: return rank_weight(f, z);
        case WeightKind::sum_rank: return sum_rank_weight(f, z, blocks_);
    }
    return 0;
}

std::size_t WeightMeasure::max_weight(std::size_t rows, std::size_t cols) const {
    switch (kind_) {
        case WeightKind::hamming: return rows * cols;
        case WeightKind::rank: return std::min(rows, cols);
        case WeightKind::sum_rank: {
            check_width(cols);
            std::size_t total = 0;
            for (auto b : blocks_) total += std::min(rows, b);
            return total;
        }
    }
    return 0;
}

std::pair<Matrix, Matrix> WeightMeasure::decompose(const Field& f, const Matrix& z, std::size_t c1,
                                                   std::size_t c2) const {
    switch (kind_) {
        case WeightKind::hamming: return decompose_hamming(z, c1, c2);
        case WeightKind::rank: return decompose_rank(f, z, c1, c2);
        case WeightKind::sum_rank: return decompose_sum_rank(f, z, c1, c2, blocks_);
    }
    return {};
}

std::string WeightMeasure::describe() const {
    std::string s = to_string(kind_);
    if (kind_ == WeightKind::sum_rank) {
        s += " (";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(blocks_[i]);
        }
        s += ")";
    }
    return s;
}

std::size_t hamming_weight(const Matrix& z) {
    std::size_t w = 0;
    for (auto s : z.entries()) w += (s != 0);
    return w;
}

std::size_t rank_weight(const Field& f, const Matrix& z) { return rank(f, z); }

std::size_t sum_rank_weight(const Field& f, const Matrix& z, const std::vector<std::size_t>& blocks) {
    const auto measure = WeightMeasure::sum_rank(blocks);
    measure.check_width(z.cols());
    std::size_t w = 0;
    std::size_t first = 0;
    for (auto b : blocks) {
        w += rank(f, z.column_block(first, b));
        first += b;
    }
    return w;
}

std::pair<Matrix, Matrix> decompose_hamming(const Matrix& z, std::size_t c1, std::size_t c2) {
    const std::size_t w = hamming_weight(z);
    if (c1 + c2 != w) {
        throw PreconditionError("split " + std::to_string(c1) + "+" + std::to_string(c2) +
                                " does not match Hamming weight " + std::to_string(w));
    }
    Matrix z1(z.rows(), z.cols());
    Matrix z2(z.rows(), z.cols());
    auto src = z.entries();
    auto a = z1.entries();
    auto b = z2.entries();
    std::size_t seen = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0) continue;
        (seen < c1 ? a : b)[i] = src[i];
        ++seen;
    }
    return {std::move(z1), std::move(z2)};
}

std::pair<Matrix, Matrix> decompose_rank(const Field& f, const Matrix& z, std::size_t c1, std::size_t c2) {
    const std::vector<std::size_t> pivots = pivot_columns(f, z);
    if (c1 + c2 != pivots.size()) {
        throw PreconditionError("split " + std::to_string(c1) + "+" + std::to_string(c2) +
                                " does not match rank " + std::to_string(pivots.size()));
    }
    Matrix z1(z.rows(), z.cols());
    Matrix z2(z.rows(), z.cols());
    if (pivots.empty()) return {std::move(z1), std::move(z2)};

    Matrix basis(z.rows(), pivots.size());
    std::vector<bool> is_pivot(z.cols(), false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        basis.set_column(i, z.column(pivots[i]));
        is_pivot[pivots[i]] = true;
        (i < c1 ? z1 : z2).set_column(pivots[i], z.column(pivots[i]));
    }
    for (std::size_t j = 0; j < z.cols(); ++j) {
        if (is_pivot[j]) continue;
        const auto coords = coordinates_in_span(f, basis, z.column(j));
        if (!coords) throw ConsistencyError("column outside the span of the pivot columns");
        std::vector<Symbol> head(z.rows(), 0);
        std::vector<Symbol> tail(z.rows(), 0);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            auto& target = i < c1 ? head : tail;
            const Symbol a = (*coords)[i];
            if (a == 0) continue;
            for (std::size_t r = 0; r < z.rows(); ++r) target[r] = f.add(target[r], f.mul(a, basis(r, i)));
        }
        z1.set_column(j, head);
        z2.set_column(j, tail);
    }
    return {std::move(z1), std::move(z2)};
}

std::pair<Matrix, Matrix> decompose_sum_rank(const Field& f, const Matrix& z, std::size_t c1, std::size_t c2,
                                             const std::vector<std::size_t>& blocks) {
    const auto measure = WeightMeasure::sum_rank(blocks);
    measure.check_width(z.cols());
    std::vector<std::size_t> ranks;
    std::size_t total = 0;
    for (std::size_t i = 0, first = 0; i < blocks.size(); first += blocks[i], ++i) {
        ranks.push_back(rank(f, z.column_block(first, blocks[i])));
        total += ranks.back();
    }
    if (c1 + c2 != total) {
        throw PreconditionError("split " + std::to_string(c1) + "+" + std::to_string(c2) +
                                " does not match sum-rank weight " + std::to_string(total));
    }
    Matrix z1(z.rows(), z.cols());
    Matrix z2(z.rows(), z.cols());
    std::size_t remaining = c1;
    for (std::size_t i = 0, first = 0; i < blocks.size(); first += blocks[i], ++i) {
        const std::size_t e = std::min(ranks[i], remaining);
        remaining -= e;
        auto [b1, b2] = decompose_rank(f, z.column_block(first, blocks[i]), e, ranks[i] - e);
        for (std::size_t c = 0; c < blocks[i]; ++c) {
            z1.set_column(first + c, b1.column(c));
            z2.set_column(first + c, b2.column(c));
        }
    }
    return {std::move(z1), std::move(z2)};
}

namespace {

std::string pair_text(const Matrix& a, const Matrix& b) { return "z=[" + a.to_string() + "], z'=[" + b.to_string() + "]"; }

}  // namespace

AxiomReport verify_weight_axioms(const Field& f, std::size_t rows, std::size_t cols, const WeightFn& w,
                                 const DecomposeFn& decompose, const AxiomOptions& options) {
    AxiomReport report;
    const MatrixSpace space(rows, cols, f.size());
    const std::uint64_t n = space.size();
    std::vector<Matrix> elems;
    std::vector<std::size_t> weights;
    elems.reserve(n);
    weights.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        elems.push_back(space.at(i));
        weights.push_back(w(elems.back()));
    }

    for (std::uint64_t i = 0; i < n; ++i) {
        ++report.zero_iff_zero.instances;
        if ((weights[i] == 0) != elems[i].is_zero() && report.zero_iff_zero.pass) {
            report.zero_iff_zero.pass = false;
            report.zero_iff_zero.witness =
                "z=[" + elems[i].to_string() + "] has weight " + std::to_string(weights[i]);
        }
        ++report.inverse.instances;
        const std::size_t wn = w(negate(f, elems[i]));
        if (wn != weights[i] && report.inverse.pass) {
            report.inverse.pass = false;
            report.inverse.witness = "w(-z) = " + std::to_string(wn) + " != w(z) = " + std::to_string(weights[i]) +
                                     " for z=[" + elems[i].to_string() + "]";
        }
    }

    auto check_triangle = [&](std::uint64_t i, std::uint64_t j) {
        ++report.triangle.instances;
        const std::uint64_t s = space.index_of(add(f, elems[i], elems[j]));
        if (weights[s] > weights[i] + weights[j] && report.triangle.pass) {
            report.triangle.pass = false;
            report.triangle.witness = pair_text(elems[i], elems[j]) + ": w(z+z') = " + std::to_string(weights[s]);
        }
    };
    std::mt19937_64 rng(options.seed);
    const bool sample_pairs = n > 0 && n > options.max_pairs / n;
    if (sample_pairs) {
        report.exhaustive = false;
        std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
        for (std::uint64_t t = 0; t < options.max_pairs; ++t) check_triangle(pick(rng), pick(rng));
    } else {
        for (std::uint64_t i = 0; i < n; ++i) {
            for (std::uint64_t j = 0; j < n; ++j) check_triangle(i, j);
        }
    }

    auto check_split = [&](std::uint64_t i) {
        const Matrix& z = elems[i];
        for (std::size_t c1 = 0; c1 <= weights[i]; ++c1) {
            const std::size_t c2 = weights[i] - c1;
            ++report.decomposable.instances;
            bool ok = false;
            if (decompose) {
                try {
                    auto [z1, z2] = decompose(z, c1, c2);
                    ok = add(f, z1, z2) == z && w(z1) == c1 && w(z2) == c2;
                } catch (const Error&) {
                    ok = false;
                }
            } else {
                for (std::uint64_t a = 0; a < n && !ok; ++a) {
                    if (weights[a] != c1) continue;
                    ok = weights[space.index_of(sub(f, z, elems[a]))] == c2;
                }
            }
            if (!ok && report.decomposable.pass) {
                report.decomposable.pass = false;
                report.decomposable.witness = "z=[" + z.to_string() + "] has no split " + std::to_string(c1) + "+" +
                                              std::to_string(c2);
            }
        }
    };
    // Search-based decomposition costs about n per split; the explicit one is cheap.
    const bool sample_splits = !decompose && n > 0 && n > options.max_pairs / n;
    if (sample_splits) {
        report.exhaustive = false;
        std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
        const std::uint64_t count = std::max<std::uint64_t>(1, options.max_pairs / n);
        for (std::uint64_t t = 0; t < count; ++t) check_split(pick(rng));
    } else {
        for (std::uint64_t i = 0; i < n; ++i) check_split(i);
    }
    return report;
}

AxiomReport verify_weight_axioms(const Field& f, std::size_t rows, std::size_t cols, const WeightMeasure& measure,
                                 const AxiomOptions& options) {
    measure.check_width(cols);
    return verify_weight_axioms(
        f, rows, cols, [&](const Matrix& z) { return measure(f, z); },
        [&](const Matrix& z, std::size_t c1, std::size_t c2) { return measure.decompose(f, z, c1, c2); }, options);
}

}  // namespace gnc
