#include <doctest.h>

#include "gnc/errors.hpp"
#include "gnc/matrix.hpp"
#include "gnc/weights.hpp"

using namespace gnc;

namespace {

std::size_t nonzeros(const Matrix& z) {
    std::size_t n = 0;
    for (auto s : z.entries()) n += s != 0;
    return n;
}

// Column rank as the number of independent columns found greedily by span size.
std::size_t column_rank(const Field& f, const Matrix& z) {
    Matrix t(z.cols(), z.rows());
    for (std::size_t r = 0; r < z.rows(); ++r) {
        for (std::size_t c = 0; c < z.cols(); ++c) t(c, r) = z(r, c);
    }
    return rank(f, t);
}

}  // namespace

TEST_CASE("weight values") {
    const Field f2 = Field::prime(2);
    CHECK(WeightMeasure::hamming()(f2, Matrix(1, 4, {1, 0, 1, 1})) == 3);
    CHECK(WeightMeasure::rank()(f2, Matrix(2, 3, {1, 1, 0, 1, 1, 0})) == 1);
    CHECK(WeightMeasure::rank()(f2, Matrix(2, 3, {1, 0, 0, 0, 1, 0})) == 2);
    const auto sr = WeightMeasure::sum_rank({2, 2});
    CHECK(sr(f2, Matrix(2, 4, {1, 0, 1, 0, 0, 1, 0, 0})) == 3);
    CHECK(sr.max_weight(2, 4) == 4);
    CHECK(WeightMeasure::rank().max_weight(2, 3) == 2);
    CHECK(WeightMeasure::hamming().max_weight(1, 9) == 9);
    CHECK_THROWS_AS(sr.check_width(5), SpecificationError);
    CHECK_THROWS_AS(WeightMeasure::sum_rank({}), SpecificationError);
}

TEST_CASE("rank weight equals transpose rank") {
    const Field f = Field::prime(3);
    const MatrixSpace space(2, 3, 3);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        CHECK(WeightMeasure::rank()(f, space.at(i)) == column_rank(f, space.at(i)));
    }
}

TEST_CASE("decompose_rank is exact on every binary 2x3 matrix") {
    const Field f = Field::prime(2);
    const MatrixSpace space(2, 3, 2);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const Matrix z = space.at(i);
        const std::size_t w = column_rank(f, z);
        for (std::size_t c1 = 0; c1 <= w; ++c1) {
            const auto [z1, z2] = decompose_rank(f, z, c1, w - c1);
            CHECK(add(f, z1, z2) == z);
            CHECK(column_rank(f, z1) == c1);
            CHECK(column_rank(f, z2) == w - c1);
        }
    }
}

TEST_CASE("decompose_sum_rank is exact on every binary 2x4 matrix with blocks (2,2)") {
    const Field f = Field::prime(2);
    const MatrixSpace space(2, 4, 2);
    auto sr = [&](const Matrix& z) { return column_rank(f, z.column_block(0, 2)) + column_rank(f, z.column_block(2, 2)); };
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const Matrix z = space.at(i);
        const std::size_t w = sr(z);
        for (std::size_t c1 = 0; c1 <= w; ++c1) {
            const auto [z1, z2] = decompose_sum_rank(f, z, c1, w - c1, {2, 2});
            CHECK(add(f, z1, z2) == z);
            CHECK(sr(z1) == c1);
            CHECK(sr(z2) == w - c1);
        }
    }
}

TEST_CASE("decompose_hamming is exact on every ternary vector of length 4") {
    const Field f = Field::prime(3);
    const MatrixSpace space(1, 4, 3);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const Matrix z = space.at(i);
        const std::size_t w = nonzeros(z);
        for (std::size_t c1 = 0; c1 <= w; ++c1) {
            const auto [z1, z2] = decompose_hamming(z, c1, w - c1);
            CHECK(add(f, z1, z2) == z);
            CHECK(nonzeros(z1) == c1);
            CHECK(nonzeros(z2) == w - c1);
        }
    }
}

TEST_CASE("bad splits are rejected") {
    const Field f = Field::prime(2);
    CHECK_THROWS_AS(decompose_hamming(Matrix(1, 3, {1, 1, 0}), 2, 1), PreconditionError);
    CHECK_THROWS_AS(decompose_rank(f, Matrix(2, 2, {1, 0, 0, 1}), 0, 1), PreconditionError);
}

TEST_CASE("the three built-in weights satisfy every axiom") {
    const Field f2 = Field::prime(2);
    const Field f3 = Field::prime(3);
    CHECK(verify_weight_axioms(f3, 1, 4, WeightMeasure::hamming()).all_pass());
    CHECK(verify_weight_axioms(f2, 2, 3, WeightMeasure::rank()).all_pass());
    CHECK(verify_weight_axioms(f2, 2, 4, WeightMeasure::sum_rank({2, 2})).all_pass());
    const Field f4(FieldSpec{2, 2, {}});
    CHECK(verify_weight_axioms(f4, 2, 2, WeightMeasure::rank()).all_pass());
}

TEST_CASE("axiom checker catches broken weights") {
    const Field f = Field::prime(3);
    // Squared Hamming weight breaks the triangle inequality and decomposability.
    auto squared = [](const Matrix& z) {
        const std::size_t n = nonzeros(z);
        return n * n;
    };
    const auto rep = verify_weight_axioms(f, 1, 3, squared);
    CHECK(rep.zero_iff_zero.pass);
    CHECK_FALSE(rep.triangle.pass);
    CHECK_FALSE(rep.triangle.witness.empty());
    CHECK_FALSE(rep.decomposable.pass);

    // Counting only symbol 1 breaks inverse invariance and zero-iff-zero.
    auto ones = [](const Matrix& z) {
        std::size_t n = 0;
        for (auto s : z.entries()) n += s == 1;
        return n;
    };
    const auto rep2 = verify_weight_axioms(f, 1, 2, ones);
    CHECK_FALSE(rep2.inverse.pass);
    CHECK_FALSE(rep2.zero_iff_zero.pass);
}

TEST_CASE("pair checks beyond the budget are sampled deterministically") {
    const Field f = Field::prime(3);
    AxiomOptions opts;
    opts.max_pairs = 100;
    opts.seed = 7;
    const auto a = verify_weight_axioms(f, 1, 4, WeightMeasure::hamming(), opts);
    const auto b = verify_weight_axioms(f, 1, 4, WeightMeasure::hamming(), opts);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.triangle.instances == b.triangle.instances);
    CHECK(a.all_pass());
}
