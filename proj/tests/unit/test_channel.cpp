#include <doctest.h>

#include "gnc/channel.hpp"
#include "gnc/errors.hpp"

using namespace gnc;

namespace {

Matrix vec(std::vector<Symbol> v) { return Matrix::row_vector(std::move(v)); }

}  // namespace

TEST_CASE("classical channel adds the error") {
    const Field f = Field::prime(3);
    const Channel ch = classical_channel(f, {vec({0, 0, 0}), vec({1, 1, 1})});
    CHECK(ch.kind() == "classical");
    CHECK(ch.num_errors() == 27);
    CHECK(ch.max_weight() == 3);
    CHECK(ch.evaluate(1, vec({2, 0, 1})) == vec({0, 1, 2}));
    CHECK(ch.output_shape() == Shape{1, 3});
    CHECK(ch.codeword_index(vec({1, 1, 1})) == std::optional<std::size_t>(1));
    CHECK_FALSE(ch.codeword_index(vec({2, 2, 2})));
}

TEST_CASE("errors come sorted by weight") {
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0, 0}), vec({1, 1, 1})});
    std::size_t last = 0;
    for (auto idx : ch.errors_by_weight()) {
        CHECK(ch.error_weight(idx) >= last);
        last = ch.error_weight(idx);
    }
    const auto upto1 = enumerate_errors_up_to(ch, 1);
    CHECK(upto1.size() == 4);
    CHECK(upto1.front().z.is_zero());
}

TEST_CASE("channel construction rejects bad inputs") {
    const Field f = Field::prime(2);
    CHECK_THROWS_AS(classical_channel(f, {vec({0, 1})}), SpecificationError);
    CHECK_THROWS_AS(classical_channel(f, {vec({0, 1}), vec({1, 1, 0})}), SpecificationError);
    CHECK_THROWS_AS(classical_channel(f, {vec({0, 2}), vec({1, 1})}), SpecificationError);
    // x*A collapses both codewords onto the same output.
    CHECK_THROWS_AS(matrix_channel(f, {vec({1, 0}), vec({0, 1})}, Matrix(2, 1, {1, 1}), Matrix(1, 1, {1}),
                                   WeightMeasure::hamming()),
                    ConstructionError);
    Budget tiny;
    tiny.max_pairs = 10;
    CHECK_THROWS_AS(classical_channel(f, {vec({0, 0, 0}), vec({1, 1, 1})}, tiny), BudgetError);
}

TEST_CASE("matrix channel under rank weight") {
    const Field f = Field::prime(2);
    const Matrix a = Matrix::identity(2);
    const Matrix b(2, 2, {1, 1, 0, 1});
    const Channel ch = matrix_channel(f, {Matrix(2, 2, {0, 0, 0, 0}), Matrix(2, 2, {1, 0, 0, 1})}, a, b,
                                      WeightMeasure::rank());
    CHECK(ch.error_shape() == Shape{2, 2});
    CHECK(ch.output_shape() == Shape{2, 2});
    CHECK(ch.max_weight() == 2);
    const Matrix z(2, 2, {1, 0, 1, 0});
    CHECK(ch.evaluate(0, z) == multiply(f, z, b));
    const auto cls = classify(ch);
    CHECK(cls.error_linear);
    CHECK(cls.linear);
    CHECK(cls.code_linear);
}

TEST_CASE("table channel and classification") {
    const Field f = Field::prime(2);
    // F(x, z) = x + z except that x1 with z = (1) maps to (0,0): not error-linear.
    std::vector<Matrix> rows = {vec({0, 0}), vec({0, 1}), vec({1, 1}), vec({0, 0})};
    const Channel ch = table_channel(f, {vec({0}), vec({1})}, Shape{1, 1}, WeightMeasure::hamming(), Shape{1, 2}, rows);
    CHECK(ch.kind() == "table");
    CHECK(ch.evaluate(1, vec({1})) == vec({0, 0}));
    const auto cls = classify(ch);
    CHECK_FALSE(cls.error_linear);
    CHECK_FALSE(cls.witness.empty());

    // Table of a linear map stays linear.
    std::vector<Matrix> lin = {vec({0, 0}), vec({0, 1}), vec({1, 1}), vec({1, 0})};
    const auto cls2 = classify(
        table_channel(f, {vec({0}), vec({1})}, Shape{1, 1}, WeightMeasure::hamming(), Shape{1, 2}, lin));
    CHECK(cls2.error_linear);
    CHECK(cls2.linear);
}

TEST_CASE("error-linear but not linear: nonlinear codeword map") {
    const Field f = Field::prime(3);
    // f(x) for x = 0, 1, 2 is 0, 1, 1 + 1 = 2 in the first slot but the second slot squares x.
    std::vector<Matrix> rows;
    const std::vector<Matrix> fx = {vec({0, 0}), vec({1, 1}), vec({2, 1})};
    for (const auto& y : fx) {
        for (Symbol z = 0; z < 3; ++z) rows.push_back(vec({static_cast<Symbol>((y(0, 0) + z) % 3), y(0, 1)}));
    }
    const Channel ch = table_channel(f, {vec({0}), vec({1}), vec({2})}, Shape{1, 1}, WeightMeasure::hamming(),
                                     Shape{1, 2}, rows);
    const auto cls = classify(ch);
    CHECK(cls.error_linear);
    CHECK_FALSE(cls.linear);
    CHECK(cls.code_linear);
}

TEST_CASE("code helpers") {
    const Field f = Field::prime(2);
    const auto code = span_codewords(f, Matrix(2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK(code.size() == 4);
    CHECK(whole_space(f, Shape{1, 3}).size() == 8);
    CHECK_THROWS_AS(span_codewords(f, Matrix(2, 2, {1, 1, 1, 1})), SpecificationError);
    const Matrix bd = block_diagonal({Matrix(1, 1, {1}), Matrix(1, 2, {1, 1})});
    CHECK(bd == Matrix(2, 3, {1, 0, 0, 0, 1, 1}));
}
