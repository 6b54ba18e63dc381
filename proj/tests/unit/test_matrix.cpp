#include <doctest.h>

#include <set>

#include "gnc/errors.hpp"
#include "gnc/matrix.hpp"

using namespace gnc;

namespace {

// Rank through the size of the row span: |span| = q^rank.
std::size_t rank_by_span(const Field& f, const Matrix& m) {
    std::set<std::vector<Symbol>> span;
    const std::size_t q = f.size();
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) combos *= q;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
        std::vector<Symbol> v(m.cols(), 0);
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Symbol coef = static_cast<Symbol>(rest % q);
            rest /= q;
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = f.add(v[j], f.mul(coef, m(i, j)));
        }
        span.insert(v);
    }
    std::size_t r = 0;
    for (std::size_t n = 1; n < span.size(); n *= q) ++r;
    return r;
}

}  // namespace

TEST_CASE("rank agrees with the span-size oracle on all 2x3 ternary matrices") {
    const Field f = Field::prime(3);
    const MatrixSpace space(2, 3, 3);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const Matrix m = space.at(i);
        CHECK(rank(f, m) == rank_by_span(f, m));
    }
}

TEST_CASE("rank over GF(4)") {
    const Field f(FieldSpec{2, 2, {}});
    const MatrixSpace space(2, 2, 4);
    for (std::uint64_t i = 0; i < space.size(); ++i) CHECK(rank(f, space.at(i)) == rank_by_span(f, space.at(i)));
}

TEST_CASE("matrix space indexing round trips, entry (0,0) most significant") {
    const MatrixSpace space(2, 2, 3);
    CHECK(space.size() == 81);
    CHECK(space.at(1) == Matrix(2, 2, {0, 0, 0, 1}));
    CHECK(space.at(27) == Matrix(2, 2, {1, 0, 0, 0}));
    for (std::uint64_t i = 0; i < space.size(); ++i) CHECK(space.index_of(space.at(i)) == i);
    CHECK_FALSE(space.contains(Matrix(2, 2, {0, 3, 0, 0})));
    CHECK_FALSE(space.contains(Matrix(1, 4)));
}

TEST_CASE("products, sums and span coordinates") {
    const Field f = Field::prime(3);
    const Matrix a(2, 2, {1, 2, 0, 1});
    const Matrix b(2, 1, {2, 1});
    CHECK(multiply(f, a, b) == Matrix(2, 1, {1, 1}));
    CHECK(add(f, a, negate(f, a)).is_zero());
    CHECK(sub(f, a, a).is_zero());
    CHECK(scale(f, 2, a) == Matrix(2, 2, {2, 1, 0, 2}));
    const Matrix basis(3, 2, {1, 0, 0, 1, 1, 1});  // columns (1,0,1) and (0,1,1)
    const std::vector<Symbol> v{2, 1, 0};
    const auto coords = coordinates_in_span(f, basis, v);
    REQUIRE(coords);
    CHECK(*coords == std::vector<Symbol>{2, 1});
    const std::vector<Symbol> w{1, 0, 0};
    CHECK_FALSE(coordinates_in_span(f, basis, w));
}

TEST_CASE("row reduction") {
    const Field f = Field::prime(2);
    const auto e = row_reduce(f, Matrix(2, 3, {1, 1, 0, 1, 1, 1}));
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
    CHECK(e.reduced == Matrix(2, 3, {1, 1, 0, 0, 0, 1}));
    CHECK(Matrix(2, 3, {1, 2, 3, 4, 5, 6}).to_string() == "1,2,3;4,5,6");
}

TEST_CASE("shape mismatches are rejected") {
    const Field f = Field::prime(2);
    CHECK_THROWS_AS(add(f, Matrix(1, 2), Matrix(2, 1)), SpecificationError);
    CHECK_THROWS_AS(multiply(f, Matrix(1, 2), Matrix(1, 2)), SpecificationError);
}
