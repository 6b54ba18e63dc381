#include <doctest.h>

#include <vector>

#include "gnc/errors.hpp"
#include "gnc/field.hpp"

using namespace gnc;

namespace {

// Schoolbook polynomial product reduced by a monic modulus, coefficients constant first.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t k = mod.size() - 1;
    for (std::size_t d = prod.size(); d-- > k;) {
        const std::uint32_t lead = prod[d];
        if (lead == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - lead) * mod[i]) % p;
    }
    prod.resize(k);
    return prod;
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const Field f = Field::prime(p);
        CHECK(f.size() == p);
        for (Symbol a = 0; a < p; ++a) {
            for (Symbol b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == (a * b) % p);
                CHECK(f.sub(a, b) == (a + p - b) % p);
            }
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("extension field multiplication agrees with polynomial arithmetic") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        const Field f(FieldSpec{p, k, {}});
        const auto mod = f.modulus();
        REQUIRE(mod.size() == k + 1);
        CHECK(is_irreducible(p, mod));
        for (Symbol a = 0; a < f.size(); ++a) {
            for (Symbol b = 0; b < f.size(); ++b) {
                const auto expect = poly_mulmod(f.coefficients(a), f.coefficients(b), mod, p);
                CHECK(f.coefficients(f.mul(a, b)) == expect);
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively in GF(9)") {
    const Field f(FieldSpec{3, 2, {}});
    for (Symbol a = 0; a < 9; ++a) {
        CHECK(f.add(a, f.neg(a)) == 0);
        for (Symbol b = 0; b < 9; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (Symbol c = 0; c < 9; ++c) {
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            }
        }
    }
}

TEST_CASE("least irreducible polynomials") {
    CHECK(least_irreducible(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(least_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(least_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
    CHECK_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 0, 1}));
}

TEST_CASE("enumeration order and symbols") {
    const Field f(FieldSpec{2, 2, {}});
    const auto all = enumerate_field(f);
    REQUIRE(all.size() == 4);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].value() == i);
    CHECK(f.coefficients(2) == std::vector<std::uint32_t>{0, 1});
    CHECK(ff_mul(all[2], ff_inv(all[2])).value() == 1);
}

TEST_CASE("invalid fields are rejected") {
    CHECK_THROWS_AS(Field(FieldSpec{4, 1, {}}), SpecificationError);
    CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 0, 1}}), SpecificationError);
    CHECK_THROWS_AS(Field(FieldSpec{2, 9, {}}), SpecificationError);
    CHECK_THROWS_AS(Field::prime(5).inv(0), DivisionByZeroError);
}
