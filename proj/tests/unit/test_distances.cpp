#include <doctest.h>

#include <set>

#include "../oracle/oracle.hpp"
#include "gnc/distances.hpp"
#include "gnc/errors.hpp"
#include "gnc/network.hpp"
#include "gnc/properties.hpp"

using namespace gnc;

namespace {

Matrix vec(std::vector<Symbol> v) { return Matrix::row_vector(std::move(v)); }

std::set<Matrix> as_set(std::initializer_list<std::array<Symbol, 3>> words) {
    std::set<Matrix> out;
    for (const auto& w : words) out.insert(vec({w[0], w[1], w[2]}));
    return out;
}

Distance from(const std::optional<std::size_t>& v) { return v ? Distance(*v) : Distance::infinite(); }

void check_against_oracle(const Channel& ch) {
    const DistanceEngine engine(ch, 2);
    const auto r = minimum_distances(engine);
    const auto o = oracle::distances(ch);
    for (const auto& p : r.pairs) {
        const auto& q = o.at[p.first][p.second];
        CAPTURE(p.first);
        CAPTURE(p.second);
        CHECK(p.d0 == from(q.d0));
        CHECK(p.d1 == from(q.d1));
        CHECK(p.d2 == from(q.d2));
        for (std::size_t c = 0; c < q.refined.size(); ++c) CHECK(p.refined(c) == from(q.refined[c]));
    }
}

}  // namespace

TEST_CASE("distance ordering puts infinity on top") {
    CHECK(Distance(3) < Distance::infinite());
    CHECK(Distance() == Distance::infinite());
    CHECK(Distance(2) == 2);
    CHECK(Distance::infinite().to_string() == "inf");
    CHECK_THROWS_AS(Distance::infinite().value(), PreconditionError);
    CHECK_THROWS_AS(tau_and_cstar(Distance::infinite()), UndefinedThresholdError);
    CHECK(tau_and_cstar(Distance(3)).tau == 2);
    CHECK(tau_and_cstar(Distance(3)).cstar == 1);
    CHECK(tau_and_cstar(Distance(4)).tau == 2);
    CHECK(tau_and_cstar(Distance(4)).cstar == 2);
}

TEST_CASE("toy network decoding balls of radius one") {
    const Channel ch = toy_channel();
    const DistanceEngine engine(ch);
    const auto b0 = engine.ball(0, 1);
    const auto b1 = engine.ball(1, 1);
    CHECK(std::set<Matrix>(b0.members.begin(), b0.members.end()) ==
          as_set({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(std::set<Matrix>(b1.members.begin(), b1.members.end()) ==
          as_set({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}, {1, 0, 2}, {2, 0, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
    CHECK(b0.contains(vec({2, 0, 0})));
    CHECK_FALSE(b1.contains(vec({0, 0, 0})));
    CHECK(engine.ball(0, 0).size() == 1);
}

TEST_CASE("toy network minimum distances") {
    const Channel ch = toy_channel();
    const DistanceEngine engine(ch);
    const auto r = minimum_distances(engine);
    CHECK(r.d0_min == 3);
    CHECK(r.d1_min == 2);
    CHECK(r.d2_min == 2);
    CHECK(r.d2_min_at(0) == 2);
    CHECK(r.d2_min_at(1) == 1);
    for (std::size_t c = 2; c <= 12; ++c) CHECK(r.d2_min_at(c) == 0);
    // min over c of 2c + d2min[c] reads 2, 3, 4 for c = 0, 1, 2.
    CHECK(2 * 0 + r.d2_min_at(0).value() == 2);
    CHECK(2 * 1 + r.d2_min_at(1).value() == 3);
    CHECK(2 * 2 + r.d2_min_at(2).value() == 4);
    // Direction matters for D1.
    CHECK(engine.d1(0, 1) == 2);
    CHECK(engine.d1(1, 0) == 3);
    CHECK(engine.d0(0, 1) == engine.d0(1, 0));
}

TEST_CASE("repetition code {000,111} over the binary identity channel") {
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0, 0}), vec({1, 1, 1})});
    const DistanceEngine engine(ch);
    const auto r = minimum_distances(engine);
    CHECK(r.d0_min == 3);
    CHECK(r.d1_min == 3);
    CHECK(r.d2_min == 3);
    CHECK(r.d2_min_at(1) == 1);
    CHECK(r.d2_min_at(2) == 0);
}

TEST_CASE("unreachable pairs give infinite distances") {
    // Errors only touch the first coordinate, so codewords differing elsewhere never meet.
    const Field f = Field::prime(2);
    const Channel ch = matrix_channel(f, {vec({0, 0}), vec({0, 1})}, Matrix::identity(2), Matrix(1, 2, {1, 0}),
                                      WeightMeasure::hamming());
    const DistanceEngine engine(ch);
    const auto r = minimum_distances(engine);
    CHECK(r.d0_min.is_infinite());
    CHECK(r.d1_min.is_infinite());
    CHECK(r.d2_min.is_infinite());
    CHECK_FALSE(r.pairs.front().thresholds);
    CHECK_THROWS_AS(tau_and_cstar(engine, 0, 1), UndefinedThresholdError);
}

TEST_CASE("report indexing") {
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0}), vec({0, 1}), vec({1, 1})});
    const auto r = minimum_distances(DistanceEngine(ch));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) {
                CHECK_THROWS_AS(r.pair(i, j), PreconditionError);
            } else {
                CHECK(r.pair(i, j).first == i);
                CHECK(r.pair(i, j).second == j);
            }
        }
    }
}

TEST_CASE("results do not depend on parallelism") {
    const Channel ch = random_table_channel(5);
    const auto a = minimum_distances(DistanceEngine(ch, 1));
    const auto b = minimum_distances(DistanceEngine(ch, 4));
    CHECK(a.pairs == b.pairs);
    CHECK(a.d2_min_refined == b.d2_min_refined);
}

TEST_CASE("engine agrees with the brute-force oracle") {
    SUBCASE("toy") { check_against_oracle(toy_channel()); }
    SUBCASE("random tables") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) check_against_oracle(random_table_channel(seed));
    }
    SUBCASE("random matrix channels") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) check_against_oracle(random_matrix_channel(seed));
    }
}
