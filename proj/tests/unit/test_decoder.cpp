#include <doctest.h>

#include "gnc/decoder.hpp"
#include "gnc/errors.hpp"
#include "gnc/network.hpp"

using namespace gnc;

namespace {

Matrix vec(std::vector<Symbol> v) { return Matrix::row_vector(std::move(v)); }

}  // namespace

TEST_CASE("toy decoding") {
    const Channel ch = toy_channel();
    const DistanceEngine engine(ch);
    CHECK(mwd(engine, vec({0, 0, 0})) == DecodeOutcome::decoded(0));
    CHECK(mwd(engine, vec({1, 1, 1})) == DecodeOutcome::decoded(1));
    CHECK(mwd_bounded(engine, 1, vec({1, 0, 0})) == DecodeOutcome::decoded(0));
    CHECK(mwd_bounded(engine, 1, vec({2, 1, 1})) == DecodeOutcome::decoded(1));
    CHECK(mwd_bounded(engine, 1, vec({2, 2, 2})).is_detected());
    CHECK(balls_disjoint(engine, 1));
    CHECK_FALSE(balls_disjoint(engine, 2));
    CHECK_THROWS_AS(mwd_bounded(engine, 2, vec({0, 0, 0})), InvalidDecoderError);
    CHECK_THROWS_AS(mwd(engine, vec({0, 0})), PreconditionError);
    CHECK_THROWS_AS(mwd(engine, vec({0, 0, 3})), PreconditionError);
}

TEST_CASE("minimum weight decoding reports ties as detection") {
    // Binary {00, 11}: the word 01 is one error away from both.
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0}), vec({1, 1})});
    const DistanceEngine engine(ch);
    CHECK(mwd(engine, vec({0, 1})).is_detected());
    CHECK(mwd(engine, vec({0, 0})) == DecodeOutcome::decoded(0));
}

TEST_CASE("correctability and detectability of single errors in the toy") {
    const Channel ch = toy_channel();
    const DistanceEngine engine(ch);
    const Matrix on_sa = vec({2, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(is_correctable(engine, on_sa));
    CHECK(is_detectable(engine, on_sa));
    // Two errors on (s,a) and (s,c) turn x1 into F(x0, 0).
    const Matrix two = vec({2, 0, 2, 0, 0, 0, 0, 0, 0});
    CHECK_FALSE(is_detectable(engine, two));
    CHECK_THROWS_AS(is_detectable(engine, ch.zero_error()), PreconditionError);
}

TEST_CASE("toy capability and joint verdicts") {
    const Channel ch = toy_channel();
    const DistanceEngine engine(ch);
    const auto r = minimum_distances(engine);
    const auto cap = capability(engine, r);
    CHECK(cap.t_c == 1);
    CHECK(cap.t_d == 1);
    CHECK(cap.t_c_bound == 1);
    CHECK(cap.t_d_bound == 1);
    CHECK(is_joint_correcting(engine, r, 0, 1));
    CHECK(is_joint_correcting(engine, r, 1, 0));
    CHECK_FALSE(is_joint_correcting(engine, r, 0, 2));
    CHECK_FALSE(is_joint_correcting(engine, 1, 1));
    for (const auto& g : cap.grid) CHECK(g.agree());
}

TEST_CASE("repetition code capability") {
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0, 0, 0, 0}), vec({1, 1, 1, 1, 1})});
    const DistanceEngine engine(ch);
    const auto r = minimum_distances(engine);
    const auto cap = capability(engine, r);
    CHECK(cap.t_c == 2);
    CHECK(cap.t_d == 4);
    CHECK(is_joint_correcting(engine, r, 1, 2));
    CHECK_FALSE(is_joint_correcting(engine, r, 1, 3));
}

TEST_CASE("errors that cannot move a codeword are always correctable") {
    const Field f = Field::prime(2);
    const Channel ch = matrix_channel(f, {vec({0, 0}), vec({0, 1})}, Matrix::identity(2), Matrix(1, 2, {1, 0}),
                                      WeightMeasure::hamming());
    const DistanceEngine engine(ch);
    const auto cap = capability(engine, minimum_distances(engine));
    CHECK(cap.t_c_full);
    CHECK(cap.t_d_full);
    CHECK(cap.t_c == ch.max_weight());
}
