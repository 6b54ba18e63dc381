#include <doctest.h>

#include <algorithm>

#include "gnc/errors.hpp"
#include "gnc/network.hpp"
#include "gnc/properties.hpp"

using namespace gnc;

namespace {

Matrix vec(std::vector<Symbol> v) { return Matrix::row_vector(std::move(v)); }

const TheoremVerdict& find(const Ledger& l, const std::string& id) {
    const auto* v = l.find(id);
    REQUIRE_MESSAGE(v != nullptr, id);
    return *v;
}

}  // namespace

TEST_CASE("toy ledger has no failures and the expected verdicts") {
    const Channel ch = toy_channel();
    const DistanceEngine engine(ch);
    const Ledger l = run_all(engine);
    for (const auto& v : l.verdicts) {
        CAPTURE(v.id);
        CAPTURE(v.counterexample);
        CHECK(v.status != VerdictStatus::fail);
    }
    CHECK(find(l, "bound.min.d0_d1_ge_d2").status == VerdictStatus::pass);
    CHECK(find(l, "bound.min.d1_floor").status == VerdictStatus::pass);
    CHECK(find(l, "bound.min.d2_ceil").status == VerdictStatus::pass);
    CHECK(find(l, "refined.min.d2_over_c").status == VerdictStatus::pass);
    CHECK(find(l, "decoder.t_c").status == VerdictStatus::pass);
    CHECK(find(l, "decoder.t_d").status == VerdictStatus::pass);
    CHECK(find(l, "linear.d0_eq_d1").status == VerdictStatus::not_applicable);
    CHECK(find(l, "weight.triangle").note.find("sampled") != std::string::npos);
}

TEST_CASE("error-linear collapse on the repetition code") {
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0, 0}), vec({1, 1, 1})});
    const DistanceEngine engine(ch);
    const Ledger l = run_all(engine);
    CHECK_FALSE(l.has_failures());
    CHECK(find(l, "linear.d0_d1_d2_equal").status == VerdictStatus::pass);
    CHECK(find(l, "linear.metrics").status == VerdictStatus::pass);
    CHECK(find(l, "linear.refined_constant").status == VerdictStatus::pass);
    CHECK(find(l, "condition.relation").status == VerdictStatus::pass);
}

TEST_CASE("2c + D2[c] = D2 read up to c = tau fails when D0 is odd") {
    // D0 = D1 = D2 = 3, tau = 2, D2[2] = 0, and 2*2 + 0 = 4 differs from 3.
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0, 0}), vec({1, 1, 1})});
    const DistanceEngine engine(ch);
    const auto r = minimum_distances(engine);
    const auto& p = r.pair(0, 1);
    REQUIRE(p.thresholds);
    CHECK(p.thresholds->tau == 2);
    CHECK(p.d2 == 3);
    CHECK(p.refined(2) == 0);
    CHECK(2 * p.thresholds->tau + p.refined(2).value() != p.d2.value());
    // Up to c* it holds.
    for (std::size_t c = 0; c <= p.thresholds->cstar; ++c) CHECK(2 * c + p.refined(c).value() == 3);
    const auto suite = check_error_linear_suite(r, classify(ch));
    const auto it = std::find_if(suite.begin(), suite.end(), [](const auto& v) { return v.id == "linear.refined_constant"; });
    REQUIRE(it != suite.end());
    CHECK(it->status == VerdictStatus::pass);
    CHECK(it->note.find("2 of 2") != std::string::npos);
}

TEST_CASE("even distance: the identity holds up to tau") {
    const Channel ch = classical_channel(Field::prime(2), {vec({0, 0, 0, 0}), vec({1, 1, 1, 1})});
    const auto r = minimum_distances(DistanceEngine(ch));
    const auto& p = r.pair(0, 1);
    for (std::size_t c = 0; c <= p.thresholds->tau; ++c) CHECK(2 * c + p.refined(c).value() == 4);
}

TEST_CASE("corrupted distances are caught") {
    const Channel ch = toy_channel();
    const DistanceEngine engine(ch);
    RunOptions o;
    o.corrupt_distances = true;
    const Ledger l = run_all(engine, o);
    CHECK(l.has_failures());
    const auto& v = find(l, "bound.d1_floor");
    CHECK(v.status == VerdictStatus::fail);
    CHECK(v.counterexample.find("D1=0") != std::string::npos);
}

TEST_CASE("metric checks") {
    const Channel toy = toy_channel();
    const auto r = minimum_distances(DistanceEngine(toy));
    CHECK(check_metric(r, DistanceKind::d0).is_metric());
    const auto d1 = check_metric(r, DistanceKind::d1);
    CHECK(d1.symmetry.status == VerdictStatus::fail);
    CHECK_FALSE(d1.is_metric());
}

TEST_CASE("seeded random channels are reproducible and pass") {
    for (std::uint64_t seed = 100; seed < 106; ++seed) {
        const Channel a = random_table_channel(seed);
        const Channel b = random_table_channel(seed);
        REQUIRE(a.codewords() == b.codewords());
        const DistanceEngine engine(a);
        const Ledger l = run_all(engine);
        for (const auto& v : l.verdicts) {
            CAPTURE(seed);
            CAPTURE(v.id);
            CAPTURE(v.counterexample);
            CHECK(v.status != VerdictStatus::fail);
        }
    }
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Channel ch = random_matrix_channel(seed);
        CHECK(classify(ch).error_linear);
        CHECK_FALSE(run_all(DistanceEngine(ch)).has_failures());
    }
}

TEST_CASE("verdict status strings") {
    for (auto s : {VerdictStatus::pass, VerdictStatus::fail, VerdictStatus::not_applicable}) {
        CHECK(verdict_status_from_string(to_string(s)) == s);
    }
    CHECK_THROWS_AS(verdict_status_from_string("maybe"), ParseError);
}
