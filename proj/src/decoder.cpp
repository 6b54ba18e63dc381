#include "gnc/decoder.hpp"

#include <algorithm>

#include "gnc/errors.hpp"

namespace gnc {

DecodeOutcome mwd(const DistanceEngine& engine, const Matrix& y) {
    const Channel& ch = engine.channel();
    if (!ch.output_contains(y)) {
        throw PreconditionError("[" + y.to_string() + "] is not an output of shape " + ch.output_shape().to_string());
    }
    std::optional<std::size_t> best_weight;
    std::vector<std::size_t> best;
    for (std::size_t x = 0; x < ch.num_codewords(); ++x) {
        const auto w = engine.min_weight_to(x, y);
        if (!w) continue;
        if (!best_weight || *w < *best_weight) {
            best_weight = w;
            best = {x};
        } else if (*w == *best_weight) {
            best.push_back(x);
        }
    }
    if (best.size() == 1) return DecodeOutcome::decoded(best.front());
    return DecodeOutcome::detected();
}

bool balls_disjoint(const DistanceEngine& engine, std::size_t c) {
    const std::size_t n = engine.num_codewords();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto m = engine.profile(i, j);
            if (m.at(std::min(c, m.size() - 1)) <= Distance(c)) return false;
        }
    }
    return true;
}

DecodeOutcome mwd_bounded(const DistanceEngine& engine, std::size_t c, const Matrix& y) {
    const Channel& ch = engine.channel();
    if (!ch.output_contains(y)) {
        throw PreconditionError("[" + y.to_string() + "] is not an output of shape " + ch.output_shape().to_string());
    }
    if (!balls_disjoint(engine, c)) {
        throw InvalidDecoderError("decoding balls of radius " + std::to_string(c) +
                                  " overlap, so the bounded decoder is not defined");
    }
    for (std::size_t x = 0; x < ch.num_codewords(); ++x) {
        const auto w = engine.min_weight_to(x, y);
        if (w && *w <= c) return DecodeOutcome::decoded(x);
    }
    return DecodeOutcome::detected();
}

bool is_correctable(const DistanceEngine& engine, const Matrix& z) {
    const Channel& ch = engine.channel();
    for (std::size_t x = 0; x < ch.num_codewords(); ++x) {
        if (mwd(engine, ch.evaluate(x, z)) != DecodeOutcome::decoded(x)) return false;
    }
    return true;
}

bool is_detectable(const DistanceEngine& engine, const Matrix& z) {
    const Channel& ch = engine.channel();
    if (z.is_zero()) throw PreconditionError("detectability is defined for nonzero errors only");
    for (std::size_t x = 0; x < ch.num_codewords(); ++x) {
        const Matrix y = ch.evaluate(x, z);
        for (std::size_t other = 0; other < ch.num_codewords(); ++other) {
            if (other != x && engine.min_weight_to(other, y) == std::optional<std::size_t>(0)) return false;
        }
    }
    return true;
}

namespace {

bool intersects(const DecodingBall& a, const DecodingBall& b) {
    auto i = a.members.begin();
    auto j = b.members.begin();
    while (i != a.members.end() && j != b.members.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

}  // namespace

JointVerdict joint_verdict(const DistanceEngine& engine, const DistanceReport& report, std::size_t c,
                           std::size_t cprime) {
    JointVerdict v{c, cprime, true, report.d2_min_at(c) >= Distance(cprime + 1)};
    const std::size_t n = engine.num_codewords();
    std::vector<DecodingBall> inner, outer;
    for (std::size_t x = 0; x < n; ++x) {
        inner.push_back(engine.ball(x, c));
        outer.push_back(engine.ball(x, c + cprime));
    }
    for (std::size_t i = 0; i < n && v.by_balls; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && intersects(inner[i], outer[j])) {
                v.by_balls = false;
                break;
            }
        }
    }
    return v;
}

bool is_joint_correcting(const DistanceEngine& engine, const DistanceReport& report, std::size_t c,
                         std::size_t cprime) {
    const auto v = joint_verdict(engine, report, c, cprime);
    if (!v.agree()) {
        throw ConsistencyError("joint verdict for (" + std::to_string(c) + "," + std::to_string(cprime) +
                               "): ball test says " + (v.by_balls ? "true" : "false") +
                               ", refined distance says " + (v.by_distance ? "true" : "false"));
    }
    return v.by_balls;
}

bool is_joint_correcting(const DistanceEngine& engine, std::size_t c, std::size_t cprime) {
    return is_joint_correcting(engine, minimum_distances(engine), c, cprime);
}

CapabilityReport capability(const DistanceEngine& engine, const DistanceReport& report) {
    const Channel& ch = engine.channel();
    CapabilityReport r;
    r.w_max = engine.w_max();
    r.t_c = r.w_max;
    r.t_c_full = true;
    r.t_d = r.w_max;
    r.t_d_full = true;
    for (auto zi : ch.errors_by_weight()) {
        const std::size_t w = ch.error_weight(zi);
        if (w > r.t_c) break;
        if (!is_correctable(engine, ch.error_at(zi))) {
            r.t_c = w - 1;
            r.t_c_full = false;
        }
    }
    for (auto zi : ch.errors_by_weight()) {
        const std::size_t w = ch.error_weight(zi);
        if (w == 0) continue;
        if (w > r.t_d) break;
        if (!is_detectable(engine, ch.error_at(zi))) {
            r.t_d = w - 1;
            r.t_d_full = false;
        }
    }
    r.t_c_bound = report.d0_min.is_finite() ? (report.d0_min.value() - 1) / 2 : r.w_max;
    r.t_d_bound = report.d1_min.is_finite() ? (report.d1_min.value() > 0 ? report.d1_min.value() - 1 : 0) : r.w_max;
    for (std::size_t c = 0; c <= r.w_max; ++c) {
        for (std::size_t cp = 0; c + cp <= r.w_max; ++cp) r.grid.push_back(joint_verdict(engine, report, c, cp));
    }
    return r;
}

}  // namespace gnc
