#include "gnc/distances.hpp"

#include <algorithm>
#include <unordered_map>

#include "gnc/errors.hpp"
#include "parallel.hpp"

namespace gnc {

std::size_t Distance::value() const {
    if (!finite_) throw PreconditionError("distance is infinite");
    return value_;
}

bool DecodingBall::contains(const Matrix& y) const { return std::binary_search(members.begin(), members.end(), y); }

DistanceEngine::DistanceEngine(const Channel& ch, unsigned parallelism)
    : ch_(&ch), threads_(detail::resolve_threads(parallelism)), reach_(ch.num_codewords()) {
    const auto& order = ch.errors_by_weight();
    detail::parallel_for(ch.num_codewords(), threads_, [&](std::size_t x) {
        std::unordered_map<std::uint64_t, std::uint16_t> best;
        // Errors arrive in nondecreasing weight, so the first hit is the minimum.
        for (auto zi : order) {
            const auto key = ch.output_key(ch.evaluate(x, ch.error_at(zi)));
            best.emplace(key, static_cast<std::uint16_t>(ch.error_weight(zi)));
        }
        ReachMap map(best.begin(), best.end());
        std::sort(map.begin(), map.end());
        reach_[x] = std::move(map);
    });
}

std::optional<std::size_t> DistanceEngine::min_weight_to(std::size_t x, const Matrix& y) const {
    if (!ch_->output_contains(y)) return std::nullopt;
    const auto key = ch_->output_key(y);
    const auto& map = reach_.at(x);
    auto it = std::lower_bound(map.begin(), map.end(), std::pair<std::uint64_t, std::uint16_t>{key, 0});
    if (it == map.end() || it->first != key) return std::nullopt;
    return it->second;
}

DecodingBall DistanceEngine::ball(std::size_t x, std::size_t c) const {
    DecodingBall b{x, c, {}};
    for (const auto& [key, w] : reach_.at(x)) {
        if (w <= c) b.members.push_back(ch_->output_from_key(key));
    }
    return b;
}

std::vector<Distance> DistanceEngine::profile(std::size_t x1, std::size_t x2) const {
    const std::size_t top = w_max();
    std::vector<Distance> m(top + 1);
    const auto& a = reach_.at(x1);
    const auto& b = reach_.at(x2);
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (b[j].first < a[i].first) {
            ++j;
        } else {
            m[a[i].second] = std::min(m[a[i].second], Distance(b[j].second));
            ++i;
            ++j;
        }
    }
    for (std::size_t c = 1; c <= top; ++c) m[c] = std::min(m[c], m[c - 1]);
    return m;
}

Distance d0_from_profile(const std::vector<Distance>& m) {
    Distance best;
    for (std::size_t c1 = 0; c1 < m.size(); ++c1) {
        if (m[c1].is_infinite()) continue;
        const std::size_t c2 = std::max(m[c1].value(), c1 == 0 ? std::size_t{0} : c1 - 1);
        if (c2 <= c1 + 1) best = std::min(best, Distance(c1 + c2));
    }
    return best;
}

Distance d2_from_profile(const std::vector<Distance>& m) {
    Distance best;
    for (std::size_t c = 0; c < m.size(); ++c) {
        if (m[c].is_finite()) best = std::min(best, Distance(c + m[c].value()));
    }
    return best;
}

Distance d2_refined_from_profile(const std::vector<Distance>& m, std::size_t c) {
    const Distance& v = m.at(std::min(c, m.size() - 1));
    if (v.is_infinite()) return v;
    return Distance(v.value() > c ? v.value() - c : 0);
}

Distance DistanceEngine::d0(std::size_t x1, std::size_t x2) const { return d0_from_profile(profile(x1, x2)); }
Distance DistanceEngine::d1(std::size_t x1, std::size_t x2) const { return profile(x1, x2).front(); }
Distance DistanceEngine::d2(std::size_t x1, std::size_t x2) const { return d2_from_profile(profile(x1, x2)); }

Distance DistanceEngine::d2_refined(std::size_t x1, std::size_t x2, std::size_t c) const {
    return d2_refined_from_profile(profile(x1, x2), c);
}

std::vector<Distance> DistanceEngine::d2_refined_sequence(std::size_t x1, std::size_t x2) const {
    const auto m = profile(x1, x2);
    std::vector<Distance> out(m.size());
    for (std::size_t c = 0; c < m.size(); ++c) out[c] = d2_refined_from_profile(m, c);
    return out;
}

Thresholds tau_and_cstar(const Distance& d0) {
    if (d0.is_infinite()) throw UndefinedThresholdError("tau and c* are undefined for an infinite D0");
    return Thresholds{(d0.value() + 1) / 2, d0.value() / 2};
}

Thresholds tau_and_cstar(const DistanceEngine& engine, std::size_t x1, std::size_t x2) {
    return tau_and_cstar(engine.d0(x1, x2));
}

const PairDistances& DistanceReport::pair(std::size_t x1, std::size_t x2) const {
    if (x1 == x2 || x1 >= num_codewords || x2 >= num_codewords) {
        throw PreconditionError("no entry for codeword pair (" + std::to_string(x1) + "," + std::to_string(x2) + ")");
    }
    // Row x1 holds n - 1 entries; x2 skips the diagonal.
    return pairs.at(x1 * (num_codewords - 1) + (x2 < x1 ? x2 : x2 - 1));
}

DistanceReport minimum_distances(const DistanceEngine& engine) {
    const std::size_t n = engine.num_codewords();
    DistanceReport r;
    r.num_codewords = n;
    r.w_max = engine.w_max();
    r.pairs.resize(n * (n - 1));
    detail::parallel_for(n, engine.parallelism(), [&](std::size_t i) {
        std::size_t slot = i * (n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto m = engine.profile(i, j);
            PairDistances& p = r.pairs[slot++];
            p.first = i;
            p.second = j;
            p.d0 = d0_from_profile(m);
            p.d1 = m.front();
            p.d2 = d2_from_profile(m);
            p.d2_refined.resize(m.size());
            for (std::size_t c = 0; c < m.size(); ++c) p.d2_refined[c] = d2_refined_from_profile(m, c);
            if (p.d0.is_finite()) p.thresholds = tau_and_cstar(p.d0);
        }
    });
    r.d2_min_refined.assign(r.w_max + 1, Distance());
    for (const auto& p : r.pairs) {
        if (p.first < p.second) {
            r.d0_min = std::min(r.d0_min, p.d0);
            r.d2_min = std::min(r.d2_min, p.d2);
        }
        r.d1_min = std::min(r.d1_min, p.d1);
        for (std::size_t c = 0; c <= r.w_max; ++c) r.d2_min_refined[c] = std::min(r.d2_min_refined[c], p.d2_refined[c]);
    }
    return r;
}

}  // namespace gnc
