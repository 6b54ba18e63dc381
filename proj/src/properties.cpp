#include "gnc/properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gnc/errors.hpp"

namespace gnc {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

VerdictStatus verdict_status_from_string(const std::string& s) {
    if (s == "pass") return VerdictStatus::pass;
    if (s == "fail") return VerdictStatus::fail;
    if (s == "not-applicable") return VerdictStatus::not_applicable;
    throw ParseError(0, "unknown verdict status '" + s + "'");
}

std::string to_string(DistanceKind k) {
    switch (k) {
        case DistanceKind::d0: return "D0";
        case DistanceKind::d1: return "D1";
        case DistanceKind::d2: return "D2";
    }
    return "?";
}

std::size_t Ledger::count(VerdictStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [&](const TheoremVerdict& v) { return v.status == s; }));
}

const TheoremVerdict* Ledger::find(const std::string& id) const {
    for (const auto& v : verdicts) {
        if (v.id == id) return &v;
    }
    return nullptr;
}

namespace {

// Accumulates one universally quantified claim.
class Check {
public:
    Check(std::string id, std::string statement) {
        v_.id = std::move(id);
        v_.statement = std::move(statement);
    }

    void skip(std::size_t n = 1) { v_.skipped += n; }

    // Records one instance; the first failing instance becomes the counterexample.
    void expect(bool ok, const std::string& counterexample) {
        ++v_.instances;
        if (!ok && !failed_) {
            failed_ = true;
            v_.counterexample = counterexample;
        }
    }

    template <class Describe>
    void expect_lazy(bool ok, Describe&& describe) {
        ++v_.instances;
        if (!ok && !failed_) {
            failed_ = true;
            v_.counterexample = describe();
        }
    }

    void note(std::string n) { v_.note = std::move(n); }

    TheoremVerdict done() {
        if (failed_) {
            v_.status = VerdictStatus::fail;
        } else if (v_.instances > 0) {
            v_.status = VerdictStatus::pass;
        } else {
            v_.status = VerdictStatus::not_applicable;
            if (v_.note.empty()) v_.note = "no instance satisfies the hypotheses";
        }
        return v_;
    }

private:
    TheoremVerdict v_;
    bool failed_ = false;
};

TheoremVerdict not_applicable(std::string id, std::string statement, std::string why) {
    TheoremVerdict v;
    v.id = std::move(id);
    v.statement = std::move(statement);
    v.status = VerdictStatus::not_applicable;
    v.note = std::move(why);
    return v;
}

std::string pair_name(std::size_t i, std::size_t j) {
    return "(#" + std::to_string(i) + ",#" + std::to_string(j) + ")";
}

std::string d(const Distance& x) { return x.to_string(); }

Distance plus(const Distance& a, const Distance& b) {
    if (a.is_infinite() || b.is_infinite()) return Distance::infinite();
    return Distance(a.value() + b.value());
}

Distance plus(std::size_t a, const Distance& b) { return plus(Distance(a), b); }

Distance get(const PairDistances& p, DistanceKind k) {
    switch (k) {
        case DistanceKind::d0: return p.d0;
        case DistanceKind::d1: return p.d1;
        case DistanceKind::d2: return p.d2;
    }
    return {};
}

// g(c) = 2c + D2[c] minimized over c, scanning until D2[c] is constant.
Distance min_over_c(const std::vector<Distance>& seq) {
    Distance best;
    for (std::size_t c = 0; c < seq.size(); ++c) best = std::min(best, plus(2 * c, seq[c]));
    return best;
}

struct PairConditions {
    bool relation = false;
    bool function = false;
};

PairConditions conditions_for(const PairDistances& p) {
    PairConditions out;
    if (!p.thresholds) return out;
    const auto [tau, cstar] = *p.thresholds;
    const Distance at_cstar = p.refined(cstar);
    const Distance rel = plus(2 * cstar, at_cstar);
    out.relation = p.d2 == rel && rel == p.d1;
    Distance g_min;
    for (std::size_t c = 0; c <= tau; ++c) g_min = std::min(g_min, plus(2 * c, p.refined(c)));
    const bool c1 = at_cstar <= Distance(1);
    const bool c2 = plus(0, p.refined(0)) == g_min && rel == g_min;
    out.function = c1 && c2;
    return out;
}

}  // namespace

std::vector<TheoremVerdict> check_bounds(const DistanceReport& r) {
    Check d1_floor("bound.d1_floor", "D1(x1,x2) >= floor(D0(x1,x2)/2) + 1");
    Check d0_ge_d2("bound.d0_ge_d2", "D0(x1,x2) >= D2(x1,x2)");
    Check d1_ge_d2("bound.d1_ge_d2", "D1(x1,x2) >= D2(x1,x2)");
    Check d2_ceil("bound.d2_ceil", "D2(x1,x2) >= ceil(D0(x1,x2)/2)");
    for (const auto& p : r.pairs) {
        const auto name = pair_name(p.first, p.second);
        if (p.d0.is_finite() && p.d1.is_finite()) {
            d1_floor.expect_lazy(p.d1.value() >= p.d0.value() / 2 + 1, [&] {
                return name + ": D0=" + d(p.d0) + ", D1=" + d(p.d1);
            });
        } else {
            d1_floor.skip();
        }
        if (p.d0.is_finite() && p.d2.is_finite()) {
            d0_ge_d2.expect_lazy(p.d0 >= p.d2, [&] { return name + ": D0=" + d(p.d0) + ", D2=" + d(p.d2); });
            d2_ceil.expect_lazy(p.d2.value() >= (p.d0.value() + 1) / 2,
                                [&] { return name + ": D0=" + d(p.d0) + ", D2=" + d(p.d2); });
        } else {
            d0_ge_d2.skip();
            d2_ceil.skip();
        }
        if (p.d1.is_finite() && p.d2.is_finite()) {
            d1_ge_d2.expect_lazy(p.d1 >= p.d2, [&] { return name + ": D1=" + d(p.d1) + ", D2=" + d(p.d2); });
        } else {
            d1_ge_d2.skip();
        }
    }

    const auto minima = "d0min=" + d(r.d0_min) + ", d1min=" + d(r.d1_min) + ", d2min=" + d(r.d2_min);
    Check m_floor("bound.min.d1_floor", "d1min >= floor(d0min/2) + 1");
    Check m_ge("bound.min.d0_d1_ge_d2", "d0min >= d2min and d1min >= d2min");
    Check m_ceil("bound.min.d2_ceil", "d2min >= ceil(d0min/2)");
    Check m_pos("bound.min.positive", "d0min, d1min, d2min >= 1");
    if (r.d0_min.is_finite() && r.d1_min.is_finite()) {
        m_floor.expect(r.d1_min.value() >= r.d0_min.value() / 2 + 1, minima);
    } else {
        m_floor.skip();
    }
    if (r.d0_min.is_finite() && r.d1_min.is_finite() && r.d2_min.is_finite()) {
        m_ge.expect(r.d0_min >= r.d2_min && r.d1_min >= r.d2_min, minima);
        m_ceil.expect(r.d2_min.value() >= (r.d0_min.value() + 1) / 2, minima);
    } else {
        m_ge.skip();
        m_ceil.skip();
    }
    m_pos.expect(r.d0_min >= Distance(1) && r.d1_min >= Distance(1) && r.d2_min >= Distance(1), minima);
    return {d1_floor.done(), d0_ge_d2.done(), d1_ge_d2.done(), d2_ceil.done(),
            m_floor.done(),  m_ge.done(),     m_ceil.done(),   m_pos.done()};
}

std::vector<TheoremVerdict> check_refined(const DistanceReport& r) {
    Check nonincreasing("refined.nonincreasing", "D2[c](x1,x2) is nonincreasing in c");
    Check at_zero("refined.at_zero", "D2[0](x1,x2) = D1(x1,x2)");
    Check le_d1("refined.le_d1", "D2[c](x1,x2) <= D1(x1,x2) for all c");
    Check zero_iff("refined.zero_iff_tau", "D2[c](x1,x2) = 0 iff c >= tau(x1,x2)");
    Check lemma("refined.cstar_lemma",
                "D0 even: D2[c*](x1,x2) = D2[c*](x2,x1) = 0; D0 odd: min(D2[c*](x1,x2), D2[c*](x2,x1)) = 1");
    Check formula("refined.cstar_formula", "2c* + min(D2[c*](x1,x2), D2[c*](x2,x1)) = D0(x1,x2)");
    Check over_c("refined.d2_over_c", "D2(x1,x2) = min over both orders of min_c {2c + D2[c]}");

    for (const auto& p : r.pairs) {
        const auto name = pair_name(p.first, p.second);
        for (std::size_t c = 0; c + 1 < p.d2_refined.size(); ++c) {
            nonincreasing.expect_lazy(p.d2_refined[c] >= p.d2_refined[c + 1], [&] {
                return name + ": D2[" + std::to_string(c) + "]=" + d(p.d2_refined[c]) + " < D2[" +
                       std::to_string(c + 1) + "]=" + d(p.d2_refined[c + 1]);
            });
        }
        at_zero.expect_lazy(p.refined(0) == p.d1, [&] {
            return name + ": D2[0]=" + d(p.refined(0)) + ", D1=" + d(p.d1);
        });
        for (std::size_t c = 0; c < p.d2_refined.size(); ++c) {
            le_d1.expect_lazy(p.d2_refined[c] <= p.d1, [&] {
                return name + ": D2[" + std::to_string(c) + "]=" + d(p.d2_refined[c]) + ", D1=" + d(p.d1);
            });
        }
        if (!p.thresholds) {
            zero_iff.skip();
            continue;
        }
        const std::size_t tau = p.thresholds->tau;
        for (std::size_t c = 0; c <= std::max(tau, r.w_max); ++c) {
            zero_iff.expect_lazy((p.refined(c) == 0) == (c >= tau), [&] {
                return name + ": tau=" + std::to_string(tau) + ", D2[" + std::to_string(c) + "]=" + d(p.refined(c));
            });
        }
    }

    for (const auto& p : r.pairs) {
        if (p.first > p.second) continue;
        const auto& q = r.pair(p.second, p.first);
        const auto name = pair_name(p.first, p.second);
        if (!p.thresholds) {
            lemma.skip();
            formula.skip();
            over_c.skip();
            continue;
        }
        const std::size_t cstar = p.thresholds->cstar;
        const Distance a = p.refined(cstar);
        const Distance b = q.refined(cstar);
        const auto values = [&] {
            return name + ": D0=" + d(p.d0) + ", c*=" + std::to_string(cstar) + ", D2[c*] both orders = " + d(a) +
                   "," + d(b);
        };
        if (p.d0.value() % 2 == 0) {
            lemma.expect_lazy(a == 0 && b == 0, values);
        } else {
            lemma.expect_lazy(std::min(a, b) == 1, values);
        }
        formula.expect_lazy(plus(2 * cstar, std::min(a, b)) == p.d0, values);
        const Distance m = std::min(min_over_c(p.d2_refined), min_over_c(q.d2_refined));
        over_c.expect_lazy(m == p.d2, [&] { return name + ": D2=" + d(p.d2) + ", min over c = " + d(m); });
    }

    Check m_over_c("refined.min.d2_over_c", "d2min = min_c {2c + d2min[c]}");
    Check m_zero("refined.min.at_zero", "d2min[0] = d1min");
    Check m_noninc("refined.min.nonincreasing", "d2min[c] is nonincreasing in c");
    const Distance m = min_over_c(r.d2_min_refined);
    m_over_c.expect(m == r.d2_min, "d2min=" + d(r.d2_min) + ", min_c {2c + d2min[c]} = " + d(m));
    m_zero.expect(r.d2_min_at(0) == r.d1_min, "d2min[0]=" + d(r.d2_min_at(0)) + ", d1min=" + d(r.d1_min));
    for (std::size_t c = 0; c + 1 < r.d2_min_refined.size(); ++c) {
        m_noninc.expect_lazy(r.d2_min_refined[c] >= r.d2_min_refined[c + 1], [&] {
            return "d2min[" + std::to_string(c) + "]=" + d(r.d2_min_refined[c]) + " < d2min[" +
                   std::to_string(c + 1) + "]=" + d(r.d2_min_refined[c + 1]);
        });
    }
    return {nonincreasing.done(), at_zero.done(), le_d1.done(),    zero_iff.done(), lemma.done(),
            formula.done(),       over_c.done(),  m_over_c.done(), m_zero.done(),   m_noninc.done()};
}

MetricReport check_metric(const DistanceReport& r, DistanceKind which) {
    const std::string D = to_string(which);
    Check nonneg("metric." + D + ".nonnegativity", D + "(x,x) = 0 and " + D + "(x1,x2) > 0 for x1 != x2");
    Check sym("metric." + D + ".symmetry", D + "(x1,x2) = " + D + "(x2,x1)");
    Check tri("metric." + D + ".triangle", D + "(x1,x3) <= " + D + "(x1,x2) + " + D + "(x2,x3)");
    const std::size_t n = r.num_codewords;
    for (const auto& p : r.pairs) {
        const Distance v = get(p, which);
        nonneg.expect_lazy(v >= Distance(1), [&] { return pair_name(p.first, p.second) + ": " + D + "=" + d(v); });
        const Distance back = get(r.pair(p.second, p.first), which);
        sym.expect_lazy(v == back, [&] {
            return pair_name(p.first, p.second) + ": " + D + "=" + d(v) + " but reversed " + d(back);
        });
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Distance ij = get(r.pair(i, j), which);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const Distance ik = get(r.pair(i, k), which);
                const Distance jk = get(r.pair(j, k), which);
                tri.expect_lazy(ik <= plus(ij, jk), [&] {
                    return "(#" + std::to_string(i) + ",#" + std::to_string(j) + ",#" + std::to_string(k) + "): " + D +
                           "(x1,x3)=" + d(ik) + " > " + d(ij) + " + " + d(jk);
                });
            }
        }
    }
    if (n < 3) tri.note("fewer than three codewords; the triangle inequality holds vacuously");
    MetricReport out;
    out.which = which;
    out.nonnegativity = nonneg.done();
    out.symmetry = sym.done();
    out.triangle = tri.done();
    if (n < 3) out.triangle.status = VerdictStatus::pass;
    return out;
}

namespace {

// Folds three metric reports into one verdict asserting that all are metrics.
TheoremVerdict metric_verdict(const std::string& id, const std::string& statement,
                              const std::vector<MetricReport>& reports) {
    Check c(id, statement);
    for (const auto& m : reports) {
        for (const auto* part : {&m.nonnegativity, &m.symmetry, &m.triangle}) {
            c.expect(part->status != VerdictStatus::fail, part->id + " " + part->counterexample);
        }
    }
    return c.done();
}

}  // namespace

std::vector<TheoremVerdict> check_error_linear_suite(const DistanceReport& r, const ChannelClass& cls) {
    const std::vector<std::pair<std::string, std::string>> claims = {
        {"linear.d0_eq_d1", "error-linear: D0(x1,x2) = D1(x1,x2)"},
        {"linear.d0_d1_d2_equal", "error-linear: D0 = D1 = D2"},
        {"linear.metrics", "error-linear: D0, D1, D2 are metrics"},
        {"linear.min_equal", "error-linear: d0min = d1min = d2min"},
        {"linear.refined_constant", "error-linear: 2c + D2[c](x1,x2) = D2(x1,x2) for 0 <= c <= c*"},
        {"linear.min_refined_constant", "error-linear: 2c + d2min[c] = d2min for 0 <= c <= floor(d2min/2)"},
    };
    if (!cls.error_linear) {
        std::vector<TheoremVerdict> out;
        for (const auto& [id, st] : claims) out.push_back(not_applicable(id, st, "channel is not error-linear: " + cls.witness));
        return out;
    }
    Check eq01(claims[0].first, claims[0].second);
    Check eq012(claims[1].first, claims[1].second);
    Check refined(claims[4].first, claims[4].second);
    std::size_t literal_checked = 0, literal_broken = 0;
    for (const auto& p : r.pairs) {
        const auto name = pair_name(p.first, p.second);
        const auto values = [&] { return name + ": D0=" + d(p.d0) + ", D1=" + d(p.d1) + ", D2=" + d(p.d2); };
        eq01.expect_lazy(p.d0 == p.d1, values);
        eq012.expect_lazy(p.d0 == p.d1 && p.d1 == p.d2, values);
        if (!p.thresholds || p.d2.is_infinite()) {
            refined.skip();
            continue;
        }
        for (std::size_t c = 0; c <= p.thresholds->cstar; ++c) {
            refined.expect_lazy(plus(2 * c, p.refined(c)) == p.d2, [&] {
                return name + ": c=" + std::to_string(c) + ", D2[c]=" + d(p.refined(c)) + ", D2=" + d(p.d2);
            });
        }
        // The same identity read up to c = tau fails whenever D0 is odd.
        ++literal_checked;
        const std::size_t tau = p.thresholds->tau;
        if (plus(2 * tau, p.refined(tau)) != p.d2) ++literal_broken;
    }
    refined.note("at c = tau the identity fails on " + std::to_string(literal_broken) + " of " +
                 std::to_string(literal_checked) + " pairs (those with odd D0); it is asserted up to c*");

    const auto metrics = metric_verdict(claims[2].first, claims[2].second,
                                        {check_metric(r, DistanceKind::d0), check_metric(r, DistanceKind::d1),
                                         check_metric(r, DistanceKind::d2)});
    Check min_eq(claims[3].first, claims[3].second);
    min_eq.expect(r.d0_min == r.d1_min && r.d1_min == r.d2_min,
                  "d0min=" + d(r.d0_min) + ", d1min=" + d(r.d1_min) + ", d2min=" + d(r.d2_min));
    Check min_refined(claims[5].first, claims[5].second);
    if (r.d2_min.is_finite()) {
        for (std::size_t c = 0; c <= r.d2_min.value() / 2; ++c) {
            min_refined.expect_lazy(plus(2 * c, r.d2_min_at(c)) == r.d2_min, [&] {
                return "c=" + std::to_string(c) + ": d2min[c]=" + d(r.d2_min_at(c)) + ", d2min=" + d(r.d2_min);
            });
        }
    } else {
        min_refined.skip();
    }
    return {eq01.done(), eq012.done(), metrics, min_eq.done(), refined.done(), min_refined.done()};
}

std::vector<TheoremVerdict> check_conditions(const DistanceReport& r) {
    Check lemma("condition.s1_iff_s2",
                "D2[c*](x1,x2) <= 1 and D2[c*](x2,x1) <= 1  iff  D2[c*](x1,x2) = D2[c*](x2,x1)");
    Check implies("condition.function_implies_relation",
                  "function condition in both orders implies the relation condition D2 = 2c* + D2[c*] = D1");
    std::size_t single_order_gaps = 0;
    bool all_finite = true;
    std::size_t relation_count = 0, function_count = 0;
    std::string relation_miss, function_miss;

    for (const auto& p : r.pairs) {
        const auto name = pair_name(p.first, p.second);
        if (!p.thresholds) {
            all_finite = false;
            if (p.first < p.second) {
                lemma.skip();
                implies.skip();
            }
            continue;
        }
        const auto pc = conditions_for(p);
        relation_count += pc.relation;
        function_count += pc.function;
        if (!pc.relation && relation_miss.empty()) relation_miss = name;
        if (!pc.function && function_miss.empty()) function_miss = name;
        if (pc.function && !pc.relation) ++single_order_gaps;
        if (p.first > p.second) continue;

        const auto& q = r.pair(p.second, p.first);
        const std::size_t cstar = p.thresholds->cstar;
        const Distance a = p.refined(cstar), b = q.refined(cstar);
        const bool s1 = a <= Distance(1) && b <= Distance(1);
        const bool s2 = a == b;
        lemma.expect_lazy(s1 == s2, [&] {
            return name + ": D2[c*] both orders = " + d(a) + "," + d(b);
        });
        const auto qc = conditions_for(q);
        if (pc.function && qc.function) {
            implies.expect_lazy(pc.relation && qc.relation, [&] {
                return name + ": D1=" + d(p.d1) + ", D2=" + d(p.d2) + ", c*=" + std::to_string(cstar) +
                       ", D2[c*]=" + d(a);
            });
        } else {
            implies.skip();
        }
    }
    if (single_order_gaps > 0) {
        implies.note("function condition without the relation condition on " + std::to_string(single_order_gaps) +
                     " ordered pair(s) where the reverse order fails the function condition");
    }

    const std::size_t total = r.pairs.size();
    auto conclusion = [&](const std::string& id, const std::string& statement, bool holds, std::size_t count,
                          const std::string& miss) {
        if (!all_finite) return not_applicable(id, statement, "some pair has infinite D0");
        if (!holds) {
            return not_applicable(id, statement,
                                  "condition holds on " + std::to_string(count) + " of " + std::to_string(total) +
                                      " ordered pairs; first miss " + miss);
        }
        Check c(id, statement);
        for (const auto& p : r.pairs) {
            c.expect_lazy(p.d0 == p.d1 && p.d1 == p.d2, [&] {
                return pair_name(p.first, p.second) + ": D0=" + d(p.d0) + ", D1=" + d(p.d1) + ", D2=" + d(p.d2);
            });
        }
        auto v = c.done();
        const auto m = metric_verdict(id, statement,
                                      {check_metric(r, DistanceKind::d0), check_metric(r, DistanceKind::d1),
                                       check_metric(r, DistanceKind::d2)});
        if (v.status == VerdictStatus::pass && m.status == VerdictStatus::fail) {
            v.status = VerdictStatus::fail;
            v.counterexample = m.counterexample;
        }
        v.instances += m.instances;
        return v;
    };
    auto relation = conclusion("condition.relation",
                               "relation condition on all pairs implies D0 = D1 = D2, all metrics",
                               relation_count == total, relation_count, relation_miss);
    auto function = conclusion("condition.function",
                               "function condition on all pairs implies D0 = D1 = D2, all metrics",
                               function_count == total, function_count, function_miss);

    // D1 = D2 everywhere makes D1 and D2 metrics.
    TheoremVerdict d1d2;
    const std::string st = "D1 = D2 on all pairs implies D1 and D2 are metrics";
    const bool equal = std::all_of(r.pairs.begin(), r.pairs.end(), [](const PairDistances& p) { return p.d1 == p.d2; });
    if (equal) {
        d1d2 = metric_verdict("condition.d1_eq_d2_metrics", st,
                              {check_metric(r, DistanceKind::d1), check_metric(r, DistanceKind::d2)});
    } else {
        d1d2 = not_applicable("condition.d1_eq_d2_metrics", st, "D1 != D2 on some pair");
    }
    return {lemma.done(), implies.done(), relation, function, d1d2};
}

std::vector<TheoremVerdict> check_decoder(const DistanceEngine& engine, const DistanceReport& r,
                                          const CapabilityReport& cap) {
    const Channel& ch = engine.channel();
    Check sufficiency("decoder.d2_sufficiency", "d2min >= 2c + c' + 1 implies (c,c') joint error correction");
    Check iff("decoder.joint_iff", "(c,c') joint error correction (disjoint balls) iff d2min[c] >= c' + 1");
    for (const auto& g : cap.grid) {
        const auto at = "(c,c')=(" + std::to_string(g.c) + "," + std::to_string(g.cprime) + ")";
        if (r.d2_min >= Distance(2 * g.c + g.cprime + 1)) {
            sufficiency.expect(g.by_balls, at + ": d2min=" + d(r.d2_min) + " but balls intersect");
        } else {
            sufficiency.skip();
        }
        iff.expect_lazy(g.agree(), [&] {
            return at + ": balls " + (g.by_balls ? "disjoint" : "intersect") + ", d2min[c]=" + d(r.d2_min_at(g.c));
        });
    }

    Check zero("decoder.zero_error", "MWD and MWD(0) decode F(x,0) to x");
    for (std::size_t x = 0; x < ch.num_codewords(); ++x) {
        const Matrix y = ch.evaluate(x, ch.zero_error());
        bool ok = mwd(engine, y) == DecodeOutcome::decoded(x);
        try {
            ok = ok && mwd_bounded(engine, 0, y) == DecodeOutcome::decoded(x);
        } catch (const InvalidDecoderError&) {
            ok = false;
        }
        zero.expect(ok, "codeword #" + std::to_string(x) + " [" + ch.codeword(x).to_string() + "]");
    }

    Check corr("decoder.corrects_up_to_bound", "every z with w(z) <= floor((d0min-1)/2) is correctable");
    Check tc("decoder.t_c", "largest correctable weight t_c = floor((d0min-1)/2)");
    Check td("decoder.t_d", "largest detectable weight t_d = d1min - 1");
    Check cap_joint("decoder.joint_at_capability", "(t_c,0) and (0,t_d) joint error correction hold");
    const auto caps = "t_c=" + std::to_string(cap.t_c) + ", t_d=" + std::to_string(cap.t_d) +
                      ", d0min=" + d(r.d0_min) + ", d1min=" + d(r.d1_min);
    if (r.d0_min.is_finite()) {
        corr.expect(cap.t_c >= cap.t_c_bound, caps);
        tc.expect(cap.t_c == cap.t_c_bound, caps);
    } else {
        corr.skip();
        tc.expect(cap.t_c_full, caps + " (every error should be correctable)");
    }
    if (r.d1_min.is_finite()) {
        td.expect(cap.t_d == cap.t_d_bound, caps);
    } else {
        td.expect(cap.t_d_full, caps + " (every error should be detectable)");
    }
    const auto a = joint_verdict(engine, r, cap.t_c, 0);
    const auto b = joint_verdict(engine, r, 0, cap.t_d);
    cap_joint.expect(a.by_balls && a.by_distance && b.by_balls && b.by_distance, caps);
    return {sufficiency.done(), iff.done(), zero.done(), corr.done(), tc.done(), td.done(), cap_joint.done()};
}

std::vector<TheoremVerdict> check_weights(const Channel& ch, const AxiomOptions& options) {
    const auto rep = verify_weight_axioms(ch.field(), ch.error_shape().rows, ch.error_shape().cols,
                                          ch.weight_measure(), options);
    const std::string sampled =
        rep.exhaustive ? "" : "sampled with seed " + std::to_string(options.seed) + " (space too large for all pairs)";
    auto convert = [&](const std::string& id, const std::string& st, const AxiomCheck& a, bool pairwise) {
        TheoremVerdict v;
        v.id = id;
        v.statement = st;
        v.instances = a.instances;
        v.status = a.pass ? VerdictStatus::pass : VerdictStatus::fail;
        v.counterexample = a.witness;
        if (pairwise) v.note = sampled;
        return v;
    };
    const auto w = ch.weight_measure().describe();
    return {convert("weight.zero_iff_zero", w + ": w(z) >= 0 with equality iff z = 0", rep.zero_iff_zero, false),
            convert("weight.triangle", w + ": w(z + z') <= w(z) + w(z')", rep.triangle, true),
            convert("weight.inverse", w + ": w(-z) = w(z)", rep.inverse, false),
            convert("weight.decomposable", w + ": every split c1 + c2 = w(z) is realized by z = z1 + z2",
                    rep.decomposable, false)};
}

std::vector<TheoremVerdict> check_distance_invariants(const DistanceEngine& engine, const DistanceReport& r) {
    const Channel& ch = engine.channel();
    Check radius0("distance.ball_radius_zero", "Phi(x,0) = {F(x,0)}");
    Check monotone("distance.ball_monotone", "Phi(x,c) is contained in Phi(x,c+1)");
    Check self("distance.self_zero", "D0(x,x) = D1(x,x) = D2(x,x) = 0");
    Check sym("distance.d0_d2_symmetric", "D0 and D2 are symmetric");
    for (std::size_t x = 0; x < ch.num_codewords(); ++x) {
        const auto b0 = engine.ball(x, 0);
        radius0.expect(b0.size() == 1 && b0.members.front() == ch.evaluate(x, ch.zero_error()),
                       "codeword #" + std::to_string(x) + " has a radius-0 ball of size " + std::to_string(b0.size()));
        auto prev = b0;
        for (std::size_t c = 1; c <= engine.w_max(); ++c) {
            auto next = engine.ball(x, c);
            monotone.expect(std::includes(next.members.begin(), next.members.end(), prev.members.begin(),
                                          prev.members.end()),
                            "codeword #" + std::to_string(x) + ", c=" + std::to_string(c - 1));
            prev = std::move(next);
        }
        self.expect(engine.d0(x, x) == 0 && engine.d1(x, x) == 0 && engine.d2(x, x) == 0,
                    "codeword #" + std::to_string(x));
    }
    for (const auto& p : r.pairs) {
        const auto& q = r.pair(p.second, p.first);
        sym.expect_lazy(p.d0 == q.d0 && p.d2 == q.d2, [&] {
            return pair_name(p.first, p.second) + ": D0=" + d(p.d0) + "/" + d(q.d0) + ", D2=" + d(p.d2) + "/" + d(q.d2);
        });
    }
    return {radius0.done(), monotone.done(), self.done(), sym.done()};
}

void corrupt_report(DistanceReport& r) {
    if (r.pairs.empty()) return;
    r.pairs.front().d1 = Distance(0);
    r.d1_min = Distance(0);
}

Ledger run_all(const DistanceEngine& engine, const RunOptions& options) {
    const Channel& ch = engine.channel();
    DistanceReport r = minimum_distances(engine);
    if (options.corrupt_distances) corrupt_report(r);
    const ChannelClass cls = classify(ch);
    const CapabilityReport cap = capability(engine, r);

    Ledger ledger;
    auto append = [&](std::vector<TheoremVerdict> vs) {
        for (auto& v : vs) ledger.verdicts.push_back(std::move(v));
    };
    append(check_distance_invariants(engine, r));
    append(check_bounds(r));
    append(check_refined(r));
    append(check_error_linear_suite(r, cls));
    append(check_conditions(r));
    append(check_decoder(engine, r, cap));
    append(check_weights(ch, AxiomOptions{options.max_pairs, options.seed}));

    std::ostringstream cl;
    cl << "classification: error_linear=" << (cls.error_linear ? "true" : "false")
       << ", linear=" << (cls.linear ? "true" : "false") << ", code_linear=" << (cls.code_linear ? "true" : "false");
    if (!cls.witness.empty()) cl << "; witness: " << cls.witness;
    ledger.notes.push_back(cl.str());

    for (auto k : {DistanceKind::d0, DistanceKind::d1, DistanceKind::d2}) {
        const auto m = check_metric(r, k);
        std::string line = to_string(k) + (m.is_metric() ? " is a metric on this code" : " is not a metric on this code");
        for (const auto* part : {&m.nonnegativity, &m.symmetry, &m.triangle}) {
            if (part->status == VerdictStatus::fail) line += "; " + part->id + " fails at " + part->counterexample;
        }
        ledger.notes.push_back(line);
    }

    // Exploration only: how small D0 gets relative to D1.
    std::size_t best_num = 0, best_den = 0, below = 0;
    for (const auto& p : r.pairs) {
        if (p.d0.is_infinite() || p.d1.is_infinite() || p.d1.value() == 0) continue;
        const std::size_t n = p.d0.value(), dd = p.d1.value();
        if (best_den == 0 || n * best_den < best_num * dd) {
            best_num = n;
            best_den = dd;
        }
        below += n < dd;
    }
    if (best_den != 0) {
        ledger.notes.push_back("smallest D0/D1 over pairs = " + std::to_string(best_num) + "/" +
                               std::to_string(best_den) + "; pairs with D0 < D1: " + std::to_string(below));
    }
    return ledger;
}

Channel random_table_channel(std::uint64_t seed, const RandomTableOptions& options) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::uint32_t p = pick(0, 1) == 0 ? 2 : 3;
    const Field f = Field::prime(p);
    const std::size_t n_codewords = pick(2, std::max<std::size_t>(2, options.max_codewords));
    const std::size_t error_dim = pick(1, std::max<std::size_t>(1, options.max_error_dim));
    std::size_t out_len = pick(1, std::max<std::size_t>(1, options.max_output_len));
    // Binary 2x2 error matrices under rank weight add some variety to the Hamming vectors.
    const bool use_rank = p == 2 && error_dim == 4 && pick(0, 1) == 1;
    const Shape error_shape = use_rank ? Shape{2, 2} : Shape{1, error_dim};
    const WeightMeasure weight = use_rank ? WeightMeasure::rank() : WeightMeasure::hamming();

    std::size_t cw_len = 1;
    std::uint64_t space = p;
    while (space < n_codewords) {
        ++cw_len;
        space *= p;
    }
    std::vector<std::uint64_t> labels(space);
    for (std::uint64_t i = 0; i < space; ++i) labels[i] = i;
    std::shuffle(labels.begin(), labels.end(), rng);
    const MatrixSpace cws(1, cw_len, p);
    std::vector<Matrix> codewords;
    for (std::size_t i = 0; i < n_codewords; ++i) codewords.push_back(cws.at(labels[i]));
    std::sort(codewords.begin(), codewords.end());

    // The output space must hold |C| distinct zero-error outputs.
    out_len = std::max(out_len, cw_len);
    const MatrixSpace errs(error_shape.rows, error_shape.cols, p);
    const MatrixSpace outs(1, out_len, p);
    std::uniform_int_distribution<std::uint64_t> out_pick(0, outs.size() - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Matrix> table;
        table.reserve(n_codewords * errs.size());
        for (std::size_t x = 0; x < n_codewords; ++x) {
            for (std::uint64_t z = 0; z < errs.size(); ++z) table.push_back(outs.at(out_pick(rng)));
        }
        try {
            return table_channel(f, codewords, error_shape, weight, Shape{1, out_len}, std::move(table));
        } catch (const ConstructionError&) {
            continue;  // redraw until zero-error outputs are distinct
        }
    }
    throw ConstructionError("could not draw a valid random table channel");
}

Channel random_matrix_channel(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::size_t variant = seed % 3;  // 0 Hamming vectors, 1 rank, 2 sum-rank
    const std::uint32_t p = (variant == 0 && pick(0, 1) == 1) ? 3 : 2;
    const Field f = Field::prime(p);
    std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(p - 1));
    auto random_matrix = [&](std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (auto& s : m.entries()) s = sym(rng);
        return m;
    };

    const std::size_t rows = variant == 0 ? 1 : 2;
    const std::size_t n = variant == 0 ? pick(2, 4) : 2;
    const std::size_t k = pick(1, variant == 0 ? std::min<std::size_t>(n, 2) : 2);
    std::size_t n_err = 0;
    WeightMeasure weight = WeightMeasure::hamming();
    if (variant == 0) {
        n_err = pick(2, p == 3 ? 4 : 5);
    } else if (variant == 1) {
        n_err = 2;
        weight = WeightMeasure::rank();
    } else {
        n_err = 4;
        weight = WeightMeasure::sum_rank({2, 2});
    }
    const std::size_t out_cols = pick(std::max<std::size_t>(n, 2), 4);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix g = random_matrix(k, rows * n);
        if (rank(f, g) != k) continue;
        std::vector<Matrix> codewords;
        for (const auto& flat : span_codewords(f, g)) {
            codewords.emplace_back(rows, n, std::vector<Symbol>(flat.entries().begin(), flat.entries().end()));
        }
        Matrix a = random_matrix(n, out_cols);
        Matrix b = variant == 2 ? block_diagonal({random_matrix(2, out_cols / 2), random_matrix(2, out_cols - out_cols / 2)})
                                : random_matrix(n_err, out_cols);
        try {
            return matrix_channel(f, std::move(codewords), std::move(a), std::move(b), weight);
        } catch (const ConstructionError&) {
            continue;
        }
    }
    throw ConstructionError("could not draw a valid random matrix channel");
}

}  // namespace gnc
