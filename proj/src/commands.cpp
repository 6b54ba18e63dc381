#include "gnc/commands.hpp"

#include <chrono>

#include "gnc/decoder.hpp"
#include "gnc/errors.hpp"
#include "gnc/network.hpp"

namespace gnc {

std::string format_word(const Matrix& m) {
    if (m.rows() == 1) return "(" + m.to_string() + ")";
    return "[" + m.to_string() + "]";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Channel and engine for one command, with phase timings.
struct Session {
    Channel channel;
    DistanceEngine engine;
    Report report;

    Session(const Config& config, const CommandOptions& options, std::string command, Clock::time_point start)
        : channel(build(config, options)), engine(channel, options.parallelism) {
        report.command = std::move(command);
        report.config_hash = fnv1a64(config.text);
        report.seed = options.seed;
        report.timing.emplace_back("build", since(start));
    }

    static Channel build(const Config& config, const CommandOptions& options) {
        Config c = config;
        if (options.max_pairs) c.budget.max_pairs = *options.max_pairs;
        return build_channel(c);
    }
};

std::string label(std::size_t i, std::size_t j) { return "(#" + std::to_string(i) + ",#" + std::to_string(j) + ")"; }

Table codeword_table(const Channel& ch) {
    Table t{"codewords", {"#", "codeword", "F(x,0)"}, {}};
    for (std::size_t i = 0; i < ch.num_codewords(); ++i) {
        t.rows.push_back({std::to_string(i), format_word(ch.codeword(i)), format_word(ch.evaluate(i, ch.zero_error()))});
    }
    return t;
}

void add_distances(Report& out, const DistanceReport& r) {
    Table pairs{"pair distances", {"pair", "D0", "D1", "D2", "tau", "c*", "D2[c], c = 0..tau"}, {}};
    for (const auto& p : r.pairs) {
        const auto name = label(p.first, p.second);
        std::string refined, tau = "-", cstar = "-";
        const std::size_t upto = p.thresholds ? p.thresholds->tau : r.w_max;
        for (std::size_t c = 0; c <= upto; ++c) {
            refined += (c ? " " : "") + p.refined(c).to_string();
            out.distances.push_back({name, "D2[c]", c, p.refined(c)});
        }
        if (p.thresholds) {
            tau = std::to_string(p.thresholds->tau);
            cstar = std::to_string(p.thresholds->cstar);
        } else {
            refined += " (D0 infinite; shown to w_max)";
        }
        pairs.rows.push_back({name, p.d0.to_string(), p.d1.to_string(), p.d2.to_string(), tau, cstar, refined});
        out.distances.push_back({name, "D0", std::nullopt, p.d0});
        out.distances.push_back({name, "D1", std::nullopt, p.d1});
        out.distances.push_back({name, "D2", std::nullopt, p.d2});
    }
    Table minima{"minimum distances", {"quantity", "value"}, {}};
    minima.rows.push_back({"d0min", r.d0_min.to_string()});
    minima.rows.push_back({"d1min", r.d1_min.to_string()});
    minima.rows.push_back({"d2min", r.d2_min.to_string()});
    out.distances.push_back({"min", "D0", std::nullopt, r.d0_min});
    out.distances.push_back({"min", "D1", std::nullopt, r.d1_min});
    out.distances.push_back({"min", "D2", std::nullopt, r.d2_min});
    for (std::size_t c = 0; c <= r.w_max; ++c) {
        minima.rows.push_back({"d2min[" + std::to_string(c) + "]", r.d2_min_at(c).to_string()});
        out.distances.push_back({"min", "D2[c]", c, r.d2_min_at(c)});
    }
    if (r.d0_min.is_finite()) {
        const auto th = tau_and_cstar(r.d0_min);
        minima.rows.push_back({"tau", std::to_string(th.tau)});
        minima.rows.push_back({"c*", std::to_string(th.cstar)});
    }
    out.tables.push_back(std::move(pairs));
    out.tables.push_back(std::move(minima));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Report cmd_distances(const Config& config, const CommandOptions& options) {
    const auto start = Clock::now();
    Session s(config, options, "distances", start);
    s.report.tables.push_back(codeword_table(s.channel));
    const auto t = Clock::now();
    const auto r = minimum_distances(s.engine);
    s.report.timing.emplace_back("distances", since(t));
    add_distances(s.report, r);
    return s.report;
}

Report cmd_capability(const Config& config, const CommandOptions& options) {
    const auto start = Clock::now();
    Session s(config, options, "capability", start);
    const auto t = Clock::now();
    const auto r = minimum_distances(s.engine);
    const auto cap = capability(s.engine, r);
    s.report.timing.emplace_back("capability", since(t));
    Table summary{"capability", {"quantity", "value"}, {}};
    summary.rows.push_back({"corrects", std::to_string(cap.t_c) + (cap.t_c_full ? " (every error)" : "")});
    summary.rows.push_back({"detects", std::to_string(cap.t_d) + (cap.t_d_full ? " (every error)" : "")});
    summary.rows.push_back({"floor((d0min-1)/2)", r.d0_min.is_finite() ? std::to_string(cap.t_c_bound) : "-"});
    summary.rows.push_back({"d1min-1", r.d1_min.is_finite() ? std::to_string(cap.t_d_bound) : "-"});
    summary.rows.push_back({"w_max", std::to_string(cap.w_max)});
    Table grid{"joint error correction", {"c", "c'", "d2min[c]", "joint"}, {}};
    for (const auto& g : cap.grid) {
        if (!g.agree()) {
            throw ConsistencyError("joint verdicts disagree at (" + std::to_string(g.c) + "," +
                                   std::to_string(g.cprime) + ")");
        }
        grid.rows.push_back({std::to_string(g.c), std::to_string(g.cprime), r.d2_min_at(g.c).to_string(),
                             yes_no(g.by_distance)});
    }
    s.report.tables.push_back(std::move(summary));
    s.report.tables.push_back(std::move(grid));
    return s.report;
}

Report cmd_joint(const Config& config, std::size_t c, std::size_t cprime, bool cross_check,
                 const CommandOptions& options) {
    const auto start = Clock::now();
    Session s(config, options, "joint", start);
    const auto t = Clock::now();
    const auto r = minimum_distances(s.engine);
    const bool verdict = cross_check ? is_joint_correcting(s.engine, r, c, cprime) : r.d2_min_at(c) >= Distance(cprime + 1);
    s.report.timing.emplace_back("joint", since(t));
    Table out{"joint error correction", {"c", "c'", "d2min[c]", "joint"}, {}};
    out.rows.push_back({std::to_string(c), std::to_string(cprime), r.d2_min_at(c).to_string(), yes_no(verdict)});
    s.report.tables.push_back(std::move(out));
    s.report.distances.push_back({"min", "D2[c]", c, r.d2_min_at(c)});
    if (cross_check) s.report.notes.push_back("ball test and d2min[c] agree");
    return s.report;
}

Report cmd_verify(const Config& config, const CommandOptions& options) {
    const auto start = Clock::now();
    Session s(config, options, "verify", start);
    const auto t = Clock::now();
    RunOptions ro;
    ro.seed = options.seed;
    if (options.max_pairs) ro.max_pairs = *options.max_pairs;
    ro.corrupt_distances = options.corrupt_distances;
    auto ledger = run_all(s.engine, ro);
    s.report.timing.emplace_back("verify", since(t));
    s.report.verdicts = std::move(ledger.verdicts);
    s.report.notes = std::move(ledger.notes);
    s.report.exit_code = ledger.count(VerdictStatus::fail) > 0 ? 1 : 0;
    for (const auto& v : s.report.verdicts) {
        if (v.status == VerdictStatus::fail) s.report.exit_code = 1;
    }
    return s.report;
}

Report cmd_decode(const Config& config, const std::string& y_text, std::optional<std::size_t> bounded,
                  const CommandOptions& options) {
    const auto start = Clock::now();
    Session s(config, options, "decode", start);
    const Channel& ch = s.channel;
    Matrix y = parse_symbols(y_text, ch.field().size());
    const Shape out = ch.output_shape();
    if (y.rows() == 1 && out.rows > 1 && y.cols() == out.entries()) {
        y = Matrix(out.rows, out.cols, std::vector<Symbol>(y.entries().begin(), y.entries().end()));
    }
    if (shape_of(y) != out) {
        throw ParseError(0, "received word has shape " + shape_of(y).to_string() + ", outputs are " + out.to_string());
    }
    const auto t = Clock::now();
    const DecodeOutcome d = bounded ? mwd_bounded(s.engine, *bounded, y) : mwd(s.engine, y);
    s.report.timing.emplace_back("decode", since(t));
    Table result{"decode", {"received", "decoder", "outcome"}, {}};
    const std::string decoder = bounded ? "bounded c=" + std::to_string(*bounded) : "minimum weight";
    const std::string outcome = d.is_decoded() ? "Decoded " + format_word(ch.codeword(d.codeword())) : "Detected";
    result.rows.push_back({format_word(y), decoder, outcome});
    s.report.tables.push_back(std::move(result));
    return s.report;
}

Report cmd_classify(const Config& config, const CommandOptions& options) {
    const auto start = Clock::now();
    Session s(config, options, "classify", start);
    const auto t = Clock::now();
    const auto cls = classify(s.channel);
    s.report.timing.emplace_back("classify", since(t));
    Table out{"classification", {"property", "value"}, {}};
    out.rows.push_back({"kind", s.channel.kind()});
    out.rows.push_back({"field", s.channel.field().describe()});
    out.rows.push_back({"weight", s.channel.weight_measure().describe()});
    out.rows.push_back({"codewords", std::to_string(s.channel.num_codewords())});
    out.rows.push_back({"errors", std::to_string(s.channel.num_errors())});
    out.rows.push_back({"error_linear", yes_no(cls.error_linear)});
    out.rows.push_back({"linear", yes_no(cls.linear)});
    out.rows.push_back({"code_linear", yes_no(cls.code_linear)});
    if (!cls.witness.empty()) out.rows.push_back({"witness", cls.witness});
    if (config.kind == "network") {
        try {
            Config c = config;
            if (options.max_pairs) c.budget.max_pairs = *options.max_pairs;
            const auto tm = linear_transfer_matrices(c.network, config_field(c), c.budget);
            out.rows.push_back({"F_st", tm.f_st.to_string()});
            out.rows.push_back({"H_t", tm.h_t.to_string()});
        } catch (const NonlinearityError& e) {
            out.rows.push_back({"transfer matrices", "none; node " + e.node() + " is nonlinear on edge " + e.edge()});
        }
    }
    s.report.tables.push_back(std::move(out));
    return s.report;
}

}  // namespace gnc
