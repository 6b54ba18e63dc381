#include "gnc/network.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gnc/errors.hpp"

namespace gnc {

std::vector<std::size_t> incoming_edges(const NetworkSpec& spec, const std::string& node) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        if (spec.edges[i].head == node) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> outgoing_edges(const NetworkSpec& spec, const std::string& node) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        if (spec.edges[i].tail == node) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> source_emission(const NetworkSpec& spec) {
    return spec.emission.empty() ? outgoing_edges(spec, spec.source) : spec.emission;
}

std::vector<std::size_t> validate_network(const NetworkSpec& spec, std::size_t q) {
    std::set<std::string> names;
    for (const auto& n : spec.nodes) {
        if (n.empty()) throw SpecificationError("empty node name");
        if (!names.insert(n).second) throw SpecificationError("duplicate node '" + n + "'");
    }
    if (!names.contains(spec.source)) throw SpecificationError("source '" + spec.source + "' is not a node");
    if (!names.contains(spec.sink)) throw SpecificationError("sink '" + spec.sink + "' is not a node");
    if (spec.source == spec.sink) throw SpecificationError("source and sink must differ");

    for (const auto& e : spec.edges) {
        if (!names.contains(e.tail) || !names.contains(e.head)) {
            throw SpecificationError("edge " + e.name() + " references an unknown node");
        }
        if (e.tail == e.head) throw SpecificationError("self-loop " + e.name());
        if (e.head == spec.source) throw SpecificationError("edge " + e.name() + " enters the source");
        if (e.tail == spec.sink) throw SpecificationError("edge " + e.name() + " leaves the sink");
    }
    if (outgoing_edges(spec, spec.source).empty()) throw SpecificationError("source has no outgoing edges");
    if (incoming_edges(spec, spec.sink).empty()) throw SpecificationError("sink has no incoming edges");
    if (!spec.emission.empty()) {
        auto given = spec.emission;
        auto out_s = outgoing_edges(spec, spec.source);
        std::sort(given.begin(), given.end());
        if (given != out_s) throw SpecificationError("emission order must list each source edge exactly once");
    }

    // Kahn's algorithm on nodes, smallest declared position first for determinism.
    std::map<std::string, std::size_t> indegree;
    for (const auto& n : spec.nodes) indegree[n] = 0;
    for (const auto& e : spec.edges) ++indegree[e.head];
    for (const auto& n : spec.nodes) {
        if (n != spec.source && indegree[n] == 0 && !outgoing_edges(spec, n).empty()) {
            throw SpecificationError("node '" + n + "' has outgoing edges but no incoming edge");
        }
    }
    std::vector<std::string> node_order;
    std::vector<bool> done(spec.nodes.size(), false);
    while (node_order.size() < spec.nodes.size()) {
        bool progressed = false;
        for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
            if (done[i] || indegree[spec.nodes[i]] != 0) continue;
            done[i] = true;
            node_order.push_back(spec.nodes[i]);
            for (auto e : outgoing_edges(spec, spec.nodes[i])) --indegree[spec.edges[e].head];
            progressed = true;
            break;
        }
        if (!progressed) throw SpecificationError("network graph has a cycle");
    }

    for (const auto& [e, fn] : spec.functions) {
        if (e >= spec.edges.size()) throw SpecificationError("local function for unknown edge #" + std::to_string(e));
        if (spec.edges[e].tail == spec.source) {
            throw SpecificationError("source edge " + spec.edges[e].name() + " carries a codeword symbol, not a function");
        }
    }
    std::vector<std::size_t> order;
    for (const auto& n : node_order) {
        const auto in = incoming_edges(spec, n);
        for (auto e : outgoing_edges(spec, n)) {
            order.push_back(e);
            if (n == spec.source) continue;
            const auto it = spec.functions.find(e);
            if (it == spec.functions.end()) {
                throw SpecificationError("edge " + spec.edges[e].name() + " has no local function");
            }
            std::uint64_t expected = 1;
            for (std::size_t i = 0; i < in.size(); ++i) {
                expected *= q;
                if (expected > (1u << 24)) {
                    throw BudgetError("local function of " + spec.edges[e].name() + " has too many inputs");
                }
            }
            if (it->second.table.size() != expected) {
                throw SpecificationError("local function of " + spec.edges[e].name() + " has " +
                                         std::to_string(it->second.table.size()) + " rows, expected " +
                                         std::to_string(expected));
            }
            for (auto s : it->second.table) {
                if (s >= q) {
                    throw SpecificationError("local function of " + spec.edges[e].name() + " outputs symbol " +
                                             std::to_string(s) + " outside the field");
                }
            }
        }
    }
    return order;
}

namespace {

// Precomputed wiring for fast repeated evaluation.
struct Wiring {
    std::vector<std::size_t> order;
    std::vector<std::optional<std::size_t>> source_position;  // index into x for source edges
    std::vector<std::vector<std::size_t>> inputs;             // incoming edges of the tail
    std::vector<std::size_t> sink_edges;
};

Wiring wire(const NetworkSpec& spec, std::vector<std::size_t> order) {
    Wiring w;
    w.order = std::move(order);
    w.source_position.resize(spec.edges.size());
    w.inputs.resize(spec.edges.size());
    const auto out_s = source_emission(spec);
    for (std::size_t k = 0; k < out_s.size(); ++k) w.source_position[out_s[k]] = k;
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        if (!w.source_position[e]) w.inputs[e] = incoming_edges(spec, spec.edges[e].tail);
    }
    w.sink_edges = incoming_edges(spec, spec.sink);
    return w;
}

std::vector<Symbol> run(const NetworkSpec& spec, const Wiring& w, const Field& f, std::span<const Symbol> x,
                        std::span<const Symbol> z) {
    std::vector<Symbol> sym(spec.edges.size(), 0);
    std::vector<bool> ready(spec.edges.size(), false);
    for (auto e : w.order) {
        Symbol v;
        if (w.source_position[e]) {
            v = x[*w.source_position[e]];
        } else {
            std::size_t idx = 0;
            for (auto in : w.inputs[e]) {
                if (!ready[in]) {
                    throw PreconditionError("evaluation order visits " + spec.edges[e].name() + " before its input " +
                                            spec.edges[in].name());
                }
                idx = idx * f.size() + sym[in];
            }
            v = spec.functions.at(e).table[idx];
        }
        sym[e] = f.add(v, z[e]);
        ready[e] = true;
    }
    return sym;
}

class NetworkTransfer final : public Transfer {
public:
    NetworkTransfer(NetworkSpec spec, Field f, Wiring w) : spec_(std::move(spec)), f_(std::move(f)), w_(std::move(w)) {}

    Matrix apply(std::size_t, const Matrix& x, const Matrix& z) const override {
        const auto sym = run(spec_, w_, f_, x.entries(), z.entries());
        Matrix y(1, w_.sink_edges.size());
        for (std::size_t i = 0; i < w_.sink_edges.size(); ++i) y(0, i) = sym[w_.sink_edges[i]];
        return y;
    }
    std::string kind() const override { return "network"; }

private:
    NetworkSpec spec_;
    Field f_;
    Wiring w_;
};

void check_inputs(const NetworkSpec& spec, const Matrix& x, const Matrix& z) {
    const std::size_t n_out = outgoing_edges(spec, spec.source).size();
    if (x.rows() != 1 || x.cols() != n_out) {
        throw PreconditionError("codeword must be a 1x" + std::to_string(n_out) + " vector");
    }
    if (z.rows() != 1 || z.cols() != spec.edges.size()) {
        throw PreconditionError("error must be a 1x" + std::to_string(spec.edges.size()) + " vector");
    }
}

}  // namespace

std::vector<Symbol> edge_assignment(const NetworkSpec& spec, const Field& f, const Matrix& x, const Matrix& z,
                                    const std::optional<std::vector<std::size_t>>& order) {
    auto topo = validate_network(spec, f.size());
    check_inputs(spec, x, z);
    if (order) {
        auto sorted = *order;
        std::sort(sorted.begin(), sorted.end());
        auto expected = topo;
        std::sort(expected.begin(), expected.end());
        if (sorted != expected) throw PreconditionError("evaluation order must list every edge exactly once");
        topo = *order;
    }
    return run(spec, wire(spec, std::move(topo)), f, x.entries(), z.entries());
}

Channel compile_network(const NetworkSpec& spec, const Field& f, std::vector<Matrix> codewords, Budget budget) {
    auto topo = validate_network(spec, f.size());
    const std::size_t n_out = outgoing_edges(spec, spec.source).size();
    for (const auto& x : codewords) {
        if (x.rows() != 1 || x.cols() != n_out) {
            throw SpecificationError("codeword [" + x.to_string() + "] must have " + std::to_string(n_out) +
                                     " symbols, one per source edge");
        }
    }
    ChannelParts parts;
    parts.field = f;
    parts.codewords = std::move(codewords);
    parts.error_shape = Shape{1, spec.edges.size()};
    parts.weight = WeightMeasure::hamming();
    parts.output_shape = Shape{1, incoming_edges(spec, spec.sink).size()};
    parts.transfer = std::make_shared<NetworkTransfer>(spec, f, wire(spec, std::move(topo)));
    parts.budget = budget;
    return make_channel(std::move(parts));
}

TransferMatrices linear_transfer_matrices(const NetworkSpec& spec, const Field& f, Budget budget) {
    const auto topo = validate_network(spec, f.size());
    const std::size_t q = f.size();
    for (auto e : topo) {
        if (spec.edges[e].tail == spec.source) continue;
        const auto& table = spec.functions.at(e).table;
        const std::size_t k = incoming_edges(spec, spec.edges[e].tail).size();
        // table(e_i): the value on the i-th unit input.
        std::vector<Symbol> unit(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t idx = 1;
            for (std::size_t r = i + 1; r < k; ++r) idx *= q;
            unit[i] = table[idx];
        }
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            std::vector<Symbol> args(k);
            std::size_t rest = idx;
            for (std::size_t i = k; i-- > 0;) {
                args[i] = static_cast<Symbol>(rest % q);
                rest /= q;
            }
            Symbol expect = 0;
            for (std::size_t i = 0; i < k; ++i) expect = f.add(expect, f.mul(unit[i], args[i]));
            if (table[idx] != expect) {
                std::string in;
                for (std::size_t i = 0; i < k; ++i) in += (i ? "," : "") + std::to_string(args[i]);
                const std::string& node = spec.edges[e].tail;
                throw NonlinearityError(node, spec.edges[e].name(),
                                        "local function of " + spec.edges[e].name() + " at node " + node +
                                            " is not linear: inputs (" + in + ") give " + std::to_string(table[idx]) +
                                            ", the linear extension of its unit values gives " +
                                            std::to_string(expect));
            }
        }
    }

    const Wiring w = wire(spec, topo);
    const std::size_t n_out = outgoing_edges(spec, spec.source).size();
    const std::size_t n_e = spec.edges.size();
    const std::size_t n_in = w.sink_edges.size();
    auto output = [&](const std::vector<Symbol>& x, const std::vector<Symbol>& z) {
        const auto sym = run(spec, w, f, x, z);
        std::vector<Symbol> y(n_in);
        for (std::size_t i = 0; i < n_in; ++i) y[i] = sym[w.sink_edges[i]];
        return y;
    };

    TransferMatrices m{Matrix(n_out, n_in), Matrix(n_e, n_in)};
    for (std::size_t i = 0; i < n_out; ++i) {
        std::vector<Symbol> x(n_out, 0);
        x[i] = 1;
        const auto y = output(x, std::vector<Symbol>(n_e, 0));
        for (std::size_t c = 0; c < n_in; ++c) m.f_st(i, c) = y[c];
    }
    for (std::size_t e = 0; e < n_e; ++e) {
        std::vector<Symbol> z(n_e, 0);
        z[e] = 1;
        const auto y = output(std::vector<Symbol>(n_out, 0), z);
        for (std::size_t c = 0; c < n_in; ++c) m.h_t(e, c) = y[c];
    }

    const MatrixSpace xs(1, n_out, q);
    const MatrixSpace zs(1, n_e, q);
    auto verify = [&](const Matrix& x, const Matrix& z) {
        const auto direct = output(std::vector<Symbol>(x.entries().begin(), x.entries().end()),
                                   std::vector<Symbol>(z.entries().begin(), z.entries().end()));
        const Matrix via = add(f, multiply(f, x, m.f_st), multiply(f, z, m.h_t));
        if (!std::equal(direct.begin(), direct.end(), via.entries().begin())) {
            throw ConsistencyError("transfer matrices disagree with network evaluation at x=[" + x.to_string() +
                                   "], z=[" + z.to_string() + "]");
        }
    };
    const bool exhaustive = xs.fits_u64() && zs.fits_u64() && xs.size() <= budget.max_pairs &&
                            zs.size() <= budget.max_pairs / xs.size();
    if (exhaustive) {
        for (std::uint64_t a = 0; a < xs.size(); ++a) {
            for (std::uint64_t b = 0; b < zs.size(); ++b) verify(xs.at(a), zs.at(b));
        }
    } else {
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(q - 1));
        for (std::uint64_t t = 0; t < budget.max_pairs; ++t) {
            Matrix x(1, n_out), z(1, n_e);
            for (auto& s : x.entries()) s = sym(rng);
            for (auto& s : z.entries()) s = sym(rng);
            verify(x, z);
        }
    }
    return m;
}

NetworkExample toy_example() {
    NetworkSpec spec;
    spec.nodes = {"s", "a", "b", "c", "d", "t"};
    spec.edges = {{"s", "a"}, {"s", "b"}, {"s", "c"}, {"a", "b"}, {"b", "d"},
                  {"c", "d"}, {"a", "t"}, {"d", "t"}, {"c", "t"}};
    spec.source = "s";
    spec.sink = "t";
    const LocalFunction copy{{0, 1, 2}};
    spec.functions[3] = copy;                                   // (a,b) <- (s,a)
    spec.functions[6] = copy;                                   // (a,t) <- (s,a)
    spec.functions[5] = copy;                                   // (c,d) <- (s,c)
    spec.functions[8] = copy;                                   // (c,t) <- (s,c)
    spec.functions[4] = LocalFunction{{0, 0, 0, 2, 1, 0, 0, 0, 0}};  // (b,d) <- (s,b),(a,b)
    spec.functions[7] = LocalFunction{{0, 0, 0, 1, 1, 0, 0, 1, 0}};  // (d,t) <- (b,d),(c,d)
    return NetworkExample{std::move(spec), Field::prime(3),
                          {Matrix::row_vector({0, 0, 0}), Matrix::row_vector({1, 1, 1})}};
}

Channel toy_channel(Budget budget) {
    auto ex = toy_example();
    return compile_network(ex.spec, ex.field, std::move(ex.codewords), budget);
}

}  // namespace gnc
