#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnc/channel.hpp"

namespace gnc {

struct Edge {
    std::string tail;
    std::string head;

    std::string name() const { return "(" + tail + "," + head + ")"; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Local encoding function of one edge leaving a non-source node.
///
/// The arguments are the symbols on the tail's incoming edges, in declared
/// edge order. `table` has q^indegree entries indexed in base q with the
/// first incoming edge most significant.
struct LocalFunction {
    std::vector<Symbol> table;
};

/// A coherent single-source single-sink acyclic network.
struct NetworkSpec {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;  // defines the error coordinate order
    std::string source;
    std::string sink;
    std::map<std::size_t, LocalFunction> functions;  // keyed by edge index; source edges have none
    /// Source edges in the order they carry the codeword coordinates.
    /// Empty means declared order.
    std::vector<std::size_t> emission;
};

/// The emission order actually used (declared order when unset).
std::vector<std::size_t> source_emission(const NetworkSpec& spec);

/// Edge indices into `node`, in declared order.
std::vector<std::size_t> incoming_edges(const NetworkSpec& spec, const std::string& node);
std::vector<std::size_t> outgoing_edges(const NetworkSpec& spec, const std::string& node);

/// Checks the structural invariants and table sizes for field size q.
/// Returns one topological order of the edges (tails before heads).
std::vector<std::size_t> validate_network(const NetworkSpec& spec, std::size_t q);

/// Symbols carried by every edge after error injection, in declared order.
/// `order` overrides the evaluation order; it must be a valid topological edge order.
std::vector<Symbol> edge_assignment(const NetworkSpec& spec, const Field& f, const Matrix& x, const Matrix& z,
                                    const std::optional<std::vector<std::size_t>>& order = std::nullopt);

/// Channel with errors in F_q^{|E|} (Hamming) and outputs the In(t) symbols.
Channel compile_network(const NetworkSpec& spec, const Field& f, std::vector<Matrix> codewords, Budget budget = {});

struct TransferMatrices {
    Matrix f_st;  // |Out(s)| x |In(t)|
    Matrix h_t;   // |E| x |In(t)|
};

/// Transfer matrices of a network whose local functions are all linear.
/// Throws NonlinearityError naming the first nonlinear node and edge; the
/// matrix form is then compared with edge-by-edge evaluation over all
/// (x, z) within the budget (ConsistencyError on mismatch).
TransferMatrices linear_transfer_matrices(const NetworkSpec& spec, const Field& f, Budget budget = {});

struct NetworkExample {
    NetworkSpec spec;
    Field field;
    std::vector<Matrix> codewords;
};

/// The three-coordinate ternary network with nonlinear nodes b and d and
/// code {(0,0,0), (1,1,1)}.
NetworkExample toy_example();

/// The toy network compiled into a channel.
Channel toy_channel(Budget budget = {});

}  // namespace gnc
