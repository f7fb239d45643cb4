#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace topogen {

// Dense node index. Ids are assigned in creation order, so the id doubles as
// the node's age rank.
using NodeId = std::uint32_t;

// Undirected simple graph: no self-loops, no multi-edges. Neighbor lists are
// kept sorted, which makes membership tests logarithmic and file output
// canonical. Nodes and edges are append-only.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n) : adj_(n) {}

    // Returns the id of the new node (= previous node count).
    NodeId add_node();

    // Inserts the undirected edge {u, v}. Self-loops and already-present
    // edges are rejected by returning false with the graph unchanged.
    // Ids outside the graph throw std::out_of_range.
    bool add_edge(NodeId u, NodeId v);

    NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    std::uint64_t edge_count() const { return edges_; }

    std::uint32_t degree(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;
    std::span<const NodeId> neighbors(NodeId v) const;

    std::uint32_t max_degree() const;

    // Every edge once as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    bool is_connected() const;

    // Verifies simplicity, symmetry and the degree-sum identity; throws
    // std::logic_error naming the first violation.
    void check_invariants() const;

private:
    void require(NodeId v) const;

    std::vector<std::vector<NodeId>> adj_;
    std::uint64_t edges_ = 0;
};

} // namespace topogen
