#include "topogen/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace topogen {

void Graph::require(NodeId v) const {
    if (v >= adj_.size())
        throw std::out_of_range("node id " + std::to_string(v) + " out of range (N=" +
                                std::to_string(adj_.size()) + ")");
}

NodeId Graph::add_node() {
    adj_.emplace_back();
    return static_cast<NodeId>(adj_.size() - 1);
}

bool Graph::add_edge(NodeId u, NodeId v) {
    require(u);
    require(v);
    if (u == v) return false;
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
    return true;
}

std::uint32_t Graph::degree(NodeId v) const {
    require(v);
    return static_cast<std::uint32_t>(adj_[v].size());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    require(u);
    require(v);
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    require(v);
    return {adj_[v].data(), adj_[v].size()};
}

std::uint32_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nb : adj_) best = std::max(best, nb.size());
    return static_cast<std::uint32_t>(best);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edges_);
    for (NodeId u = 0; u < adj_.size(); ++u)
        for (NodeId v : adj_[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<NodeId> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        NodeId v = queue.back();
        queue.pop_back();
        for (NodeId w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == adj_.size();
}

void Graph::check_invariants() const {
    std::uint64_t degree_sum = 0;
    for (NodeId v = 0; v < adj_.size(); ++v) {
        const auto& nb = adj_[v];
        degree_sum += nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == v)
                throw std::logic_error("self-loop at node " + std::to_string(v));
            if (nb[i] >= adj_.size())
                throw std::logic_error("dangling neighbor at node " + std::to_string(v));
            if (i > 0 && nb[i] <= nb[i - 1])
                throw std::logic_error("unsorted or duplicate neighbor list at node " +
                                       std::to_string(v));
            if (!has_edge(nb[i], v))
                throw std::logic_error("asymmetric edge " + std::to_string(v) + "-" +
                                       std::to_string(nb[i]));
        }
    }
    if (degree_sum != 2 * edges_)
        throw std::logic_error("degree sum " + std::to_string(degree_sum) +
                               " != 2L = " + std::to_string(2 * edges_));
}

} // namespace topogen
