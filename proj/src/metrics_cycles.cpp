#include <stdexcept>
#include <string>
#include <vector>

#include "topogen/metrics.hpp"

namespace topogen {

// One 2-path sweep per node v: count[w] = |N(v) ∩ N(w)|. Triangles are the
// common-neighbor counts towards v's own neighbors (each pair of BFS orders
// hits once, so the sum double-counts). Quadrangles: a non-adjacent opposite
// corner w with c >= 2 shared neighbors closes c - 1 independent 4-cycles
// v-a-w-b, and k_q(v) sums those over w. Cost is sum over edges of the far
// endpoint's degree, i.e. sum_k k^2.
CycleCoefficients cycle_coefficients(const Graph& g) {
    const std::size_t n = g.node_count();
    CycleCoefficients out;
    out.triangles.assign(n, 0);
    out.quadrangles.assign(n, 0);
    std::vector<std::uint32_t> count(n, 0);
    std::vector<char> is_neighbor(n, 0);
    std::vector<NodeId> touched;
    touched.reserve(n);

    for (NodeId v = 0; v < n; ++v) {
        for (NodeId a : g.neighbors(v)) {
            is_neighbor[a] = 1;
            for (NodeId w : g.neighbors(a)) {
                if (w == v) continue;
                if (count[w]++ == 0) touched.push_back(w);
            }
        }
        std::int64_t two_paths_to_neighbors = 0;
        for (NodeId w : g.neighbors(v)) two_paths_to_neighbors += count[w];
        out.triangles[v] = two_paths_to_neighbors / 2;

        std::int64_t quads = 0;
        for (NodeId w : touched) {
            const std::int64_t c = count[w];
            count[w] = 0;
            if (c >= 2 && !is_neighbor[w]) quads += c - 1;
        }
        out.quadrangles[v] = quads;
        touched.clear();
        for (NodeId a : g.neighbors(v)) is_neighbor[a] = 0;
    }
    return out;
}

std::vector<std::int64_t> triangle_coefficients(const Graph& g) {
    return cycle_coefficients(g).triangles;
}

std::vector<std::int64_t> quadrangle_coefficients(const Graph& g) {
    return cycle_coefficients(g).quadrangles;
}

double clustering_coefficient(std::int64_t k, std::int64_t k_t) {
    if (k < 2) return 0.0;
    return 2.0 * static_cast<double>(k_t) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

KnnStats knn(const Graph& g) {
    const std::size_t n = g.node_count();
    KnnStats stats;
    stats.per_node.assign(n, 0.0);
    std::vector<std::uint32_t> degrees(n);
    long double sum = 0.0L;
    for (NodeId v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        if (nb.empty())
            throw std::runtime_error("k_nn undefined: node " + std::to_string(v) +
                                     " has degree 0");
        std::uint64_t neighbor_degrees = 0;
        for (NodeId w : nb) neighbor_degrees += g.degree(w);
        stats.per_node[v] = static_cast<double>(neighbor_degrees) / static_cast<double>(nb.size());
        degrees[v] = g.degree(v);
        sum += stats.per_node[v];
    }
    stats.vs_degree = per_degree_mean(degrees, stats.per_node);
    stats.mean = static_cast<double>(sum / static_cast<long double>(n));
    return stats;
}

} // namespace topogen
