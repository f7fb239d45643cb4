#include <atomic>
#include <cstring>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "topogen/metrics.hpp"

namespace topogen {

namespace {

constexpr std::size_t kSourcesPerBlock = 256;

unsigned pick_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

struct AllPairsResult {
    std::vector<double> mean_dist; // l(v)
    std::vector<double> cb_star;   // empty unless betweenness requested
};

// Per-source BFS over the whole graph; optionally a Brandes dependency sweep
// on the shortest-path DAG. Sources are processed in fixed blocks and the
// betweenness partials reduced in block order, so results do not depend on
// the thread count.
class AllPairsEngine {
public:
    AllPairsEngine(const Graph& g, bool want_betweenness, unsigned threads)
        : g_(g), n_(g.node_count()), want_betweenness_(want_betweenness),
          threads_(pick_threads(threads)) {}

    AllPairsResult run() {
        if (n_ == 0) throw std::invalid_argument("path statistics of an empty graph");
        require_connected(g_);

        const std::size_t blocks = (n_ + kSourcesPerBlock - 1) / kSourcesPerBlock;
        mean_dist_.assign(n_, 0.0);
        if (want_betweenness_) block_acc_.assign(blocks, {});

        next_block_.store(0);
        const unsigned workers = static_cast<unsigned>(
            std::min<std::size_t>(threads_, blocks));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < workers; ++t)
            pool.emplace_back([this] { work(); });
        work();
        for (auto& th : pool) th.join();

        AllPairsResult result;
        result.mean_dist = std::move(mean_dist_);
        if (want_betweenness_) {
            // Interior contributions in block order, then the endpoint terms:
            // every node is an endpoint of 2(N-1) ordered pairs.
            std::vector<double> cb(n_, 0.0);
            for (const auto& acc : block_acc_)
                for (std::size_t v = 0; v < n_; ++v) cb[v] += acc[v];
            const double endpoint = 2.0 * static_cast<double>(n_ - 1);
            const double inv_n = 1.0 / static_cast<double>(n_);
            for (std::size_t v = 0; v < n_; ++v) cb[v] = (cb[v] + endpoint) * inv_n;
            result.cb_star = std::move(cb);
        }
        return result;
    }

private:
    void work() {
        std::vector<std::int32_t> dist(n_);
        std::vector<double> sigma(n_), delta(n_);
        std::vector<NodeId> order(n_);

        for (;;) {
            const std::size_t block = next_block_.fetch_add(1);
            const std::size_t begin = block * kSourcesPerBlock;
            if (begin >= n_) return;
            const std::size_t end = std::min(begin + kSourcesPerBlock, std::size_t{n_});

            std::vector<double>* acc = nullptr;
            if (want_betweenness_) {
                block_acc_[block].assign(n_, 0.0);
                acc = &block_acc_[block];
            }
            for (std::size_t s = begin; s < end; ++s)
                single_source(static_cast<NodeId>(s), dist, sigma, delta, order, acc);
        }
    }

    void single_source(NodeId s, std::vector<std::int32_t>& dist, std::vector<double>& sigma,
                       std::vector<double>& delta, std::vector<NodeId>& order,
                       std::vector<double>* acc) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        dist[s] = 0;
        sigma[s] = 1.0;
        order.clear();
        order.push_back(s);
        std::uint64_t dist_sum = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const NodeId v = order[head];
            const std::int32_t dv = dist[v];
            dist_sum += static_cast<std::uint64_t>(dv);
            for (NodeId w : g_.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dv + 1;
                    order.push_back(w);
                }
                if (dist[w] == dv + 1) sigma[w] += sigma[v];
            }
        }
        mean_dist_[s] = static_cast<double>(dist_sum) / static_cast<double>(n_ - 1);

        if (!acc) return;
        std::fill(delta.begin(), delta.end(), 0.0);
        for (std::size_t i = order.size(); i-- > 1;) {
            const NodeId w = order[i];
            const double coeff = (1.0 + delta[w]) / sigma[w];
            const std::int32_t dw = dist[w];
            for (NodeId v : g_.neighbors(w))
                if (dist[v] == dw - 1) delta[v] += sigma[v] * coeff;
            (*acc)[w] += delta[w];
        }
    }

    const Graph& g_;
    const std::size_t n_;
    const bool want_betweenness_;
    const unsigned threads_;
    std::vector<double> mean_dist_;
    std::vector<std::vector<double>> block_acc_;
    std::atomic<std::size_t> next_block_{0};
};

std::vector<std::uint32_t> all_degrees(const Graph& g) {
    std::vector<std::uint32_t> degrees(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
    return degrees;
}

} // namespace

void require_connected(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n)
        for (NodeId v = 0; v < n; ++v)
            if (!seen[v])
                throw std::runtime_error("graph is disconnected: node " + std::to_string(v) +
                                         " unreachable from node 0");
}

PathStats shortest_path_stats(const Graph& g, unsigned threads) {
    if (g.node_count() < 2)
        throw std::invalid_argument("path statistics need at least 2 nodes");
    AllPairsEngine engine(g, false, threads);
    auto result = engine.run();

    PathStats stats;
    stats.per_node = std::move(result.mean_dist);
    long double sum = 0.0L;
    for (double l : stats.per_node) sum += l;
    stats.l_star = static_cast<double>(sum / static_cast<long double>(g.node_count()));
    stats.ccdf = make_ccdf(stats.per_node);
    stats.vs_degree = per_degree_mean(all_degrees(g), stats.per_node);
    return stats;
}

BetweennessStats betweenness(const Graph& g, unsigned threads) {
    if (g.node_count() < 2)
        throw std::invalid_argument("betweenness needs at least 2 nodes");
    AllPairsEngine engine(g, true, threads);
    auto result = engine.run();

    BetweennessStats stats;
    stats.per_node = std::move(result.cb_star);
    stats.ccdf = make_ccdf(stats.per_node);
    stats.vs_degree = per_degree_mean(all_degrees(g), stats.per_node);
    return stats;
}

// Both path lengths and betweenness from one pass; used by full_report.
void all_pairs_stats(const Graph& g, unsigned threads, PathStats& paths,
                     BetweennessStats& cb) {
    AllPairsEngine engine(g, true, threads);
    auto result = engine.run();

    paths.per_node = std::move(result.mean_dist);
    long double sum = 0.0L;
    for (double l : paths.per_node) sum += l;
    paths.l_star = static_cast<double>(sum / static_cast<long double>(g.node_count()));
    paths.ccdf = make_ccdf(paths.per_node);
    const auto degrees = all_degrees(g);
    paths.vs_degree = per_degree_mean(degrees, paths.per_node);

    cb.per_node = std::move(result.cb_star);
    cb.ccdf = make_ccdf(cb.per_node);
    cb.vs_degree = per_degree_mean(degrees, cb.per_node);
}

} // namespace topogen
