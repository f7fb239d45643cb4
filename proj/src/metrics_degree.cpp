#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "topogen/metrics.hpp"

namespace topogen {

DegreeDistribution degree_distribution(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("degree distribution of an empty graph");
    std::vector<std::uint64_t> count(g.max_degree() + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++count[g.degree(v)];

    DegreeDistribution d;
    d.pdf.kind = DistributionSeries::Kind::pdf;
    d.ccdf.kind = DistributionSeries::Kind::ccdf;
    std::uint64_t at_least = n;
    for (std::size_t k = 0; k < count.size(); ++k) {
        if (count[k] == 0) continue;
        d.pdf.points.emplace_back(static_cast<double>(k),
                                  static_cast<double>(count[k]) / static_cast<double>(n));
        d.ccdf.points.emplace_back(static_cast<double>(k),
                                   static_cast<double>(at_least) / static_cast<double>(n));
        at_least -= count[k];
    }
    return d;
}

namespace {

// Decreasing degree, ties by ascending id.
std::vector<NodeId> rank_order(const Graph& g) {
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&g](NodeId a, NodeId b) {
        return g.degree(a) > g.degree(b);
    });
    return order;
}

} // namespace

DistributionSeries degree_rank(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("degree rank of an empty graph");
    DistributionSeries s;
    s.kind = DistributionSeries::Kind::rank;
    const auto order = rank_order(g);
    for (std::size_t r = 0; r < order.size(); ++r)
        s.points.emplace_back(static_cast<double>(r + 1),
                              static_cast<double>(g.degree(order[r])));
    return s;
}

DistributionSeries rich_club(const Graph& g) {
    const std::uint64_t n = g.node_count();
    if (n < 2) throw std::invalid_argument("rich-club needs at least 2 nodes");
    DistributionSeries s;
    s.kind = DistributionSeries::Kind::richclub;
    const auto order = rank_order(g);
    std::vector<char> member(n, 0);
    member[order[0]] = 1;
    std::uint64_t club_edges = 0;
    for (std::uint64_t r = 2; r <= n; ++r) {
        const NodeId v = order[r - 1];
        for (NodeId w : g.neighbors(v))
            if (member[w]) ++club_edges;
        member[v] = 1;
        const double allowable = 0.5 * static_cast<double>(r) * static_cast<double>(r - 1);
        s.points.emplace_back(static_cast<double>(r) / static_cast<double>(n),
                              static_cast<double>(club_edges) / allowable);
    }
    return s;
}

double rich_club_at(const DistributionSeries& phi, double fraction) {
    // r = 2..N gives N-1 points.
    const std::uint64_t n = phi.points.size() + 1;
    std::uint64_t r = static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(n)));
    r = std::max<std::uint64_t>(r, 2);
    r = std::min<std::uint64_t>(r, n);
    return phi.points[r - 2].second;
}

double loglog_slope(const DistributionSeries& series, double x_min, double x_max) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (const auto& [x, y] : series.points) {
        if (x < x_min || x > x_max || x <= 0.0 || y <= 0.0) continue;
        const double lx = std::log10(x);
        const double ly = std::log10(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    if (count < 3)
        throw std::invalid_argument("log-log fit needs at least 3 points in [" +
                                    std::to_string(x_min) + ", " + std::to_string(x_max) +
                                    "], found " + std::to_string(count));
    const double nc = static_cast<double>(count);
    return (nc * sxy - sx * sy) / (nc * sxx - sx * sx);
}

double fit_powerlaw_gamma(const DistributionSeries& ccdf, double k_min, double k_upper) {
    return 1.0 + std::fabs(loglog_slope(ccdf, k_min, k_upper));
}

std::uint32_t default_fit_upper(const Graph& g, std::uint32_t min_count) {
    const std::size_t n = g.node_count();
    std::vector<std::uint64_t> count(g.max_degree() + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++count[g.degree(v)];
    std::uint64_t at_least = 0;
    for (std::size_t k = count.size(); k-- > 0;) {
        at_least += count[k];
        if (at_least >= min_count) return static_cast<std::uint32_t>(k);
    }
    return 0;
}

} // namespace topogen
