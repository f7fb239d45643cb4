#pragma once

#include <cstdint>
#include <vector>

#include "topogen/graph.hpp"
#include "topogen/series.hpp"

namespace topogen {

struct DegreeDistribution {
    DistributionSeries pdf;  // P(k) over observed degrees
    DistributionSeries ccdf; // fraction of nodes with degree >= k
};

DegreeDistribution degree_distribution(const Graph& g);

// (rank, degree) for ranks 1..N; nodes sorted by decreasing degree, ties
// broken by ascending id.
DistributionSeries degree_rank(const Graph& g);

// Rich-club connectivity phi(r/N) = E_r / (r(r-1)/2) for r = 2..N, where E_r
// counts edges with both endpoints among the r highest-ranked nodes.
DistributionSeries rich_club(const Graph& g);

// phi at club size r = max(2, round(fraction * N)).
double rich_club_at(const DistributionSeries& phi, double fraction);

// Least-squares slope of log10 y on log10 x over points with x in
// [x_min, x_max]. Throws std::invalid_argument with fewer than 3 such points.
double loglog_slope(const DistributionSeries& series, double x_min, double x_max);

// gamma = 1 + |slope of log10 ccdf over [k_min, k_upper]|.
double fit_powerlaw_gamma(const DistributionSeries& ccdf, double k_min, double k_upper);

// Largest k with at least min_count nodes of degree >= k; caps the fit window
// away from max-degree noise.
std::uint32_t default_fit_upper(const Graph& g, std::uint32_t min_count = 10);

struct PathStats {
    std::vector<double> per_node; // l(v): mean hops from v to every other node
    double l_star = 0.0;          // mean of per_node == all-ordered-pairs mean
    DistributionSeries ccdf;
    DistributionSeries vs_degree;
};

// BFS from every node. Throws std::runtime_error naming an unreachable pair
// when g is disconnected. threads = 0 picks hardware concurrency.
PathStats shortest_path_stats(const Graph& g, unsigned threads = 0);

struct CycleCoefficients {
    // k_t(v): number of triangles through v = edges between neighbors of v.
    std::vector<std::int64_t> triangles;
    // k_q(v): independent quadrangles through v. Every non-adjacent opposite
    // corner w with c >= 2 shared neighbors contributes c - 1 (each common
    // neighbor beyond the first closes one new 4-cycle v-a-w-b).
    std::vector<std::int64_t> quadrangles;
};

CycleCoefficients cycle_coefficients(const Graph& g);
std::vector<std::int64_t> triangle_coefficients(const Graph& g);
std::vector<std::int64_t> quadrangle_coefficients(const Graph& g);

// c = k_t / (k(k-1)/2); 0 when k < 2, where the ratio is undefined.
double clustering_coefficient(std::int64_t k, std::int64_t k_t);

struct KnnStats {
    std::vector<double> per_node; // mean degree of v's neighbors
    DistributionSeries vs_degree;
    double mean = 0.0;
};

// Throws std::runtime_error when a degree-0 node is present.
KnnStats knn(const Graph& g);

struct BetweennessStats {
    // C_B*(w) = C_B(w)/N, endpoint-inclusive over ordered pairs:
    // p_{s,d}(s) = p_{s,d}(d) = 1.
    std::vector<double> per_node;
    DistributionSeries ccdf;
    DistributionSeries vs_degree;
};

BetweennessStats betweenness(const Graph& g, unsigned threads = 0);

// Path lengths and betweenness share their BFS; this fills both from a
// single sweep over all sources.
void all_pairs_stats(const Graph& g, unsigned threads, PathStats& paths,
                     BetweennessStats& cb);

// Throws std::runtime_error naming an unreachable node when g is not
// connected.
void require_connected(const Graph& g);

// One full column of summary statistics for a graph.
struct MetricsReport {
    std::int64_t n = 0;
    std::int64_t links = 0;
    double mean_degree = 0.0;
    double gamma = 0.0; // NaN when the fit window holds fewer than 3 points
    double phi_1pct = 0.0;
    std::int64_t k_max = 0;
    double p_k1 = 0.0, p_k2 = 0.0, p_k3 = 0.0;
    double l_star = 0.0;
    double mean_kt = 0.0;
    std::int64_t max_kt = 0;
    double mean_kq = 0.0;
    std::int64_t max_kq = 0;
    double mean_knn = 0.0;
    double mean_cb = 0.0;
    double max_cb = 0.0;
    // Fit window actually used for gamma, recorded with every report.
    double fit_kmin = 1.0;
    double fit_kupper = 0.0;
};

struct FitWindow {
    double k_min = 1.0;
    double k_upper = 0.0; // 0 = default_fit_upper(g)
};

MetricsReport full_report(const Graph& g, FitWindow window = {}, unsigned threads = 0);

// Report plus every plot-ready series, computed in one pass over the graph.
struct AnalysisBundle {
    MetricsReport report;
    DistributionSeries pdf, ccdf, rank, richclub;
    DistributionSeries l_ccdf, l_vs_k;
    DistributionSeries kt_ccdf, kq_ccdf;
    DistributionSeries knn_ccdf, knn_vs_k;
    DistributionSeries cb_ccdf, cb_vs_k;
};

AnalysisBundle analyze_graph(const Graph& g, FitWindow window = {}, unsigned threads = 0);

} // namespace topogen
