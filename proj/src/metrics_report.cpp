#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "topogen/metrics.hpp"

namespace topogen {

AnalysisBundle analyze_graph(const Graph& g, FitWindow window, unsigned threads) {
    if (g.node_count() == 0) throw std::runtime_error("analysis of an empty graph");
    if (g.node_count() >= 2) require_connected(g); // fail before the heavy passes

    AnalysisBundle bundle;
    MetricsReport& r = bundle.report;
    const std::size_t n = g.node_count();
    r.n = static_cast<std::int64_t>(n);
    r.links = static_cast<std::int64_t>(g.edge_count());
    r.mean_degree = 2.0 * static_cast<double>(r.links) / static_cast<double>(n);
    r.k_max = g.max_degree();

    auto dd = degree_distribution(g);
    bundle.pdf = std::move(dd.pdf);
    bundle.ccdf = std::move(dd.ccdf);
    r.p_k1 = bundle.pdf.at(1.0);
    r.p_k2 = bundle.pdf.at(2.0);
    r.p_k3 = bundle.pdf.at(3.0);

    r.fit_kmin = window.k_min;
    r.fit_kupper = window.k_upper > 0.0
                       ? window.k_upper
                       : static_cast<double>(default_fit_upper(g));
    // The fit needs 3 points in window; tiny or regular graphs have no
    // power law to speak of, so the report carries NaN instead of failing.
    try {
        r.gamma = fit_powerlaw_gamma(bundle.ccdf, r.fit_kmin, r.fit_kupper);
    } catch (const std::invalid_argument&) {
        r.gamma = std::numeric_limits<double>::quiet_NaN();
    }

    bundle.rank = degree_rank(g);
    if (n >= 2) {
        bundle.richclub = rich_club(g);
        r.phi_1pct = rich_club_at(bundle.richclub, 0.01);
    }

    auto cycles = cycle_coefficients(g);
    long double kt_sum = 0.0L, kq_sum = 0.0L;
    std::int64_t kt_max = 0, kq_max = 0;
    std::vector<double> kt(n), kq(n);
    for (std::size_t v = 0; v < n; ++v) {
        kt[v] = static_cast<double>(cycles.triangles[v]);
        kq[v] = static_cast<double>(cycles.quadrangles[v]);
        kt_sum += cycles.triangles[v];
        kq_sum += cycles.quadrangles[v];
        kt_max = std::max(kt_max, cycles.triangles[v]);
        kq_max = std::max(kq_max, cycles.quadrangles[v]);
    }
    r.mean_kt = static_cast<double>(kt_sum / static_cast<long double>(n));
    r.max_kt = kt_max;
    r.mean_kq = static_cast<double>(kq_sum / static_cast<long double>(n));
    r.max_kq = kq_max;
    bundle.kt_ccdf = make_ccdf(std::move(kt));
    bundle.kq_ccdf = make_ccdf(std::move(kq));

    auto nn = knn(g);
    r.mean_knn = nn.mean;
    bundle.knn_ccdf = make_ccdf(nn.per_node);
    bundle.knn_vs_k = std::move(nn.vs_degree);

    if (n >= 2) {
        PathStats paths;
        BetweennessStats cb;
        all_pairs_stats(g, threads, paths, cb);
        r.l_star = paths.l_star;
        bundle.l_ccdf = std::move(paths.ccdf);
        bundle.l_vs_k = std::move(paths.vs_degree);

        long double cb_sum = 0.0L;
        double cb_max = 0.0;
        for (double c : cb.per_node) {
            cb_sum += c;
            cb_max = std::max(cb_max, c);
        }
        r.mean_cb = static_cast<double>(cb_sum / static_cast<long double>(n));
        r.max_cb = cb_max;
        bundle.cb_ccdf = std::move(cb.ccdf);
        bundle.cb_vs_k = std::move(cb.vs_degree);
    }
    return bundle;
}

MetricsReport full_report(const Graph& g, FitWindow window, unsigned threads) {
    return analyze_graph(g, window, threads).report;
}

} // namespace topogen
