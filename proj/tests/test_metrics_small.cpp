#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <doctest.h>

#include "oracle/brute_force.hpp"
#include "topogen/generate.hpp"
#include "topogen/metrics.hpp"
#include "topogen/rng.hpp"

using namespace topogen;

namespace {

Graph complete(NodeId n) {
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star(NodeId leaves) {
    Graph g(leaves + 1);
    for (NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph path(NodeId n) {
    Graph g(n);
    for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph ring(NodeId n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

} // namespace

TEST_CASE("degree distribution basics") {
    const auto k4 = degree_distribution(complete(4));
    REQUIRE(k4.pdf.points.size() == 1);
    CHECK(k4.pdf.points[0] == std::pair{3.0, 1.0});
    CHECK(k4.ccdf.points[0] == std::pair{3.0, 1.0});

    const auto s = degree_distribution(star(5));
    CHECK(s.pdf.at(1.0) == doctest::Approx(5.0 / 6.0));
    CHECK(s.pdf.at(5.0) == doctest::Approx(1.0 / 6.0));
    CHECK(s.ccdf.points.front().second == 1.0); // ccdf starts at 1

    double total = 0;
    for (const auto& [x, y] : s.pdf.points) total += y;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ccdf is non-increasing and starts at 1") {
    Rng rng(4);
    std::vector<double> values;
    for (int i = 0; i < 500; ++i)
        values.push_back(std::floor(uniform_unit(rng) * 20));
    const auto ccdf = make_ccdf(values);
    CHECK(ccdf.points.front().second == 1.0);
    for (std::size_t i = 1; i < ccdf.points.size(); ++i) {
        CHECK(ccdf.points[i].first > ccdf.points[i - 1].first);
        CHECK(ccdf.points[i].second <= ccdf.points[i - 1].second);
    }
}

TEST_CASE("degree rank") {
    const auto s = degree_rank(star(5));
    CHECK(s.points[0] == std::pair{1.0, 5.0});
    for (std::size_t r = 2; r <= 6; ++r) CHECK(s.points[r - 1].second == 1.0);

    const auto r8 = degree_rank(ring(8));
    for (const auto& [r, k] : r8.points) CHECK(k == 2.0);
}

TEST_CASE("rich club") {
    const auto phi_k5 = rich_club(complete(5));
    for (const auto& [x, y] : phi_k5.points) CHECK(y == doctest::Approx(1.0));

    // 5-leaf star, club of 3 = hub + 2 leaves: 2 links of 3 possible
    const auto phi_star = rich_club(star(5));
    CHECK(phi_star.points[1].first == doctest::Approx(3.0 / 6.0));
    CHECK(phi_star.points[1].second == doctest::Approx(2.0 / 3.0));

    // boundary values
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracle::random_connected_graph(4, 12, rng);
        const auto phi = rich_club(g);
        const double phi2 = phi.points.front().second;
        CHECK((phi2 == 0.0 || phi2 == 1.0));
        const double n = g.node_count();
        CHECK(phi.points.back().first == 1.0);
        CHECK(phi.points.back().second ==
              doctest::Approx(2.0 * double(g.edge_count()) / (n * (n - 1))));
    }
}

TEST_CASE("shortest path stats on closed forms") {
    const auto p3 = shortest_path_stats(path(3));
    CHECK(p3.per_node[0] == doctest::Approx(1.5));
    CHECK(p3.per_node[1] == doctest::Approx(1.0));
    CHECK(p3.per_node[2] == doctest::Approx(1.5));
    CHECK(p3.l_star == doctest::Approx(4.0 / 3.0));

    CHECK(shortest_path_stats(complete(4)).l_star == doctest::Approx(1.0));

    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_WITH_AS(shortest_path_stats(disconnected),
                         doctest::Contains("unreachable"), std::runtime_error);
}

TEST_CASE("triangle coefficients") {
    const auto k4 = triangle_coefficients(complete(4));
    for (auto t : k4) CHECK(t == 3);
    const auto tree = triangle_coefficients(star(5));
    for (auto t : tree) CHECK(t == 0);
}

TEST_CASE("quadrangle coefficients") {
    // one 4-cycle: every node on it
    const auto c4 = quadrangle_coefficients(ring(4));
    for (auto q : c4) CHECK(q == 1);

    // all corners adjacent: no opposite partner, no independent quadrangle
    const auto k4 = quadrangle_coefficients(complete(4));
    for (auto q : k4) CHECK(q == 0);

    // odd ring: no 4-cycles at all
    for (auto q : quadrangle_coefficients(ring(5))) CHECK(q == 0);

    // K_{2,3}: hubs see 3 shared neighbors (2 independent quadrangles),
    // leaves pair up through both hubs (1 each with the other two leaves)
    Graph k23(5);
    for (NodeId hub : {0u, 1u})
        for (NodeId leaf : {2u, 3u, 4u}) k23.add_edge(hub, leaf);
    const auto kq = quadrangle_coefficients(k23);
    CHECK(kq[0] == 2);
    CHECK(kq[1] == 2);
    CHECK(kq[2] == 2);
    CHECK(kq[3] == 2);
    CHECK(kq[4] == 2);
}

TEST_CASE("clustering coefficient") {
    CHECK(clustering_coefficient(3, 3) == doctest::Approx(1.0)); // K4 node
    CHECK(clustering_coefficient(5, 0) == 0.0);                  // star hub
    CHECK(clustering_coefficient(4, 3) == doctest::Approx(0.5));
    CHECK(clustering_coefficient(1, 0) == 0.0); // below the k >= 2 domain
    CHECK(clustering_coefficient(0, 0) == 0.0);
}

TEST_CASE("knn") {
    const auto s = knn(star(5));
    CHECK(s.per_node[0] == doctest::Approx(1.0));
    for (NodeId leaf = 1; leaf <= 5; ++leaf) CHECK(s.per_node[leaf] == doctest::Approx(5.0));
    CHECK(s.mean == doctest::Approx((1.0 + 5 * 5.0) / 6.0));

    const auto r = knn(ring(8));
    for (double v : r.per_node) CHECK(v == doctest::Approx(2.0));

    Graph isolated(2);
    isolated.add_node();
    CHECK_THROWS_AS(knn(isolated), std::runtime_error);
}

TEST_CASE("betweenness on the 3-path, by hand over all 6 ordered pairs") {
    const auto cb = betweenness(path(3));
    CHECK(cb.per_node[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(cb.per_node[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cb.per_node[2] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    const double mean = std::accumulate(cb.per_node.begin(), cb.per_node.end(), 0.0) / 3.0;
    CHECK(mean == doctest::Approx(14.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("complete graphs have uniform betweenness") {
    for (NodeId n : {4u, 6u, 9u}) {
        const auto cb = betweenness(complete(n));
        for (double v : cb.per_node) CHECK(v == doctest::Approx(cb.per_node[0]).epsilon(1e-12));
    }
}

TEST_CASE("mean betweenness identity on 100 random connected graphs") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const Graph g = oracle::random_connected_graph(4, 14, rng);
        const double n = g.node_count();
        const auto cb = betweenness(g);
        const auto paths = shortest_path_stats(g);
        long double mean_cb = 0.0L;
        for (double v : cb.per_node) mean_cb += v;
        mean_cb /= n;
        const double identity = (n - 1.0) * (paths.l_star + 1.0) / n;
        CHECK(std::fabs(static_cast<double>(mean_cb) - identity) <= 1e-9);
    }
}

TEST_CASE("power-law fit recovers exact exponents") {
    DistributionSeries ccdf;
    ccdf.kind = DistributionSeries::Kind::ccdf;
    for (int k = 1; k <= 100; ++k)
        ccdf.points.emplace_back(k, std::pow(double(k), -1.22));
    CHECK(fit_powerlaw_gamma(ccdf, 1, 100) == doctest::Approx(2.22).epsilon(1e-6 / 2.22));

    DistributionSeries square;
    square.kind = DistributionSeries::Kind::ccdf;
    for (int k = 1; k <= 100; ++k)
        square.points.emplace_back(k, std::pow(double(k), -2.0));
    CHECK(fit_powerlaw_gamma(square, 1, 100) == doctest::Approx(3.0).epsilon(1e-6 / 3.0));

    // scaling y leaves the slope alone
    DistributionSeries scaled = ccdf;
    for (auto& [x, y] : scaled.points) y *= 7.5;
    CHECK(fit_powerlaw_gamma(scaled, 1, 100) ==
          doctest::Approx(fit_powerlaw_gamma(ccdf, 1, 100)).epsilon(1e-12));

    CHECK_THROWS_AS(fit_powerlaw_gamma(ccdf, 1, 2), std::invalid_argument);
}

TEST_CASE("default fit window cap") {
    // star: 11 nodes of degree >= 1, one of degree >= 2
    CHECK(default_fit_upper(star(11), 10) == 1);
    CHECK(default_fit_upper(star(11), 1) == 11);
    CHECK(default_fit_upper(complete(12), 10) == 11);
}

TEST_CASE("full report on K4 closed forms") {
    const auto r = full_report(complete(4));
    CHECK(r.n == 4);
    CHECK(r.links == 6);
    CHECK(r.mean_degree == doctest::Approx(3.0));
    CHECK(r.l_star == doctest::Approx(1.0));
    CHECK(r.mean_kt == doctest::Approx(3.0));
    CHECK(r.max_kt == 3);
    CHECK(r.mean_kq == doctest::Approx(0.0));
    CHECK(r.phi_1pct == doctest::Approx(1.0));
    CHECK(r.p_k3 == doctest::Approx(1.0));
    CHECK(r.p_k1 == 0.0);
    CHECK(std::isnan(r.gamma)); // one ccdf point, no fit
    CHECK(r.k_max == 3);
    // endpoint-inclusive identity, exact finite-N form
    CHECK(r.mean_cb == doctest::Approx(3.0 * 2.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("per-node metrics are invariant under relabeling") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_connected_graph(6, 12, rng);
        const NodeId n = g.node_count();
        std::vector<NodeId> perm(n);
        std::iota(perm.begin(), perm.end(), NodeId{0});
        for (NodeId i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[uniform_index(rng, i)]);

        Graph h(n);
        for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);

        const auto gt = cycle_coefficients(g);
        const auto ht = cycle_coefficients(h);
        const auto gl = shortest_path_stats(g);
        const auto hl = shortest_path_stats(h);
        const auto gb = betweenness(g);
        const auto hb = betweenness(h);
        const auto gk = knn(g);
        const auto hk = knn(h);
        for (NodeId v = 0; v < n; ++v) {
            CHECK(gt.triangles[v] == ht.triangles[perm[v]]);
            CHECK(gt.quadrangles[v] == ht.quadrangles[perm[v]]);
            CHECK(gl.per_node[v] == hl.per_node[perm[v]]);
            CHECK(gb.per_node[v] == doctest::Approx(hb.per_node[perm[v]]).epsilon(1e-12));
            CHECK(gk.per_node[v] == hk.per_node[perm[v]]);
        }
        CHECK(gl.l_star == doctest::Approx(hl.l_star).epsilon(1e-12));
    }
}

TEST_CASE("rich-club at 1% is insensitive to degree-tie order on generated graphs") {
    // Ranks break ties by ascending id; a random relabeling permutes every
    // tie class. phi(0.01) must not care at generated-graph scale.
    GrowthConfig config = GrowthConfig::defaults_for(GrowthModel::pfp);
    config.rng_seed = 6;
    const Graph g = grow(config).graph;
    const double base = rich_club_at(rich_club(g), 0.01);

    Rng rng(123);
    for (int trial = 0; trial < 5; ++trial) {
        const NodeId n = g.node_count();
        std::vector<NodeId> perm(n);
        std::iota(perm.begin(), perm.end(), NodeId{0});
        for (NodeId i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[uniform_index(rng, i)]);
        Graph h(n);
        for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        const double permuted = rich_club_at(rich_club(h), 0.01);
        CHECK(std::fabs(permuted - base) < 0.01);
    }
}

TEST_CASE("error preconditions") {
    Graph empty;
    CHECK_THROWS_AS(degree_distribution(empty), std::invalid_argument);
    CHECK_THROWS_AS(degree_rank(empty), std::invalid_argument);
    Graph one(1);
    CHECK_THROWS_AS(rich_club(one), std::invalid_argument);
    CHECK_THROWS_AS(shortest_path_stats(one), std::invalid_argument);
}
