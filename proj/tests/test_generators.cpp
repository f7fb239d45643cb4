#include <stdexcept>

#include <doctest.h>

#include "topogen/generate.hpp"
#include "topogen/metrics.hpp"

using namespace topogen;

namespace {

GrowthConfig small_config(GrowthModel model, std::uint32_t n, std::uint64_t seed) {
    GrowthConfig c = GrowthConfig::defaults_for(model);
    c.target_n = n;
    c.rng_seed = seed;
    return c;
}

} // namespace

TEST_CASE("seed network shapes") {
    Rng rng(1);
    Graph g3 = seed_network(3, 0, rng);
    CHECK(g3.node_count() == 3);
    CHECK(g3.edge_count() == 2);
    CHECK(g3.is_connected());

    Graph g10 = seed_network(10, 5, rng);
    CHECK(g10.node_count() == 10);
    CHECK(g10.edge_count() == 14);
    CHECK(g10.is_connected());

    CHECK_THROWS_AS(seed_network(2, 0, rng), std::invalid_argument);
    // 3 nodes allow 3 edges total, 2 in the tree
    CHECK_THROWS_AS(seed_network(3, 2, rng), std::invalid_argument);
    CHECK_NOTHROW(seed_network(3, 1, rng));
}

TEST_CASE("seed network is connected with degree >= 1 for 1000 seeds") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed);
        Graph g = seed_network(10, 5, rng);
        CHECK(g.is_connected());
        for (NodeId v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) >= 1);
    }
}

TEST_CASE("identical config gives bit-identical edge sets") {
    for (GrowthModel model :
         {GrowthModel::ba, GrowthModel::ig, GrowthModel::test_star, GrowthModel::pfp}) {
        const auto config = small_config(model, 400, 11);
        const auto a = grow(config);
        const auto b = grow(config);
        CHECK(a.graph.edges() == b.graph.edges());

        auto other = config;
        other.rng_seed = 12;
        CHECK(grow(other).graph.edges() != a.graph.edges());
    }
}

TEST_CASE("generated graphs are connected simple graphs") {
    for (GrowthModel model :
         {GrowthModel::ba, GrowthModel::ig, GrowthModel::test_star, GrowthModel::pfp}) {
        const auto result = grow(small_config(model, 600, 3));
        CHECK(result.graph.node_count() == 600);
        CHECK(result.graph.is_connected());
        CHECK_NOTHROW(result.graph.check_invariants());
    }
}

TEST_CASE("ba adds exactly m edges per step and m-degree newborns") {
    auto config = small_config(GrowthModel::ba, 100, 5);
    const auto result = grow_tracked(config, 1);
    CHECK(result.graph.edge_count() == 14 + 3 * (100 - 10));
    CHECK(result.stats.skipped_links == 0);
    for (const auto& t : result.trajectories) {
        REQUIRE(!t.samples.empty());
        CHECK(t.samples.front().second == config.m); // degree at birth
    }
}

TEST_CASE("ba rejects m >= old node count") {
    auto config = small_config(GrowthModel::ba, 100, 5);
    config.m = 10; // equals seed_nodes
    CHECK_THROWS_AS(grow(config), std::invalid_argument);
}

TEST_CASE("ig edge budget: 3 edges per step minus skipped links") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto config = small_config(GrowthModel::ig, 500, seed);
        const auto result = grow(config);
        const std::uint64_t steps = 500 - 10;
        CHECK(result.stats.steps == steps);
        CHECK(result.graph.edge_count() == 14 + 3 * steps - result.stats.skipped_links);
        CHECK(result.stats.branch_count[0] + result.stats.branch_count[1] == steps);
    }
}

TEST_CASE("pfp edge budget follows the branch mix") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto config = small_config(GrowthModel::pfp, 500, seed);
        const auto result = grow(config);
        const auto& b = result.stats.branch_count;
        CHECK(b[0] + b[1] + b[2] == result.stats.steps);
        CHECK(result.graph.edge_count() ==
              14 + 2 * b[0] + 3 * b[1] + 3 * b[2] - result.stats.skipped_links);
    }
}

TEST_CASE("config validation") {
    auto config = GrowthConfig::defaults_for(GrowthModel::pfp);
    config.q = 0.8; // p + q > 1
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = GrowthConfig::defaults_for(GrowthModel::ig);
    config.p = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = GrowthConfig::defaults_for(GrowthModel::ba);
    config.target_n = config.seed_nodes;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = GrowthConfig::defaults_for(GrowthModel::test_star);
    config.scheme = PreferenceScheme::linear();
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    CHECK_NOTHROW(GrowthConfig::defaults_for(GrowthModel::pfp).validate());
}

TEST_CASE("trajectories grow monotonically with network size") {
    const auto result = grow_tracked(small_config(GrowthModel::pfp, 800, 9), 100);
    CHECK(!result.trajectories.empty());
    for (const auto& t : result.trajectories) {
        for (std::size_t i = 1; i < t.samples.size(); ++i) {
            CHECK(t.samples[i].first > t.samples[i - 1].first);
            CHECK(t.samples[i].second >= t.samples[i - 1].second);
        }
    }
    CHECK_THROWS_AS(grow_tracked(small_config(GrowthModel::pfp, 100, 1), 0),
                    std::invalid_argument);
}

TEST_CASE("early pfp nodes outgrow early ig nodes") {
    // Positive feedback accelerates the rich: the oldest 1% of nodes end up
    // with a higher mean degree than under linear preference (10-run means).
    const std::uint32_t n = 4000;
    const std::uint32_t oldest = n / 100;
    double pfp_mean = 0.0, ig_mean = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto pfp = grow(small_config(GrowthModel::pfp, n, seed));
        const auto ig = grow(small_config(GrowthModel::ig, n, seed));
        for (NodeId v = 0; v < oldest; ++v) {
            pfp_mean += pfp.graph.degree(v);
            ig_mean += ig.graph.degree(v);
        }
    }
    CHECK(pfp_mean / 10 / oldest > ig_mean / 10 / oldest);
}

TEST_CASE("ig produces more degree-2 than degree-1 nodes") {
    const auto result = grow(small_config(GrowthModel::ig, 11122, 1));
    const auto dd = degree_distribution(result.graph);
    CHECK(dd.pdf.at(2.0) > dd.pdf.at(1.0));
}

TEST_CASE("model and kernel names round-trip") {
    for (GrowthModel m :
         {GrowthModel::ba, GrowthModel::ig, GrowthModel::test_star, GrowthModel::pfp})
        CHECK(parse_growth_model(to_string(m)) == m);
    CHECK(!parse_growth_model("glp").has_value());
}
