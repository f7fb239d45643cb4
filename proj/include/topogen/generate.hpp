#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "topogen/graph.hpp"
#include "topogen/preference.hpp"
#include "topogen/rng.hpp"

namespace topogen {

enum class GrowthModel { ba, ig, test_star, pfp };

const char* to_string(GrowthModel model);
std::optional<GrowthModel> parse_growth_model(std::string_view name);

struct GrowthConfig {
    GrowthModel model = GrowthModel::pfp;
    std::uint32_t target_n = 11122;
    std::uint32_t m = 3; // ba: links per new node
    double p = 0.3;      // ig, pfp
    double q = 0.1;      // pfp
    PreferenceScheme scheme = PreferenceScheme::positive_feedback(0.048);
    std::uint32_t seed_nodes = 10;
    std::uint32_t seed_extra_edges = 5;
    std::uint64_t rng_seed = 1;

    // Canonical parameters per model: ba m=3, ig p=0.4, test_star alpha=1.15
    // (p=0.4), pfp p=0.3 q=0.1 delta=0.048.
    static GrowthConfig defaults_for(GrowthModel model);

    // Throws std::invalid_argument on any violated constraint (probability
    // ranges, target_n > seed_nodes >= 3, scheme/model mismatch, ...).
    void validate() const;
};

struct GrowthStats {
    std::uint64_t steps = 0;
    // Internal links dropped because the originating host was already
    // adjacent to every other old node.
    std::uint64_t skipped_links = 0;
    // ig: [one-host-two-peers, two-hosts-one-peer, -]
    // pfp: [p branch, q branch, 1-p-q branch]
    std::array<std::uint64_t, 3> branch_count{};
};

struct DegreeTrajectory {
    NodeId node;
    // (network size at sample, degree), appended once at birth and then
    // after every later growth step.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> samples;
};

struct GrowthResult {
    Graph graph;
    GrowthStats stats;
    std::vector<DegreeTrajectory> trajectories;
};

// Connected seed: a random recursive tree on n0 nodes (each node after the
// first attaches uniformly to one existing node) plus extra_edges distinct
// random non-edges. Throws std::invalid_argument when n0 < 3 or extra_edges
// cannot fit.
Graph seed_network(std::uint32_t n0, std::uint32_t extra_edges, Rng& rng);

GrowthResult grow(const GrowthConfig& config);

// Same growth, but tags every watch_every-th new node and records its degree
// trajectory.
GrowthResult grow_tracked(const GrowthConfig& config, std::uint32_t watch_every);

} // namespace topogen
