#include "topogen/generate.hpp"

#include <stdexcept>
#include <string>

#include "topogen/sampler.hpp"

namespace topogen {

const char* to_string(GrowthModel model) {
    switch (model) {
    case GrowthModel::ba: return "ba";
    case GrowthModel::ig: return "ig";
    case GrowthModel::test_star: return "test";
    case GrowthModel::pfp: return "pfp";
    }
    return "?";
}

std::optional<GrowthModel> parse_growth_model(std::string_view name) {
    if (name == "ba") return GrowthModel::ba;
    if (name == "ig") return GrowthModel::ig;
    if (name == "test" || name == "test_star") return GrowthModel::test_star;
    if (name == "pfp") return GrowthModel::pfp;
    return std::nullopt;
}

GrowthConfig GrowthConfig::defaults_for(GrowthModel model) {
    GrowthConfig c;
    c.model = model;
    switch (model) {
    case GrowthModel::ba:
        c.m = 3;
        c.scheme = PreferenceScheme::linear();
        break;
    case GrowthModel::ig:
        c.p = 0.4;
        c.scheme = PreferenceScheme::linear();
        break;
    case GrowthModel::test_star:
        c.p = 0.4;
        c.scheme = PreferenceScheme::fixed_exponent(1.15);
        break;
    case GrowthModel::pfp:
        c.p = 0.3;
        c.q = 0.1;
        c.scheme = PreferenceScheme::positive_feedback(0.048);
        break;
    }
    return c;
}

void GrowthConfig::validate() const {
    scheme.validate();
    if (seed_nodes < 3)
        throw std::invalid_argument("seed_nodes must be >= 3");
    if (target_n <= seed_nodes)
        throw std::invalid_argument("target_n must exceed seed_nodes");
    const std::uint64_t n0 = seed_nodes;
    if (seed_extra_edges > n0 * (n0 - 1) / 2 - (n0 - 1))
        throw std::invalid_argument("seed_extra_edges leaves no room in a simple graph on " +
                                    std::to_string(n0) + " nodes");
    switch (model) {
    case GrowthModel::ba:
        if (m < 1) throw std::invalid_argument("ba needs m >= 1");
        if (scheme.kind != PreferenceKind::linear)
            throw std::invalid_argument("ba uses the linear kernel");
        break;
    case GrowthModel::ig:
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("ig needs p in (0,1)");
        if (scheme.kind != PreferenceKind::linear)
            throw std::invalid_argument("ig uses the linear kernel");
        break;
    case GrowthModel::test_star:
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("test needs p in (0,1)");
        if (scheme.kind != PreferenceKind::fixed_exponent)
            throw std::invalid_argument("test uses the fixed-exponent kernel");
        break;
    case GrowthModel::pfp:
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("pfp needs p in [0,1]");
        if (!(q >= 0.0 && q <= 1.0 - p))
            throw std::invalid_argument("pfp needs q in [0, 1-p]");
        if (scheme.kind != PreferenceKind::positive_feedback)
            throw std::invalid_argument("pfp uses the positive-feedback kernel");
        break;
    }
}

Graph seed_network(std::uint32_t n0, std::uint32_t extra_edges, Rng& rng) {
    if (n0 < 3) throw std::invalid_argument("seed network needs n0 >= 3");
    const std::uint64_t capacity = std::uint64_t(n0) * (n0 - 1) / 2 - (n0 - 1);
    if (extra_edges > capacity)
        throw std::invalid_argument("cannot place " + std::to_string(extra_edges) +
                                    " extra edges on a " + std::to_string(n0) + "-node tree");
    Graph g;
    g.add_node();
    for (NodeId v = 1; v < n0; ++v) {
        NodeId host = static_cast<NodeId>(uniform_index(rng, v));
        g.add_node();
        g.add_edge(v, host);
    }
    std::uint32_t placed = 0;
    while (placed < extra_edges) {
        NodeId u = static_cast<NodeId>(uniform_index(rng, n0));
        NodeId v = static_cast<NodeId>(uniform_index(rng, n0));
        if (g.add_edge(u, v)) ++placed;
    }
    return g;
}

namespace {

// Runs one model from seed to target_n. All preference weights within a step
// come from the degree snapshot at the step's start: the sampler is synced
// only after the step's edges are in, so within-step attachments are
// order-independent.
class GrowthEngine {
public:
    GrowthEngine(const GrowthConfig& config, std::uint32_t watch_every)
        : config_(config), watch_every_(watch_every), rng_(config.rng_seed),
          weights_(config.scheme), sampler_(config.target_n) {}

    GrowthResult run() {
        config_.validate();
        if (config_.model == GrowthModel::ba && config_.m >= config_.seed_nodes)
            throw std::invalid_argument("ba needs m < seed_nodes; no " + std::to_string(config_.m) +
                                        " distinct hosts among " + std::to_string(config_.seed_nodes) +
                                        " old nodes");

        graph_ = seed_network(config_.seed_nodes, config_.seed_extra_edges, rng_);
        for (NodeId v = 0; v < graph_.node_count(); ++v)
            sampler_.set(v, weights_(graph_.degree(v)));

        while (graph_.node_count() < config_.target_n) {
            touched_.clear();
            switch (config_.model) {
            case GrowthModel::ba:
                step_ba();
                break;
            case GrowthModel::ig:
            case GrowthModel::test_star:
                if (uniform_unit(rng_) < config_.p)
                    step_interactive(1, 2, 0);
                else
                    step_interactive(2, 1, 1);
                break;
            case GrowthModel::pfp: {
                const double u = uniform_unit(rng_);
                if (u < config_.p)
                    step_interactive(1, 1, 0);
                else if (u < config_.p + config_.q)
                    step_interactive(1, 2, 1);
                else
                    step_interactive(2, 1, 2);
                break;
            }
            }
            ++stats_.steps;
            for (NodeId v : touched_) sampler_.set(v, weights_(graph_.degree(v)));
            record_watched();
        }

        GrowthResult result;
        result.graph = std::move(graph_);
        result.stats = stats_;
        result.trajectories = std::move(trajectories_);
        return result;
    }

private:
    // Zero an entry for the rest of the step, remembering its snapshot value.
    void suspend(NodeId v) {
        saved_.emplace_back(v, sampler_.get(v));
        sampler_.set(v, 0.0);
    }

    void restore_suspended() {
        for (auto it = saved_.rbegin(); it != saved_.rend(); ++it)
            sampler_.set(it->first, it->second);
        saved_.clear();
    }

    NodeId draw_and_suspend() {
        NodeId v = static_cast<NodeId>(sampler_.sample(uniform_unit(rng_)));
        suspend(v);
        return v;
    }

    void step_ba() {
        stats_.branch_count[0]++;
        hosts_.clear();
        for (std::uint32_t i = 0; i < config_.m; ++i) hosts_.push_back(draw_and_suspend());
        restore_suspended();
        const NodeId fresh = add_watched_node();
        for (NodeId host : hosts_) {
            graph_.add_edge(fresh, host);
            touched_.push_back(host);
        }
        touched_.push_back(fresh);
    }

    // hosts_n new-node attachments, then peers_n internal links out of one
    // host. Peers exclude the originating host and all of its current
    // neighbors, so every internal link is a new edge.
    void step_interactive(int hosts_n, int peers_n, int branch) {
        stats_.branch_count[branch]++;
        const NodeId old_count = graph_.node_count();
        hosts_.clear();
        for (int i = 0; i < hosts_n; ++i) hosts_.push_back(draw_and_suspend());
        restore_suspended();

        const NodeId fresh = add_watched_node();
        for (int i = 0; i < hosts_n; ++i) {
            graph_.add_edge(fresh, hosts_[i]);
            touched_.push_back(hosts_[i]);
        }

        const NodeId origin = hosts_n == 2
                                  ? hosts_[uniform_index(rng_, 2)]
                                  : hosts_[0];
        suspend(origin);
        std::uint32_t excluded_old = 1;
        for (NodeId nb : graph_.neighbors(origin)) {
            if (nb == fresh) continue;
            suspend(nb);
            ++excluded_old;
        }
        std::uint32_t eligible = old_count - excluded_old;
        for (int j = 0; j < peers_n; ++j) {
            if (eligible == 0) {
                ++stats_.skipped_links;
                continue;
            }
            const NodeId peer = draw_and_suspend();
            --eligible;
            if (!graph_.add_edge(origin, peer))
                throw std::logic_error("internal link hit an existing edge despite exclusions");
            touched_.push_back(peer);
        }
        restore_suspended();
        touched_.push_back(fresh);
    }

    NodeId add_watched_node() {
        const NodeId fresh = graph_.add_node();
        if (watch_every_ > 0) {
            const std::uint64_t birth_index = fresh - config_.seed_nodes;
            if (birth_index % watch_every_ == 0)
                trajectories_.push_back({fresh, {{graph_.node_count(), 0}}});
        }
        return fresh;
    }

    void record_watched() {
        if (watch_every_ == 0) return;
        for (auto& t : trajectories_) {
            const auto size = graph_.node_count();
            const auto deg = graph_.degree(t.node);
            if (!t.samples.empty() && t.samples.back().first == size)
                t.samples.back().second = deg;
            else
                t.samples.emplace_back(size, deg);
        }
    }

    GrowthConfig config_;
    std::uint32_t watch_every_;
    Rng rng_;
    PreferenceWeights weights_;
    WeightedSampler sampler_;
    Graph graph_;
    GrowthStats stats_;
    std::vector<DegreeTrajectory> trajectories_;
    std::vector<std::pair<NodeId, double>> saved_;
    std::vector<NodeId> touched_;
    std::vector<NodeId> hosts_;
};

} // namespace

GrowthResult grow(const GrowthConfig& config) { return GrowthEngine(config, 0).run(); }

GrowthResult grow_tracked(const GrowthConfig& config, std::uint32_t watch_every) {
    if (watch_every < 1)
        throw std::invalid_argument("watch_every must be >= 1");
    return GrowthEngine(config, watch_every).run();
}

} // namespace topogen
