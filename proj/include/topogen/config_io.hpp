#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "topogen/generate.hpp"

namespace topogen {

// Flat key=value form of a GrowthConfig. Keys: model, target_n, m, p, q,
// alpha, delta, seed_nodes, seed_extra_edges, rng_seed. Unknown keys throw;
// absent keys keep the values already in `base`.
GrowthConfig parse_growth_config(std::istream& in, GrowthConfig base = {});
void write_growth_config(const GrowthConfig& config, std::ostream& out);

// FNV-1a hash of the canonical key=value text; stamps generated edge lists.
std::string config_fingerprint(const GrowthConfig& config);

// Written alongside every command output; re-running with the recorded
// config reproduces the graph bit-exactly.
struct RunManifest {
    std::string command;
    std::optional<GrowthConfig> config;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string version;
    double duration_seconds = 0.0;
};

void write_manifest(const RunManifest& manifest, std::ostream& out);
RunManifest read_manifest(std::istream& in);

// Accepts either a flat key=value file or a manifest JSON (sniffed by the
// leading '{'); returns the embedded config.
GrowthConfig load_config_file(const std::string& path, GrowthConfig base = {});

} // namespace topogen
