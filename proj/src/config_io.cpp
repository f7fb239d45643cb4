#include "topogen/config_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "topogen/report_io.hpp"

namespace topogen {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_number(const std::string& value, const std::string& key) {
    T out{};
    auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || end != value.data() + value.size())
        throw std::invalid_argument("config key '" + key + "': bad value '" + value + "'");
    return out;
}

void apply_key(GrowthConfig& c, const std::string& key, const std::string& value) {
    if (key == "model") {
        auto model = parse_growth_model(value);
        if (!model) throw std::invalid_argument("unknown model '" + value + "'");
        // Keep explicit numeric parameters, but the kernel kind follows the
        // model.
        const double alpha = c.scheme.alpha, delta = c.scheme.delta;
        c.model = *model;
        switch (c.model) {
        case GrowthModel::ba:
        case GrowthModel::ig: c.scheme = PreferenceScheme::linear(); break;
        case GrowthModel::test_star: c.scheme = PreferenceScheme::fixed_exponent(alpha); break;
        case GrowthModel::pfp: c.scheme = PreferenceScheme::positive_feedback(delta); break;
        }
    } else if (key == "target_n") {
        c.target_n = parse_number<std::uint32_t>(value, key);
    } else if (key == "m") {
        c.m = parse_number<std::uint32_t>(value, key);
    } else if (key == "p") {
        c.p = parse_number<double>(value, key);
    } else if (key == "q") {
        c.q = parse_number<double>(value, key);
    } else if (key == "alpha") {
        c.scheme.alpha = parse_number<double>(value, key);
    } else if (key == "delta") {
        c.scheme.delta = parse_number<double>(value, key);
    } else if (key == "seed_nodes") {
        c.seed_nodes = parse_number<std::uint32_t>(value, key);
    } else if (key == "seed_extra_edges") {
        c.seed_extra_edges = parse_number<std::uint32_t>(value, key);
    } else if (key == "rng_seed") {
        c.rng_seed = parse_number<std::uint64_t>(value, key);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

} // namespace

GrowthConfig parse_growth_config(std::istream& in, GrowthConfig base) {
    GrowthConfig c = base;
    std::string line;
    // model applied first so later alpha/delta land on the right kernel
    std::vector<std::pair<std::string, std::string>> pairs;
    while (std::getline(in, line)) {
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line without '=': " + text);
        pairs.emplace_back(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    }
    for (const auto& [key, value] : pairs)
        if (key == "model") apply_key(c, key, value);
    for (const auto& [key, value] : pairs)
        if (key != "model") apply_key(c, key, value);
    return c;
}

void write_growth_config(const GrowthConfig& config, std::ostream& out) {
    out << "model = " << to_string(config.model) << '\n'
        << "target_n = " << config.target_n << '\n'
        << "m = " << config.m << '\n'
        << "p = " << format_double(config.p) << '\n'
        << "q = " << format_double(config.q) << '\n'
        << "alpha = " << format_double(config.scheme.alpha) << '\n'
        << "delta = " << format_double(config.scheme.delta) << '\n'
        << "seed_nodes = " << config.seed_nodes << '\n'
        << "seed_extra_edges = " << config.seed_extra_edges << '\n'
        << "rng_seed = " << config.rng_seed << '\n';
}

std::string config_fingerprint(const GrowthConfig& config) {
    std::ostringstream text;
    write_growth_config(config, text);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : text.str()) {
        hash ^= ch;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

ordered_json config_to_json(const GrowthConfig& c) {
    ordered_json j;
    j["model"] = to_string(c.model);
    j["target_n"] = c.target_n;
    j["m"] = c.m;
    j["p"] = c.p;
    j["q"] = c.q;
    j["alpha"] = c.scheme.alpha;
    j["delta"] = c.scheme.delta;
    j["seed_nodes"] = c.seed_nodes;
    j["seed_extra_edges"] = c.seed_extra_edges;
    j["rng_seed"] = c.rng_seed;
    return j;
}

GrowthConfig config_from_json(const ordered_json& j, GrowthConfig base) {
    GrowthConfig c = base;
    auto as_string = [](const ordered_json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    if (j.contains("model")) apply_key(c, "model", as_string(j["model"]));
    for (const auto& key : {"target_n", "m", "p", "q", "alpha", "delta", "seed_nodes",
                            "seed_extra_edges", "rng_seed"})
        if (j.contains(key)) apply_key(c, key, as_string(j[key]));
    return c;
}

} // namespace

void write_manifest(const RunManifest& manifest, std::ostream& out) {
    ordered_json j;
    j["command"] = manifest.command;
    if (manifest.config) j["config"] = config_to_json(*manifest.config);
    j["inputs"] = manifest.inputs;
    j["outputs"] = manifest.outputs;
    j["version"] = manifest.version;
    j["duration_seconds"] = manifest.duration_seconds;
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("manifest write failed");
}

RunManifest read_manifest(std::istream& in) {
    ordered_json j = ordered_json::parse(in);
    RunManifest m;
    m.command = j.value("command", std::string{});
    if (j.contains("config")) m.config = config_from_json(j["config"], GrowthConfig{});
    if (j.contains("inputs")) m.inputs = j["inputs"].get<std::vector<std::string>>();
    if (j.contains("outputs")) m.outputs = j["outputs"].get<std::vector<std::string>>();
    m.version = j.value("version", std::string{});
    m.duration_seconds = j.value("duration_seconds", 0.0);
    return m;
}

GrowthConfig load_config_file(const std::string& path, GrowthConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    // Manifests are JSON objects; flat config files never start with '{'.
    char first = 0;
    while (in.get(first) && (first == ' ' || first == '\n' || first == '\t' || first == '\r')) {
    }
    in.unget();
    if (first == '{') {
        ordered_json j = ordered_json::parse(in);
        if (j.contains("config")) return config_from_json(j["config"], base);
        return config_from_json(j, base);
    }
    return parse_growth_config(in, base);
}

} // namespace topogen
