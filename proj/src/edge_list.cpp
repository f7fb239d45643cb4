#include "topogen/edge_list.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace topogen {

namespace {

[[noreturn]] void fail(std::uint64_t line, const std::string& what) {
    throw std::runtime_error("edge list line " + std::to_string(line) + ": " + what);
}

struct RawEdge {
    std::uint64_t u, v;
    std::uint64_t line;
};

// Shared scan: tokenizes "u v" lines, reporting the offending line on any
// malformed or negative token.
std::vector<RawEdge> scan(std::istream& in) {
    std::vector<RawEdge> edges;
    std::string text;
    std::uint64_t line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        std::size_t begin = text.find_first_not_of(" \t\r");
        if (begin == std::string::npos || text[begin] == '#') continue;

        std::uint64_t ids[2];
        std::size_t pos = begin;
        for (int t = 0; t < 2; ++t) {
            pos = text.find_first_not_of(" \t\r", pos);
            if (pos == std::string::npos) fail(line_no, "expected two node ids");
            if (text[pos] == '-') fail(line_no, "negative node id");
            auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), ids[t]);
            if (ec != std::errc{} || (end != text.data() + text.size() &&
                                      *end != ' ' && *end != '\t' && *end != '\r'))
                fail(line_no, "non-integer token");
            pos = static_cast<std::size_t>(end - text.data());
        }
        if (text.find_first_not_of(" \t\r", pos) != std::string::npos)
            fail(line_no, "trailing tokens after the edge");
        edges.push_back({ids[0], ids[1], line_no});
    }
    return edges;
}

// Inserts with strict/lenient handling of self-loops and duplicates.
std::uint64_t build(Graph& g, const std::vector<RawEdge>& edges,
                    const std::vector<NodeId>& u_ids, const std::vector<NodeId>& v_ids,
                    bool lenient) {
    std::uint64_t skipped = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const NodeId u = u_ids[i], v = v_ids[i];
        if (u == v) {
            if (!lenient) fail(edges[i].line, "self-loop");
            ++skipped;
            continue;
        }
        if (!g.add_edge(u, v)) {
            if (!lenient) fail(edges[i].line, "duplicate edge");
            ++skipped;
        }
    }
    return skipped;
}

} // namespace

EdgeListResult read_edge_list(std::istream& in, const EdgeListOptions& options) {
    const auto edges = scan(in);
    std::uint64_t max_id = 0;
    for (const auto& e : edges) {
        if (e.u > 0xFFFFFFFEull || e.v > 0xFFFFFFFEull)
            fail(e.line, "node id too large for a dense graph; use the id-mapped reader");
        max_id = std::max({max_id, e.u, e.v});
    }
    EdgeListResult result;
    result.graph = Graph(edges.empty() ? 0 : static_cast<NodeId>(max_id + 1));
    std::vector<NodeId> us(edges.size()), vs(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        us[i] = static_cast<NodeId>(edges[i].u);
        vs[i] = static_cast<NodeId>(edges[i].v);
    }
    result.skipped_lines = build(result.graph, edges, us, vs, options.lenient);
    return result;
}

MappedEdgeListResult read_edge_list_mapped(std::istream& in, const EdgeListOptions& options) {
    const auto edges = scan(in);
    MappedEdgeListResult result;
    std::unordered_map<std::uint64_t, NodeId> dense;
    dense.reserve(edges.size() * 2);
    std::vector<NodeId> us(edges.size()), vs(edges.size());
    auto intern = [&](std::uint64_t external) {
        auto [it, fresh] = dense.try_emplace(external, static_cast<NodeId>(dense.size()));
        if (fresh) result.external_ids.push_back(external);
        return it->second;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        us[i] = intern(edges[i].u);
        vs[i] = intern(edges[i].v);
    }
    result.graph = Graph(static_cast<NodeId>(dense.size()));
    result.skipped_lines = build(result.graph, edges, us, vs, options.lenient);
    return result;
}

void write_id_map(const std::vector<std::uint64_t>& external_ids, std::ostream& out) {
    out << "# external dense\n";
    for (std::size_t dense = 0; dense < external_ids.size(); ++dense)
        out << external_ids[dense] << ' ' << dense << '\n';
}

void write_edge_list(const Graph& g, std::ostream& out,
                     const std::vector<std::string>& header_comments) {
    for (const auto& comment : header_comments) out << "# " << comment << '\n';
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (v > u) out << u << ' ' << v << '\n';
    if (!out) throw std::runtime_error("edge list write failed");
}

} // namespace topogen
