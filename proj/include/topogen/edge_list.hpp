#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "topogen/graph.hpp"

namespace topogen {

struct EdgeListOptions {
    // Lenient mode skips self-loop and duplicate lines (counting them)
    // instead of failing; real traceroute-derived datasets contain both.
    bool lenient = false;
};

struct EdgeListResult {
    Graph graph;
    std::uint64_t skipped_lines = 0; // lenient mode only
};

// "u v" per line; '#' comments and blank lines ignored. Node count is
// max id + 1. Malformed tokens or negative ids always throw
// std::runtime_error naming the line; in strict mode so do self-loops and
// duplicate edges.
EdgeListResult read_edge_list(std::istream& in, const EdgeListOptions& options = {});

// As read_edge_list, but external ids may be sparse: they are compacted to
// dense ids in order of first appearance and the mapping is returned
// (index = dense id, value = external id).
struct MappedEdgeListResult {
    Graph graph;
    std::vector<std::uint64_t> external_ids;
    std::uint64_t skipped_lines = 0;
};

MappedEdgeListResult read_edge_list_mapped(std::istream& in,
                                           const EdgeListOptions& options = {});

// Two-column "external dense" rows.
void write_id_map(const std::vector<std::uint64_t>& external_ids, std::ostream& out);

// Each edge once as "u v" with u < v, lexicographically sorted. Header
// comment lines are emitted first, prefixed with "# ".
void write_edge_list(const Graph& g, std::ostream& out,
                     const std::vector<std::string>& header_comments = {});

} // namespace topogen
