#ifndef MCE_IO_HPP
#define MCE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mce/graph.hpp"
#include "mce/oracle.hpp"

namespace mce {

struct EdgeListData {
    std::vector<Edge> edges;
    // From a comment of the form "# n=K" or "# Nodes: K"; lets files carry
    // isolated vertices.
    std::optional<std::uint32_t> vertex_count;
};

// Whitespace-separated integer pairs, one edge per line; '#' and '%' start
// comment lines; blank lines are skipped. Throws MalformedLine with the
// 1-based line number on anything else.
EdgeListData parse_edge_list(std::string_view text);

struct DimacsData {
    std::vector<Edge> edges; // already converted to 0-based labels
    std::uint32_t vertex_count = 0;
    std::uint64_t declared_edges = 0;
    bool edge_count_mismatch = false; // warning-level
};

// DIMACS format: "c" comments, one "p edge <n> <m>" header, then
// "e <u> <v>" lines with 1-based endpoints. Throws MissingHeader when edges
// precede the header or no header exists, MalformedLine otherwise.
DimacsData parse_dimacs(std::string_view text);

enum class GraphFormat { EdgeList, Dimacs };

// Reads a whole file ("-" means stdin), parses it in the given format and
// builds the graph. A DIMACS edge-count mismatch is reported through
// edge_count_mismatch when the pointer is non-null.
Graph read_graph_file(const std::string& path, GraphFormat format,
                      bool* edge_count_mismatch = nullptr);

// Writes "# n=<count>" followed by one "label label" line per edge;
// parse_edge_list + build_graph reproduce the same labeled graph.
void write_edge_list(const Graph& g, std::ostream& out);

// One clique per line: ascending original labels, space-separated; lines in
// lexicographic label order.
void write_cliques(const Graph& g, const CliqueList& cliques, std::ostream& out);

struct BenchRow {
    std::string graph;
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    std::uint32_t degeneracy = 0;
    std::optional<std::uint64_t> mu;    // empty => NA (variant refused)
    std::string algorithm;
    std::optional<double> seconds;      // empty => NA
};

// CSV with header graph,n,m,d,mu,algorithm,seconds; refusals render as NA.
void write_bench_table(std::span<const BenchRow> rows, std::ostream& out);

} // namespace mce

#endif // MCE_IO_HPP
