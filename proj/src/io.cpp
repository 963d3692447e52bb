#include "mce/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "mce/errors.hpp"

namespace mce {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

// Recognizes "# n=K" and SNAP-style "# Nodes: K Edges: ..." annotations.
std::optional<std::uint32_t> scan_comment_for_count(std::string_view comment) {
    for (std::string_view key : {std::string_view("n="), std::string_view("nodes:")}) {
        for (std::size_t i = 0; i + key.size() <= comment.size(); ++i) {
            if (i > 0 && std::isalnum(static_cast<unsigned char>(comment[i - 1])))
                continue; // "mean=" must not read as "n="
            bool match = true;
            for (std::size_t k = 0; k < key.size(); ++k) {
                if (std::tolower(static_cast<unsigned char>(comment[i + k])) != key[k]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            std::size_t j = i + key.size();
            while (j < comment.size() && comment[j] == ' ') ++j;
            std::size_t end = j;
            while (end < comment.size() &&
                   std::isdigit(static_cast<unsigned char>(comment[end])))
                ++end;
            std::uint32_t value = 0;
            if (end > j && parse_int(comment.substr(j, end - j), value)) return value;
        }
    }
    return std::nullopt;
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(line, line_number);
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
}

} // namespace

EdgeListData parse_edge_list(std::string_view text) {
    EdgeListData data;
    for_each_line(text, [&](std::string_view line, std::size_t line_number) {
        if (line.empty()) return;
        if (line[0] == '#' || line[0] == '%') {
            if (!data.vertex_count) data.vertex_count = scan_comment_for_count(line);
            return;
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) return;
        label_t a = 0, b = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b))
            throw MalformedLine(line_number, "expected two integers");
        data.edges.emplace_back(a, b);
    });
    return data;
}

DimacsData parse_dimacs(std::string_view text) {
    DimacsData data;
    bool header_seen = false;
    std::uint64_t edge_lines = 0;
    for_each_line(text, [&](std::string_view line, std::size_t line_number) {
        auto tokens = split_tokens(line);
        if (tokens.empty()) return;
        if (tokens[0] == "c") return;
        if (tokens[0] == "p") {
            if (header_seen) throw MalformedLine(line_number, "duplicate problem line");
            std::uint32_t n = 0;
            std::uint64_t m = 0;
            if (tokens.size() != 4 || !parse_int(tokens[2], n) || !parse_int(tokens[3], m))
                throw MalformedLine(line_number, "expected 'p edge <n> <m>'");
            data.vertex_count = n;
            data.declared_edges = m;
            header_seen = true;
            return;
        }
        if (tokens[0] == "e") {
            if (!header_seen) throw MissingHeader("edge before problem line");
            std::int64_t u = 0, v = 0;
            if (tokens.size() != 3 || !parse_int(tokens[1], u) || !parse_int(tokens[2], v))
                throw MalformedLine(line_number, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || std::uint64_t(u) > data.vertex_count ||
                std::uint64_t(v) > data.vertex_count)
                throw MalformedLine(line_number, "endpoint outside 1..n");
            data.edges.emplace_back(u - 1, v - 1); // to 0-based
            ++edge_lines;
            return;
        }
        throw MalformedLine(line_number, "unrecognized record type");
    });
    if (!header_seen) throw MissingHeader("no problem line found");
    data.edge_count_mismatch = edge_lines != data.declared_edges;
    return data;
}

Graph read_graph_file(const std::string& path, GraphFormat format,
                      bool* edge_count_mismatch) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    if (edge_count_mismatch) *edge_count_mismatch = false;
    if (format == GraphFormat::Dimacs) {
        DimacsData data = parse_dimacs(text);
        if (edge_count_mismatch) *edge_count_mismatch = data.edge_count_mismatch;
        return build_graph(data.edges, data.vertex_count);
    }
    EdgeListData data = parse_edge_list(text);
    return build_graph(data.edges, data.vertex_count);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n=" << g.vertex_count() << '\n';
    for (const auto& [a, b] : g.edge_list()) out << a << ' ' << b << '\n';
}

void write_cliques(const Graph& g, const CliqueList& cliques, std::ostream& out) {
    std::vector<std::vector<label_t>> lines;
    lines.reserve(cliques.size());
    for (const auto& clique : cliques) {
        std::vector<label_t> labels;
        labels.reserve(clique.size());
        for (vertex_t v : clique) labels.push_back(g.label(v));
        std::sort(labels.begin(), labels.end());
        lines.push_back(std::move(labels));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i > 0) out << ' ';
            out << line[i];
        }
        out << '\n';
    }
}

void write_bench_table(std::span<const BenchRow> rows, std::ostream& out) {
    out << "graph,n,m,d,mu,algorithm,seconds\n";
    for (const auto& row : rows) {
        out << row.graph << ',' << row.n << ',' << row.m << ',' << row.degeneracy << ',';
        if (row.mu)
            out << *row.mu;
        else
            out << "NA";
        out << ',' << row.algorithm << ',';
        if (row.seconds) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", *row.seconds);
            out << buf;
        } else {
            out << "NA";
        }
        out << '\n';
    }
}

} // namespace mce
