#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

// BGF, a DIMACS-style bipartite graph format:
//
//   c <free text>            comment lines
//   p bgf <a> <b> <m>        one header
//   e <i> <j>                exactly m edge lines, 0 <= i < a, 0 <= j < b
//
// Whitespace-separated tokens, LF line endings, UTF-8. The format carries no
// vertex labels; parsed graphs get the default a0..,b0.. labeling.

inline BipartiteGraph parse_bgf(std::istream& in, const std::string& name = {}) {
    int a = -1, b = -1, m = -1;
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    int seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok == "c") continue;
        if (tok == "p") {
            if (a != -1) throw parse_error(lineno, "duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> a >> b >> m) || fmt != "bgf" || a < 0 || b < 0 || m < 0)
                throw parse_error(lineno, "malformed header, expected 'p bgf <a> <b> <m>'");
            if (a + b > kMaxVertices)
                throw parse_error(lineno, "graph too large (a + b <= 64)");
            continue;
        }
        if (tok == "e") {
            if (a == -1) throw parse_error(lineno, "edge line before header");
            int i = -1, j = -1;
            if (!(ls >> i >> j)) throw parse_error(lineno, "malformed edge line");
            std::string extra;
            if (ls >> extra) throw parse_error(lineno, "trailing tokens on edge line");
            if (i < 0 || i >= a || j < 0 || j >= b)
                throw parse_error(lineno, "edge endpoint out of range");
            for (const Edge& e : edges)
                if (e.a == i && e.b == j) throw parse_error(lineno, "duplicate edge");
            edges.push_back({i, j});
            ++seen;
            continue;
        }
        throw parse_error(lineno, "unknown line type '" + tok + "'");
    }
    if (a == -1) throw parse_error(lineno, "missing header");
    if (seen != m)
        throw parse_error(lineno, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(seen));
    return BipartiteGraph(a, b, std::move(edges), {}, name);
}

inline BipartiteGraph parse_bgf(const std::string& text, const std::string& name = {}) {
    std::istringstream in(text);
    return parse_bgf(in, name);
}

inline void serialize_bgf(const BipartiteGraph& g, std::ostream& out) {
    out << "p bgf " << g.part_a_size() << " " << g.part_b_size() << " " << g.size() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.a << " " << e.b << "\n";
}

inline std::string serialize_bgf(const BipartiteGraph& g) {
    std::ostringstream out;
    serialize_bgf(g, out);
    return out.str();
}

} // namespace mcg
