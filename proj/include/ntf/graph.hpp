#pragma once

// Line digraph construction (links become nodes) and k-hop boolean adjacency
// for the graph attention layer.

#include <Eigen/Dense>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ntf/common.hpp"

namespace ntf {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

// The underlying network: devices as nodes, directed links as arcs.
struct Digraph {
    Index n_nodes = 0;
    std::vector<std::string> node_names;            // optional; defaults to "n<i>"
    std::vector<std::pair<Index, Index>> arcs;      // (tail, head)

    std::string node_name(Index i) const {
        if (i < static_cast<Index>(node_names.size())) return node_names[static_cast<std::size_t>(i)];
        return "n" + std::to_string(i);
    }

    void validate() const {
        std::set<std::pair<Index, Index>> seen;
        for (const auto& [u, v] : arcs) {
            if (u < 0 || u >= n_nodes || v < 0 || v >= n_nodes)
                throw ArgumentError("arc endpoint out of range");
            if (!seen.insert({u, v}).second) throw ArgumentError("duplicate arc");
        }
    }
};

// Links-as-nodes view: node i is arc i of the underlying digraph; arc (a,b)
// exists iff head(a) == tail(b) and a != b.
struct LineDigraph {
    std::vector<std::string> node_ids;          // link identifiers, "src->dst"
    std::vector<std::pair<Index, Index>> arcs;  // unique, no self-arcs

    Index size() const { return static_cast<Index>(node_ids.size()); }

    void validate() const {
        const Index n = size();
        std::set<std::pair<Index, Index>> seen;
        for (const auto& [i, j] : arcs) {
            if (i == j) throw IntegrityError("self-arc in line digraph");
            if (i < 0 || i >= n || j < 0 || j >= n)
                throw IntegrityError("line digraph arc index out of range");
            if (!seen.insert({i, j}).second) throw IntegrityError("duplicate line digraph arc");
        }
    }
};

inline LineDigraph line_digraph(const Digraph& g) {
    if (g.arcs.empty()) throw ArgumentError("line digraph of a digraph with no arcs");
    g.validate();
    LineDigraph out;
    const Index m = static_cast<Index>(g.arcs.size());
    out.node_ids.reserve(static_cast<std::size_t>(m));
    for (const auto& [u, v] : g.arcs)
        out.node_ids.push_back(g.node_name(u) + "->" + g.node_name(v));
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            if (a == b) continue;
            if (g.arcs[static_cast<std::size_t>(a)].second == g.arcs[static_cast<std::size_t>(b)].first)
                out.arcs.emplace_back(a, b);
        }
    return out;
}

enum class AdjacencyMode { directed, symmetric };

struct AdjacencySpec {
    AdjacencyMode mode = AdjacencyMode::symmetric;
    Index hops = 1;
    bool include_self_loops = true;
    BoolMatrix matrix;  // N×N reachability within `hops` steps; diagonal per flag

    Index size() const { return matrix.rows(); }
};

// matrix[i][j] = true iff j is reachable from i in 1..k steps over the
// (possibly symmetrized) arc set; the diagonal is forced to the self-loop flag.
inline AdjacencySpec k_hop_adjacency(const LineDigraph& g, Index k, AdjacencyMode mode,
                                     bool self_loops = true) {
    if (k < 1) throw ArgumentError("hop count must be >= 1");
    g.validate();
    const Index n = g.size();
    BoolMatrix step = BoolMatrix::Constant(n, n, false);
    for (const auto& [i, j] : g.arcs) {
        step(i, j) = true;
        if (mode == AdjacencyMode::symmetric) step(j, i) = true;
    }
    // breadth-first closure, depth capped at k
    BoolMatrix reach = BoolMatrix::Constant(n, n, false);
    std::vector<Index> frontier, next;
    std::vector<char> visited(static_cast<std::size_t>(n));
    for (Index src = 0; src < n; ++src) {
        std::fill(visited.begin(), visited.end(), 0);
        frontier.assign(1, src);
        visited[static_cast<std::size_t>(src)] = 1;
        for (Index depth = 1; depth <= k && !frontier.empty(); ++depth) {
            next.clear();
            for (Index u : frontier)
                for (Index v = 0; v < n; ++v)
                    if (step(u, v) && !visited[static_cast<std::size_t>(v)]) {
                        visited[static_cast<std::size_t>(v)] = 1;
                        reach(src, v) = true;
                        next.push_back(v);
                    }
            frontier.swap(next);
        }
    }
    AdjacencySpec spec;
    spec.mode = mode;
    spec.hops = k;
    spec.include_self_loops = self_loops;
    spec.matrix = reach;
    for (Index i = 0; i < n; ++i) spec.matrix(i, i) = self_loops;
    return spec;
}

// Edge-list text export for inspection: one "i j" pair per line.
inline std::string adjacency_edge_list(const AdjacencySpec& spec) {
    std::ostringstream out;
    out << "# k-hop adjacency: n=" << spec.size() << " hops=" << spec.hops << " mode="
        << (spec.mode == AdjacencyMode::symmetric ? "symmetric" : "directed")
        << " self_loops=" << (spec.include_self_loops ? "true" : "false") << '\n';
    for (Index i = 0; i < spec.size(); ++i)
        for (Index j = 0; j < spec.size(); ++j)
            if (spec.matrix(i, j)) out << i << ' ' << j << '\n';
    return out.str();
}

}  // namespace ntf
