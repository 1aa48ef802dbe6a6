#pragma once

// The graph on primes dividing conjugacy class sizes: p and q are joined
// when pq divides some class size (equivalently, some size is divisible by
// both).  Plus the small-graph analysis the classifier consumes.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cgt {

struct PrimeGraph {
    std::vector<std::uint64_t> vertices;  // sorted, distinct
    std::vector<std::vector<char>> adj;   // symmetric, zero diagonal

    std::size_t size() const { return vertices.size(); }
    bool has_edge(std::size_t i, std::size_t j) const { return adj[i][j] != 0; }
    std::optional<std::size_t> index_of(std::uint64_t v) const;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_list() const; // u < v pairs
    std::size_t degree(std::size_t i) const;
};

PrimeGraph graph_from_class_sizes(const std::vector<std::uint64_t>& sizes);

// Explicit vertex/edge input; throws MalformedSpec on duplicate vertices,
// loops, or edges touching unknown vertices.
PrimeGraph graph_from_lists(const std::vector<std::uint64_t>& vertices,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

struct GraphAnalysis {
    bool connected = true;                 // vacuously true for <= 1 vertex
    int component_count = 0;
    std::vector<int> component_of;
    std::vector<std::size_t> cut_vertices; // indices, ascending
    std::optional<std::uint64_t> diameter; // absent when disconnected
    std::vector<std::size_t> complete_vertices; // adjacent to every other vertex
    std::vector<char> component_is_complete;    // component induces a clique
};

// Cut vertices come from a lowpoint DFS, re-verified against
// cut_vertices_by_removal; disagreement raises InternalCheckFailed.
GraphAnalysis analyze_graph(const PrimeGraph& g);

// Independent route: delete each vertex in turn and recount components.
std::vector<std::size_t> cut_vertices_by_removal(const PrimeGraph& g);

// Partition into two cliques (complement bipartition), when one exists.
struct TwoCliqueCover {
    std::vector<std::size_t> left, right; // vertex indices, each a clique
};
std::optional<TwoCliqueCover> two_clique_cover(const PrimeGraph& g);

} // namespace cgt
