#include "cgt/prime_graph.hpp"

#include <algorithm>
#include <deque>

#include "cgt/errors.hpp"
#include "cgt/numutil.hpp"

namespace cgt {

std::optional<std::size_t> PrimeGraph::index_of(std::uint64_t v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return std::size_t(it - vertices.begin());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> PrimeGraph::edge_list() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adj[i][j]) edges.emplace_back(vertices[i], vertices[j]);
    return edges;
}

std::size_t PrimeGraph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < size(); ++j)
        if (adj[i][j]) ++d;
    return d;
}

PrimeGraph graph_from_class_sizes(const std::vector<std::uint64_t>& sizes) {
    PrimeGraph g;
    for (std::uint64_t s : sizes)
        for (std::uint64_t p : prime_divisors(s)) g.vertices.push_back(p);
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    const std::size_t n = g.vertices.size();
    g.adj.assign(n, std::vector<char>(n, 0));
    for (std::uint64_t s : sizes) {
        const std::vector<std::uint64_t> ps = prime_divisors(s);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                const std::size_t a = *g.index_of(ps[i]);
                const std::size_t b = *g.index_of(ps[j]);
                g.adj[a][b] = g.adj[b][a] = 1;
            }
    }
    return g;
}

PrimeGraph graph_from_lists(const std::vector<std::uint64_t>& vertices,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
    PrimeGraph g;
    g.vertices = vertices;
    std::sort(g.vertices.begin(), g.vertices.end());
    if (std::adjacent_find(g.vertices.begin(), g.vertices.end()) != g.vertices.end())
        throw MalformedSpec("graph: duplicate vertex");
    const std::size_t n = g.vertices.size();
    g.adj.assign(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : edges) {
        if (u == v) throw MalformedSpec("graph: loop edge " + std::to_string(u));
        const auto iu = g.index_of(u), iv = g.index_of(v);
        if (!iu || !iv)
            throw MalformedSpec("graph: edge endpoint not among the vertices");
        g.adj[*iu][*iv] = g.adj[*iv][*iu] = 1;
    }
    return g;
}

namespace {

std::vector<int> color_components(const PrimeGraph& g, std::optional<std::size_t> skip) {
    const std::size_t n = g.size();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1 || (skip && *skip == s)) continue;
        comp[s] = next;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v)
                if (g.adj[u][v] && comp[v] == -1 && !(skip && *skip == v)) {
                    comp[v] = next;
                    queue.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

int count_components(const std::vector<int>& comp) {
    int mx = -1;
    for (int c : comp) mx = std::max(mx, c);
    return mx + 1;
}

void lowpoint_dfs(const PrimeGraph& g, std::size_t u, std::optional<std::size_t> parent,
                  std::vector<int>& disc, std::vector<int>& low, int& timer,
                  std::vector<char>& is_cut) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!g.adj[u][v]) continue;
        if (disc[v] == -1) {
            ++children;
            lowpoint_dfs(g, v, u, disc, low, timer, is_cut);
            low[u] = std::min(low[u], low[v]);
            if (parent && low[v] >= disc[u]) is_cut[u] = 1;
        } else if (!parent || v != *parent) {
            low[u] = std::min(low[u], disc[v]);
        }
    }
    if (!parent && children > 1) is_cut[u] = 1;
}

} // namespace

std::vector<std::size_t> cut_vertices_by_removal(const PrimeGraph& g) {
    std::vector<std::size_t> cut;
    const int base = count_components(color_components(g, std::nullopt));
    for (std::size_t v = 0; v < g.size(); ++v)
        if (count_components(color_components(g, v)) > base) cut.push_back(v);
    return cut;
}

GraphAnalysis analyze_graph(const PrimeGraph& g) {
    const std::size_t n = g.size();
    GraphAnalysis a;
    a.component_of = color_components(g, std::nullopt);
    a.component_count = count_components(a.component_of);
    a.connected = a.component_count <= 1;

    std::vector<int> disc(n, -1), low(n, -1);
    std::vector<char> is_cut(n, 0);
    int timer = 0;
    for (std::size_t s = 0; s < n; ++s)
        if (disc[s] == -1) lowpoint_dfs(g, s, std::nullopt, disc, low, timer, is_cut);
    for (std::size_t v = 0; v < n; ++v)
        if (is_cut[v]) a.cut_vertices.push_back(v);
    if (a.cut_vertices != cut_vertices_by_removal(g))
        throw InternalCheckFailed("cut vertex sets differ between lowpoint and removal routes");

    if (a.connected) {
        std::uint64_t diam = 0;
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::uint64_t> dist(n, UINT64_MAX);
            std::deque<std::size_t> queue{s};
            dist[s] = 0;
            while (!queue.empty()) {
                const std::size_t u = queue.front();
                queue.pop_front();
                for (std::size_t v = 0; v < n; ++v)
                    if (g.adj[u][v] && dist[v] == UINT64_MAX) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
            }
            for (std::size_t v = 0; v < n; ++v) diam = std::max(diam, dist[v]);
        }
        a.diameter = diam;
    }

    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) + 1 == n) a.complete_vertices.push_back(v);

    a.component_is_complete.assign(a.component_count, 1);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (a.component_of[u] == a.component_of[v] && !g.adj[u][v])
                a.component_is_complete[a.component_of[u]] = 0;
    return a;
}

std::optional<TwoCliqueCover> two_clique_cover(const PrimeGraph& g) {
    const std::size_t n = g.size();
    std::vector<int> color(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || g.adj[u][v]) continue; // complement edges only
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    TwoCliqueCover cover;
    for (std::size_t v = 0; v < n; ++v)
        (color[v] == 0 ? cover.left : cover.right).push_back(v);
    for (const auto* side : {&cover.left, &cover.right})
        for (std::size_t i = 0; i < side->size(); ++i)
            for (std::size_t j = i + 1; j < side->size(); ++j)
                if (!g.adj[(*side)[i]][(*side)[j]])
                    throw InternalCheckFailed("two-clique cover side is not a clique");
    return cover;
}

} // namespace cgt
