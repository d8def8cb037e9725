#include "deduct/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace deduct {

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_forest(const Graph& g) {
    // A graph is acyclic iff every component has order = size + 1.
    return g.order() - g.size() == static_cast<int>(connected_components(g).size());
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

namespace {

// Branch and bound: grow a clique from candidate set `cand`, prune when even
// taking all candidates cannot beat `best`.
void clique_search(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int depth,
                   int& best) {
    if (depth + std::popcount(cand) <= best) return;
    if (!cand) {
        best = std::max(best, depth);
        return;
    }
    while (cand) {
        if (depth + std::popcount(cand) <= best) return;
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique_search(adj, cand & adj[v], depth + 1, best);
    }
}

}  // namespace

int max_clique_size(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw std::invalid_argument("max_clique_size supports order <= 64");
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    int best = 0;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    clique_search(adj, all, 0, best);
    return best;
}

namespace {

// remaining = unmatched vertices; value = max matching size within them.
int matching_dp(const std::vector<std::uint32_t>& adj, std::uint32_t remaining,
                std::vector<std::int8_t>& memo) {
    if (!remaining) return 0;
    std::int8_t& slot = memo[remaining];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(remaining);
    const std::uint32_t rest = remaining & (remaining - 1);
    int best = matching_dp(adj, rest, memo);  // leave v unmatched
    std::uint32_t partners = adj[v] & rest;
    while (partners) {
        const int w = std::countr_zero(partners);
        partners &= partners - 1;
        best = std::max(best, 1 + matching_dp(adj, rest & ~(std::uint32_t{1} << w), memo));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
}

}  // namespace

int max_matching_size(const Graph& g) {
    const int n = g.order();
    if (n > 26) throw std::invalid_argument("max_matching_size supports order <= 26");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
    return matching_dp(adj, n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1, memo);
}

int edge_cover_number(const Graph& g) { return g.order() - max_matching_size(g); }

std::vector<Vertex> find_cut_vertices(const Graph& g) {
    const int n = g.order();
    const auto base = connected_components(g).size();
    std::vector<Vertex> cuts;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> rest;
        rest.reserve(n - 1);
        for (Vertex w = 0; w < n; ++w)
            if (w != v) rest.push_back(w);
        if (rest.empty()) continue;
        // v is a cut vertex iff deleting it splits its component.
        const auto after = connected_components(induced_subgraph(g, rest)).size();
        const auto isolated = g.degree(v) == 0 ? 1u : 0u;
        if (after + isolated > base) cuts.push_back(v);
    }
    return cuts;
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    m.min_degree = g.order() > 0 ? g.degree(0) : 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        m.min_degree = std::min(m.min_degree, g.degree(v));
        if (g.degree(v) == 1) ++m.leaf_count;
    }
    m.clique_number = max_clique_size(g);
    m.max_matching = max_matching_size(g);
    m.edge_cover = g.order() - m.max_matching;
    m.components = connected_components(g);
    m.tree = g.size() == g.order() - 1 && m.components.size() == 1;
    m.cut_vertices = find_cut_vertices(g);
    return m;
}

}  // namespace deduct
