#include "deduct/graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace deduct {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool parse_int(const std::string& tok, long& out) {
    try {
        size_t pos = 0;
        out = std::stol(tok, &pos);
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    int header_line = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (n < 0) {
            long a, b;
            if (toks.size() != 2 || !parse_int(toks[0], a) || !parse_int(toks[1], b) ||
                a < 1 || b < 0)
                throw ParseError(lineno, "malformed header, expected \"n m\"");
            n = a;
            m = b;
            header_line = lineno;
            continue;
        }
        if (static_cast<long>(edges.size()) == m)
            throw ParseError(lineno, "unexpected line after " + std::to_string(m) + " edges");
        long u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError(lineno, "malformed edge, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        const Vertex a = static_cast<Vertex>(std::min(u, v));
        const Vertex b = static_cast<Vertex>(std::max(u, v));
        if (!seen.insert({a, b}).second)
            throw ParseError(lineno,
                             "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        edges.push_back({a, b});
    }
    if (n < 0) throw ParseError(lineno, "missing header line \"n m\"");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(header_line, "header promises " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<size_t>(ng) * h.size() + static_cast<size_t>(nh) * g.size());
    for (int u = 0; u < ng; ++u)
        for (auto [v, w] : h.edges()) edges.push_back({u * nh + v, u * nh + w});
    for (auto [u, w] : g.edges())
        for (int v = 0; v < nh; ++v) edges.push_back({u * nh + v, w * nh + v});
    return Graph(ng * nh, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> local(g.order(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0) edges.push_back({local[u], local[v]});
    return Graph(static_cast<int>(vertices.size()), edges);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

FamilySpec FamilySpec::path(int n) { return {Kind::Path, n, {}, 0, 0}; }
FamilySpec FamilySpec::cycle(int n) { return {Kind::Cycle, n, {}, 0, 0}; }
FamilySpec FamilySpec::wheel(int n) { return {Kind::Wheel, n, {}, 0, 0}; }
FamilySpec FamilySpec::complete(int n) { return {Kind::Complete, n, {}, 0, 0}; }
FamilySpec FamilySpec::star(int n) { return {Kind::Star, n, {}, 0, 0}; }
FamilySpec FamilySpec::multipartite(std::vector<int> parts) {
    return {Kind::Multipartite, 0, std::move(parts), 0, 0};
}
FamilySpec FamilySpec::hypercube(int k) { return {Kind::Hypercube, 0, {}, k, 0}; }
FamilySpec FamilySpec::random_tree(int n, std::uint64_t seed) {
    return {Kind::RandomTree, n, {}, 0, seed};
}

namespace {

std::vector<std::pair<Vertex, Vertex>> chain_edges(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return edges;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::Path:
            require(spec.n >= 1, "path requires n >= 1");
            return Graph(spec.n, chain_edges(spec.n));
        case Kind::Cycle: {
            require(spec.n >= 3, "cycle requires n >= 3");
            auto edges = chain_edges(spec.n);
            edges.push_back({0, spec.n - 1});
            return Graph(spec.n, edges);
        }
        case Kind::Wheel: {
            require(spec.n >= 4, "wheel requires n >= 4");
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (int i = 1; i < spec.n; ++i) edges.push_back({0, i});
            for (int i = 1; i + 1 < spec.n; ++i) edges.push_back({i, i + 1});
            edges.push_back({1, spec.n - 1});
            return Graph(spec.n, edges);
        }
        case Kind::Complete: {
            require(spec.n >= 2, "complete graph requires n >= 2");
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) edges.push_back({u, v});
            return Graph(spec.n, edges);
        }
        case Kind::Star: {
            require(spec.n >= 2, "star requires n >= 2");
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (int i = 1; i < spec.n; ++i) edges.push_back({0, i});
            return Graph(spec.n, edges);
        }
        case Kind::Multipartite: {
            require(spec.parts.size() >= 2, "multipartite requires at least 2 parts");
            for (int p : spec.parts) require(p >= 1, "multipartite part sizes must be >= 1");
            std::vector<int> block;  // part index per vertex
            for (size_t i = 0; i < spec.parts.size(); ++i)
                block.insert(block.end(), spec.parts[i], static_cast<int>(i));
            const int n = static_cast<int>(block.size());
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (block[u] != block[v]) edges.push_back({u, v});
            return Graph(n, edges);
        }
        case Kind::Hypercube: {
            require(spec.k >= 1, "hypercube requires k >= 1");
            require(spec.k <= 20, "hypercube dimension too large");
            const int n = 1 << spec.k;
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (int u = 0; u < n; ++u)
                for (int b = 0; b < spec.k; ++b)
                    if (!(u >> b & 1)) edges.push_back({u, u | (1 << b)});
            return Graph(n, edges);
        }
        case Kind::RandomTree: {
            require(spec.n >= 1, "random tree requires n >= 1");
            if (spec.n <= 2) return Graph(spec.n, chain_edges(spec.n));
            SplitMix64 rng(spec.seed);
            std::vector<int> seq(spec.n - 2);
            for (int& a : seq) a = static_cast<int>(rng.next_below(spec.n));
            return prufer_decode(spec.n, seq);
        }
    }
    throw std::invalid_argument("unknown family");
}

Graph prufer_decode(int n, const std::vector<int>& seq) {
    require(n >= 2, "prufer decode requires n >= 2");
    require(static_cast<int>(seq.size()) == n - 2, "prufer sequence must have length n-2");
    for (int a : seq) require(a >= 0 && a < n, "prufer entry out of range");

    std::vector<int> deg(n, 1);
    for (int a : seq) ++deg[a];
    std::vector<std::pair<Vertex, Vertex>> edges;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
        edges.push_back({leaf, a});
        if (--deg[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return Graph(n, edges);
}

std::uint64_t labeled_tree_count(int n) {
    require(n >= 1 && n <= 8, "labeled tree enumeration supports 1 <= n <= 8");
    if (n <= 2) return 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
    return count;
}

Graph labeled_tree(int n, std::uint64_t index) {
    require(index < labeled_tree_count(n), "labeled tree index out of range");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> seq(n - 2);
    for (int i = 0; i < n - 2; ++i) {
        seq[i] = static_cast<int>(index % n);
        index /= n;
    }
    return prufer_decode(n, seq);
}

}  // namespace deduct
