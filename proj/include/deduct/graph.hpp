#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deduct {

using Vertex = int;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction: edges are normalized to (u, v) with u < v
/// and kept sorted, adjacency lists are sorted. Values are cheap to copy
/// and safe to share across threads.
class Graph {
public:
    /// Edgeless graph of the given order (n >= 1).
    explicit Graph(int n);

    /// Graph from an edge list. Rejects self-loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges sorted lexicographically, each with u < v.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 1;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Error from the edge-list parser; line is 1-based and counts every
/// physical line of the input, including comments and blanks.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parse the edge-list format: first non-comment line is "n m", followed by
/// exactly m lines "u v" (0 <= u,v < n, u != v). Lines starting with '#'
/// and blank lines are ignored.
Graph parse_edge_list(const std::string& text);

/// Canonical edge-list text: "n m" then edges sorted with u < v.
/// parse_edge_list(write_edge_list(g)) == g.
std::string write_edge_list(const Graph& g);

/// Cartesian product. Vertex (u, v) of g x h gets label u*|V(h)| + v;
/// (u,v) ~ (u',v') iff u == u' and v ~ v', or v == v' and u ~ u'.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Subgraph induced by `vertices` (sorted, distinct), relabeled so that
/// vertices[i] becomes label i.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

/// SplitMix64 stream. State update: state += 0x9E3779B97F4A7C15; the output
/// mix is the standard two-multiply xorshift finalizer. Seeds reproduce the
/// same stream across platforms and implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// next() % bound; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct FamilySpec {
    enum class Kind { Path, Cycle, Wheel, Complete, Star, Multipartite, Hypercube, RandomTree };

    Kind kind = Kind::Path;
    int n = 0;                   // order, for the single-parameter families
    std::vector<int> parts;      // Multipartite part sizes, consecutive label blocks
    int k = 0;                   // Hypercube dimension
    std::uint64_t seed = 0;      // RandomTree

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec wheel(int n);
    static FamilySpec complete(int n);
    static FamilySpec star(int n);
    static FamilySpec multipartite(std::vector<int> parts);
    static FamilySpec hypercube(int k);
    static FamilySpec random_tree(int n, std::uint64_t seed);
};

/// Build the graph for a family spec.
///
/// Labelings: Path is the chain 0..n-1; Cycle adds {0, n-1}; Wheel has hub 0
/// and rim cycle 1..n-1; Star has center 0; Multipartite parts occupy
/// consecutive label blocks; Hypercube labels are k-bit strings with edges at
/// Hamming distance 1; RandomTree decodes a Pruefer sequence whose entries
/// are SplitMix64(seed) draws reduced mod n.
Graph generate(const FamilySpec& spec);

/// Decode a Pruefer sequence (length n-2, entries in [0, n)) into its tree.
Graph prufer_decode(int n, const std::vector<int>& seq);

/// Number of labeled trees on n vertices: 1 for n in {1, 2}, n^(n-2) otherwise.
std::uint64_t labeled_tree_count(int n);

/// The index-th labeled tree on n vertices (index < labeled_tree_count(n)),
/// obtained by decoding the base-n digits of index as a Pruefer sequence.
/// Supported for 1 <= n <= 8.
Graph labeled_tree(int n, std::uint64_t index);

template <class Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    const std::uint64_t count = labeled_tree_count(n);
    for (std::uint64_t i = 0; i < count; ++i) fn(labeled_tree(n, i));
}

}  // namespace deduct
