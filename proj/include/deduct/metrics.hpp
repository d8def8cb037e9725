#pragma once

#include <vector>

#include "deduct/graph.hpp"

namespace deduct {

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff g is acyclic.
bool is_forest(const Graph& g);

/// True iff g is connected and acyclic.
bool is_tree(const Graph& g);

/// Order of a largest clique. Exact branch-and-bound over bitmask adjacency;
/// requires order <= 64.
int max_clique_size(const Graph& g);

/// Size of a maximum matching. Exact bitmask DP; requires order <= 26.
int max_matching_size(const Graph& g);

/// Minimum number of edges touching every vertex, summed per component with
/// each isolated vertex counting 1. Equals order minus max_matching_size.
int edge_cover_number(const Graph& g);

/// Vertices whose removal increases the number of components.
std::vector<Vertex> find_cut_vertices(const Graph& g);

struct GraphMetrics {
    int min_degree = 0;
    int leaf_count = 0;                                  // degree-1 vertices
    int clique_number = 0;
    int max_matching = 0;
    int edge_cover = 0;
    bool tree = false;
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> cut_vertices;
};

GraphMetrics metrics(const Graph& g);

}  // namespace deduct
