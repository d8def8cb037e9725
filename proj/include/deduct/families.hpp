#pragma once

#include <optional>

#include "deduct/graph.hpp"
#include "deduct/layout.hpp"

namespace deduct {

struct FamilyAnswer {
    FamilySpec spec;
    int d = 0;
    Layout witness;
};

/// Closed-form deduction number for the parameterized families. RandomTree
/// has no closed form; use prune for trees.
///
/// Values: paths and cycles ceil(n/2); wheels ceil(n/2) for n >= 5 and 3
/// for the order-4 wheel (= K4); complete graphs and stars n-1; complete
/// multipartite graphs N-1 when every part is a singleton or there are two
/// parts and one is a singleton, else N-2; hypercubes 2^(k-1).
int family_deduction_number(const FamilySpec& spec);

/// A successful layout realizing family_deduction_number, built
/// constructively (no search). Verified by simulation in the test suite.
Layout family_witness_layout(const FamilySpec& spec);

FamilyAnswer family_answer(const FamilySpec& spec);

/// Upper bound for the Cartesian product from factor solutions:
/// min(size_g * d_h, size_h * d_g).
long long product_upper_bound(long long size_g, long long d_g, long long size_h, long long d_h);

/// Upper bound for a graph formed by identifying a vertex of one graph
/// with a vertex of another, or joining them by a bridge: d1 + d2.
int join_bound(int d1, int d2);

/// min over cut vertices u of 1 + sum of d over the components of g - u,
/// each component solved exactly. Empty when g has no cut vertex.
/// Requires order >= 3.
std::optional<int> cut_vertex_upper_bound(const Graph& g);

}  // namespace deduct
