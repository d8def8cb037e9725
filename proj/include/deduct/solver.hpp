#pragma once

#include <cstdint>
#include <optional>

#include "deduct/engine.hpp"
#include "deduct/graph.hpp"
#include "deduct/layout.hpp"

namespace deduct {

/// Exact lower and upper bounds on the deduction number, each from an
/// elementary graph parameter. leaf_bound applies only to connected graphs
/// of order >= 3. For a disconnected graph, upper sums the per-component
/// values (order - 1, or 1 for an isolated vertex); searchers cannot cross
/// components.
struct BoundsReport {
    int half_ceil = 0;        // ceil(n / 2)
    int min_degree = 0;
    std::optional<int> leaf_bound;
    int clique_bound = 0;     // clique number - 1
    int edge_cover_bound = 0; // n - maximum matching size
    int lower = 0;            // max of the bounds above that apply
    int upper = 0;
};

BoundsReport bounds(const Graph& g);

struct ComponentSolve {
    std::vector<Vertex> vertices;  // original labels, sorted
    int d = 0;
    Layout witness;                // on original labels
    std::uint64_t layouts_tested = 0;
};

/// d, a minimum successful layout, and the search effort. The witness is
/// the lexicographically least successful vertex subset of size d (per
/// component); layouts_tested is its 1-based rank in the search order, a
/// value independent of how the search was parallelized.
struct SolveResult {
    int d = 0;
    Layout witness;
    std::uint64_t layouts_tested = 0;
    std::vector<ComponentSolve> per_component;  // populated only when disconnected
};

struct SolveOptions {
    int threads = 0;   // 0: DEDUCT_THREADS env, else all available
    int chunk = 2048;  // candidates per parallel batch
};

/// Exact deduction number by exhaustive search over vertex subsets, one
/// connected component at a time, subset size stepping from bounds.lower
/// upward. A minimum successful layout with one searcher per vertex always
/// exists, so subsets suffice; solve_multiset_oracle cross-checks that at
/// small orders.
SolveResult solve(const Graph& g, const SolveOptions& options = {});

/// Minimum searcher count over ALL layouts, including multiple searchers
/// per vertex. Independent of the subset restriction in solve; order <= 8.
int solve_multiset_oracle(const Graph& g);

/// Thread count a parallel kernel will use for a requested value:
/// `requested` if positive, else DEDUCT_THREADS if set, else all available.
int effective_thread_count(int requested);

/// Binomial coefficient; overflow-checked for the ranges solve uses.
std::uint64_t binomial(int n, int k);

/// Lexicographic successor of a k-subset of {0..n-1}; false at the last one.
bool next_combination(std::vector<Vertex>& c, int n);

namespace reference {

/// Single-threaded counterpart of deduct::solve, one plain lexicographic
/// scan per subset size. Kept as the comparison baseline: equal results,
/// no parallel machinery.
SolveResult solve(const Graph& g);

}  // namespace reference

}  // namespace deduct
