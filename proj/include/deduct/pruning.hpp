#pragma once

#include "deduct/graph.hpp"
#include "deduct/layout.hpp"

namespace deduct {

struct PruneResult {
    Layout layout;       // the accumulated vertex set on the input's labels
    int p = 0;           // = layout.total()
    int iterations = 0;  // passes over the shrinking forest
};

/// Layout construction for forests by repeated pruning. Each pass works on
/// a snapshot of the remaining forest: a component of order <= 2
/// contributes its lowest vertex, a larger component contributes all its
/// leaves; then every leaf, stem (neighbour of a leaf) and isolated vertex
/// of the snapshot is removed at once. p equals the deduction number of
/// the forest, and the layout is successful; both facts are exercised in
/// the test suite.
PruneResult prune(const Graph& t);

}  // namespace deduct
