#pragma once

#include <vector>

#include "deduct/graph.hpp"
#include "deduct/layout.hpp"

namespace deduct {

struct Move {
    int stage = 0;  // 1-based
    Vertex from = 0;
    Vertex to = 0;
    bool operator==(const Move&) const = default;
};

struct StageRecord {
    int index = 0;  // 1-based
    std::vector<Move> moves;
    std::vector<Vertex> flummoxed;        // kept mobile searchers, short of their targets
    std::vector<Vertex> protected_after;  // sorted, cumulative
};

struct GameTrace {
    int n = 0;
    Layout layout;
    std::vector<StageRecord> stages;
    bool success = false;
    Layout terminal;
    std::vector<Vertex> protected_final;
    std::vector<Vertex> motionless;  // vertices holding a searcher that never moved
};

/// Thrown by operations that are only defined for successful layouts.
class UnsuccessfulLayoutError : public std::runtime_error {
public:
    explicit UnsuccessfulLayoutError(const std::string& what) : std::runtime_error(what) {}
};

/// Reusable simulation state for one graph. The success predicates share the
/// stage loop with the trace builder, so they cannot drift apart; they skip
/// recording and stop as soon as the outcome is decided.
///
/// Game rules: a vertex is protected once occupied at start or visited.
/// Each stage, against the stage-start protected set, every vertex whose
/// unmoved searchers number at least its unprotected neighbours (and that
/// has at least one) sends one searcher to each unprotected neighbour; all
/// arrivals are permanently immobile; excess searchers stay put for good.
/// Vertices with fewer unmoved searchers than unprotected neighbours are
/// flummoxed and retry next stage. The game ends at the first stage with no
/// moves; the searchers win if every vertex is protected.
class Simulator {
public:
    explicit Simulator(const Graph& g);

    /// Does the standard layout on this sorted vertex subset win?
    bool subset_succeeds(const Vertex* vs, int k);
    bool subset_succeeds(const std::vector<Vertex>& vs) {
        return subset_succeeds(vs.data(), static_cast<int>(vs.size()));
    }

    /// Does the layout with counts[v] searchers on v win? counts.size() = n.
    bool counts_succeed(const std::vector<int>& counts);

    GameTrace run(const Layout& layout);

    const Graph& graph() const { return *g_; }

private:
    void load_support(const std::vector<Vertex>& support);
    bool drive(GameTrace* trace);

    const Graph* g_;
    std::vector<int> mobile_;      // unmoved searchers still on each vertex
    std::vector<int> count_;       // all searchers on each vertex (trace runs only)
    std::vector<int> prot_epoch_;  // protected iff == epoch_
    std::vector<Vertex> active_;   // sorted; occupied vertices that may still fire
    std::vector<Vertex> newly_;    // arrival targets of the current stage
    std::vector<Vertex> flum_;
    std::vector<Move> moves_;
    int epoch_ = 0;
    int protected_count_ = 0;
};

/// One-shot simulation.
GameTrace simulate(const Graph& g, const Layout& layout);

/// The layout of final searcher positions after playing from `layout`.
/// Defined only for successful layouts; throws UnsuccessfulLayoutError.
Layout terminal_layout(const Graph& g, const Layout& layout);

/// Relocate the searchers on stem s (a vertex adjacent to a leaf) to the
/// targets they reach when playing from `layout`; searchers beyond the
/// target count go to leaves adjacent to s, lowest labels first, cycling if
/// they outnumber the leaves. Requires a tree of order >= 3, s occupied and
/// a stem, and `layout` successful. The result leaves s unoccupied, has the
/// same total, and is verified to be successful.
Layout destem(const Graph& g, const Layout& layout, Vertex s);

}  // namespace deduct
