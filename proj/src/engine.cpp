#include "deduct/engine.hpp"

#include <algorithm>

#include "deduct/metrics.hpp"

namespace deduct {

Simulator::Simulator(const Graph& g)
    : g_(&g),
      mobile_(g.order(), 0),
      count_(g.order(), 0),
      prot_epoch_(g.order(), 0) {}

void Simulator::load_support(const std::vector<Vertex>& support) {
    ++epoch_;
    active_ = support;
    for (Vertex v : support) prot_epoch_[v] = epoch_;
    protected_count_ = static_cast<int>(support.size());
}

bool Simulator::subset_succeeds(const Vertex* vs, int k) {
    ++epoch_;
    active_.assign(vs, vs + k);
    for (int i = 0; i < k; ++i) {
        mobile_[vs[i]] = 1;
        prot_epoch_[vs[i]] = epoch_;
    }
    protected_count_ = k;
    return drive(nullptr);
}

bool Simulator::counts_succeed(const std::vector<int>& counts) {
    ++epoch_;
    active_.clear();
    protected_count_ = 0;
    for (Vertex v = 0; v < g_->order(); ++v)
        if (counts[v] > 0) {
            active_.push_back(v);
            mobile_[v] = counts[v];
            prot_epoch_[v] = epoch_;
            ++protected_count_;
        }
    return drive(nullptr);
}

GameTrace Simulator::run(const Layout& layout) {
    GameTrace trace;
    trace.n = g_->order();
    trace.layout = layout;

    const auto support = layout.support();
    for (Vertex v : support) {
        if (v < 0 || v >= g_->order())
            throw std::invalid_argument("layout vertex " + std::to_string(v) + " out of range");
    }
    load_support(support);
    std::fill(count_.begin(), count_.end(), 0);
    for (auto& [v, k] : layout.counts()) {
        mobile_[v] = k;
        count_[v] = k;
    }

    trace.success = drive(&trace);
    for (Vertex v = 0; v < g_->order(); ++v) {
        if (prot_epoch_[v] == epoch_) trace.protected_final.push_back(v);
        if (count_[v] > 0) trace.terminal.add(v, count_[v]);
    }
    for (Vertex v : support)
        if (count_[v] > 0) trace.motionless.push_back(v);
    return trace;
}

bool Simulator::drive(GameTrace* trace) {
    const int n = g_->order();
    for (int stage = 1;; ++stage) {
        newly_.clear();
        flum_.clear();
        if (trace) moves_.clear();

        // active_ is sorted; one pass both fires and compacts. Protection
        // updates are deferred to stage end, so every vertex sees the
        // stage-start snapshot.
        size_t keep = 0;
        for (size_t i = 0; i < active_.size(); ++i) {
            const Vertex v = active_[i];
            int unprot = 0;
            for (Vertex w : g_->neighbors(v))
                if (prot_epoch_[w] != epoch_) ++unprot;
            if (unprot == 0) continue;  // all neighbours protected: done for good
            if (unprot <= mobile_[v]) {
                for (Vertex w : g_->neighbors(v))
                    if (prot_epoch_[w] != epoch_) {
                        newly_.push_back(w);
                        if (trace) {
                            moves_.push_back({stage, v, w});
                            ++count_[w];
                        }
                    }
                if (trace) count_[v] -= unprot;
                mobile_[v] = 0;
            } else {
                flum_.push_back(v);
                active_[keep++] = v;
            }
        }
        active_.resize(keep);

        if (newly_.empty()) {
            // Stalled. A stage in which searchers only sit flummoxed is
            // still part of the story; a silent all-done stage is not.
            if (trace && !flum_.empty()) {
                StageRecord rec;
                rec.index = stage;
                rec.flummoxed = flum_;
                for (Vertex v = 0; v < n; ++v)
                    if (prot_epoch_[v] == epoch_) rec.protected_after.push_back(v);
                trace->stages.push_back(std::move(rec));
            }
            break;
        }

        for (Vertex w : newly_)
            if (prot_epoch_[w] != epoch_) {
                prot_epoch_[w] = epoch_;
                ++protected_count_;
            }
        if (trace) {
            StageRecord rec;
            rec.index = stage;
            rec.moves = moves_;
            rec.flummoxed = flum_;
            for (Vertex v = 0; v < n; ++v)
                if (prot_epoch_[v] == epoch_) rec.protected_after.push_back(v);
            trace->stages.push_back(std::move(rec));
        } else if (protected_count_ == n) {
            return true;  // protection is monotone; the outcome is decided
        }
    }
    return protected_count_ == n;
}

GameTrace simulate(const Graph& g, const Layout& layout) {
    Simulator sim(g);
    return sim.run(layout);
}

Layout terminal_layout(const Graph& g, const Layout& layout) {
    GameTrace trace = simulate(g, layout);
    if (!trace.success)
        throw UnsuccessfulLayoutError("terminal layout undefined: layout " +
                                      format_layout(layout) + " is unsuccessful");
    return trace.terminal;
}

Layout destem(const Graph& g, const Layout& layout, Vertex s) {
    if (!is_tree(g) || g.order() < 3)
        throw std::invalid_argument("destem requires a tree of order >= 3");
    if (s < 0 || s >= g.order())
        throw std::invalid_argument("stem vertex out of range");
    std::vector<Vertex> adjacent_leaves;
    for (Vertex w : g.neighbors(s))
        if (g.degree(w) == 1) adjacent_leaves.push_back(w);
    if (adjacent_leaves.empty())
        throw std::invalid_argument("vertex " + std::to_string(s) + " is not a stem");
    if (layout.count(s) == 0)
        throw std::invalid_argument("stem " + std::to_string(s) + " is unoccupied");

    GameTrace trace = simulate(g, layout);
    if (!trace.success)
        throw std::invalid_argument("destem requires a successful layout");

    std::vector<Vertex> targets;
    for (const auto& rec : trace.stages)
        for (const auto& mv : rec.moves)
            if (mv.from == s) targets.push_back(mv.to);

    Layout out;
    for (auto& [v, k] : layout.counts())
        if (v != s) out.add(v, k);
    for (Vertex t : targets) out.add(t);
    const int excess = layout.count(s) - static_cast<int>(targets.size());
    for (int i = 0; i < excess; ++i)
        out.add(adjacent_leaves[i % adjacent_leaves.size()]);

    if (!simulate(g, out).success)
        throw std::logic_error("destem produced an unsuccessful layout");
    return out;
}

}  // namespace deduct
