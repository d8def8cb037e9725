#include "deduct/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "deduct/metrics.hpp"

namespace deduct {

BoundsReport bounds(const Graph& g) {
    const int n = g.order();
    BoundsReport b;
    b.half_ceil = (n + 1) / 2;
    b.min_degree = g.degree(0);
    int leaves = 0;
    for (Vertex v = 0; v < n; ++v) {
        b.min_degree = std::min(b.min_degree, g.degree(v));
        if (g.degree(v) == 1) ++leaves;
    }
    b.clique_bound = max_clique_size(g) - 1;
    b.edge_cover_bound = n - max_matching_size(g);

    const auto comps = connected_components(g);
    if (comps.size() == 1 && n >= 3) b.leaf_bound = leaves;

    b.lower = std::max({b.half_ceil, b.min_degree, b.clique_bound, b.edge_cover_bound,
                        b.leaf_bound.value_or(0)});
    b.upper = 0;
    for (const auto& comp : comps)
        b.upper += comp.size() >= 2 ? static_cast<int>(comp.size()) - 1 : 1;
    return b;
}

int effective_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DEDUCT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > UINT64_MAX / static_cast<std::uint64_t>(n - k + i))
            throw std::overflow_error("binomial overflow");
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

bool next_combination(std::vector<Vertex>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

namespace {

struct LevelHit {
    std::uint64_t rank;  // 0-based within the level
    std::vector<Vertex> subset;
};

// Scan size-k subsets in lexicographic order; first success wins.
std::optional<LevelHit> scan_level_serial(const Graph& g, int k) {
    Simulator sim(g);
    std::vector<Vertex> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    std::uint64_t rank = 0;
    do {
        if (sim.subset_succeeds(c.data(), k)) return LevelHit{rank, c};
        ++rank;
    } while (next_combination(c, g.order()));
    return std::nullopt;
}

#ifdef _OPENMP

// Same scan, batched: fill a buffer of candidates, test the batch in
// parallel, take the lowest in-batch index. Batches run in order, so the
// winner equals the serial one whatever the thread count.
std::optional<LevelHit> scan_level_parallel(const Graph& g, int k, int threads, int chunk) {
    const int n = g.order();
    std::vector<Vertex> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    std::vector<Vertex> buf;
    buf.reserve(static_cast<size_t>(chunk) * k);
    std::uint64_t base = 0;
    bool exhausted = false;
    while (!exhausted) {
        buf.clear();
        int count = 0;
        while (count < chunk) {
            buf.insert(buf.end(), c.begin(), c.end());
            ++count;
            if (!next_combination(c, n)) {
                exhausted = true;
                break;
            }
        }
        long long best = count;
#pragma omp parallel num_threads(threads) reduction(min : best)
        {
            Simulator sim(g);
#pragma omp for schedule(static)
            for (int i = 0; i < count; ++i)
                if (sim.subset_succeeds(&buf[static_cast<size_t>(i) * k], k))
                    best = std::min<long long>(best, i);
        }
        if (best < count) {
            const Vertex* hit = &buf[static_cast<size_t>(best) * k];
            return LevelHit{base + static_cast<std::uint64_t>(best),
                            std::vector<Vertex>(hit, hit + k)};
        }
        base += static_cast<std::uint64_t>(count);
    }
    return std::nullopt;
}

#endif  // _OPENMP

// g connected (or a single vertex). Searches levels lower..upper; the
// upper level always contains a success, so this returns.
ComponentSolve solve_connected(const Graph& g, const SolveOptions& opt) {
    const BoundsReport b = bounds(g);
    const int n = g.order();
    ComponentSolve out;
    std::uint64_t tested = 0;
    for (int k = b.lower; k <= b.upper; ++k) {
        std::optional<LevelHit> hit;
#ifdef _OPENMP
        const int threads = effective_thread_count(opt.threads);
        if (threads > 1)
            hit = scan_level_parallel(g, k, threads, std::max(opt.chunk, 1));
        else
            hit = scan_level_serial(g, k);
#else
        (void)opt;
        hit = scan_level_serial(g, k);
#endif
        if (hit) {
            out.d = k;
            for (Vertex v : hit->subset) out.witness.add(v);
            out.layouts_tested = tested + hit->rank + 1;
            return out;
        }
        tested += binomial(n, k);
    }
    throw std::logic_error("subset search exhausted without a successful layout");
}

SolveResult assemble(const Graph& g,
                     const std::function<ComponentSolve(const Graph&)>& solve_comp) {
    const auto comps = connected_components(g);
    SolveResult res;
    if (comps.size() == 1) {
        ComponentSolve cs = solve_comp(g);
        res.d = cs.d;
        res.witness = cs.witness;
        res.layouts_tested = cs.layouts_tested;
        return res;
    }
    for (const auto& comp : comps) {
        ComponentSolve cs = solve_comp(induced_subgraph(g, comp));
        ComponentSolve mapped;
        mapped.vertices = comp;
        mapped.d = cs.d;
        mapped.layouts_tested = cs.layouts_tested;
        for (auto& [local, count] : cs.witness.counts()) mapped.witness.add(comp[local], count);
        res.d += mapped.d;
        res.layouts_tested += mapped.layouts_tested;
        for (auto& [v, count] : mapped.witness.counts()) res.witness.add(v, count);
        res.per_component.push_back(std::move(mapped));
    }
    return res;
}

}  // namespace

SolveResult solve(const Graph& g, const SolveOptions& options) {
    return assemble(g, [&](const Graph& comp) { return solve_connected(comp, options); });
}

int solve_multiset_oracle(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw std::invalid_argument("multiset oracle supports order <= 8");
    if (n == 1) return 1;

    Simulator sim(g);
    std::vector<int> counts(n, 0);
    const int cap = n - 1;

    // All count vectors with the given remaining total over vertices v..n-1.
    auto place = [&](auto&& self, int v, int remaining) -> bool {
        if (v == n - 1) {
            if (remaining > cap) return false;
            counts[v] = remaining;
            const bool ok = sim.counts_succeed(counts);
            counts[v] = 0;
            return ok;
        }
        for (int c = 0; c <= std::min(cap, remaining); ++c) {
            counts[v] = c;
            if (self(self, v + 1, remaining - c)) {
                counts[v] = 0;
                return true;
            }
        }
        counts[v] = 0;
        return false;
    };

    for (int total = 1; total <= n; ++total)
        if (place(place, 0, total)) return total;
    throw std::logic_error("no successful layout found at any total up to n");
}

namespace reference {

SolveResult solve(const Graph& g) {
    return assemble(g, [](const Graph& comp) {
        const BoundsReport b = bounds(comp);
        ComponentSolve out;
        std::uint64_t tested = 0;
        for (int k = b.lower; k <= b.upper; ++k) {
            if (auto hit = scan_level_serial(comp, k)) {
                out.d = k;
                for (Vertex v : hit->subset) out.witness.add(v);
                out.layouts_tested = tested + hit->rank + 1;
                return out;
            }
            tested += binomial(comp.order(), k);
        }
        throw std::logic_error("subset search exhausted without a successful layout");
    });
}

}  // namespace reference

}  // namespace deduct
