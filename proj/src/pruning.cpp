#include "deduct/pruning.hpp"

#include <algorithm>

#include "deduct/metrics.hpp"

namespace deduct {

PruneResult prune(const Graph& t) {
    if (!is_forest(t)) throw std::invalid_argument("input is not a forest");

    const int n = t.order();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    PruneResult out;

    int remaining = n;
    while (remaining > 0) {
        ++out.iterations;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            deg[v] = 0;
            for (Vertex w : t.neighbors(v)) deg[v] += alive[w];
        }

        // Components of the snapshot, via DFS over alive vertices.
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack, comp;
        for (Vertex s = 0; s < n; ++s) {
            if (!alive[s] || seen[s]) continue;
            comp.clear();
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (Vertex w : t.neighbors(v))
                    if (alive[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            if (comp.size() <= 2)
                out.layout.add(*std::min_element(comp.begin(), comp.end()));
            else
                for (Vertex v : comp)
                    if (deg[v] == 1) out.layout.add(v);
        }

        // Delete leaves, stems and isolated vertices, all judged against
        // the snapshot degrees.
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            bool drop = deg[v] <= 1;
            if (!drop)
                for (Vertex w : t.neighbors(v))
                    if (alive[w] && deg[w] == 1) {
                        drop = true;
                        break;
                    }
            if (drop) {
                alive[v] = 2;  // marked; degrees stay snapshot-valid
                --remaining;
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] == 2) alive[v] = 0;
    }

    out.p = out.layout.total();
    return out;
}

}  // namespace deduct
