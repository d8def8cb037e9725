#include "deduct/families.hpp"

#include <algorithm>
#include <numeric>

#include "deduct/metrics.hpp"
#include "deduct/solver.hpp"

namespace deduct {

namespace {

[[noreturn]] void no_closed_form() {
    throw std::invalid_argument("no closed form for this family");
}

// N-1 iff all parts are singletons (complete graph) or there are exactly
// two parts and one is a singleton; N-2 otherwise.
bool multipartite_full_case(const std::vector<int>& parts) {
    if (std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; })) return true;
    return parts.size() == 2 && (parts[0] == 1 || parts[1] == 1);
}

}  // namespace

int family_deduction_number(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    const int n = spec.n;
    switch (spec.kind) {
        case Kind::Path:
            if (n < 1) throw std::invalid_argument("path requires n >= 1");
            return (n + 1) / 2;
        case Kind::Cycle:
            if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
            return (n + 1) / 2;
        case Kind::Wheel:
            if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
            return n == 4 ? 3 : (n + 1) / 2;
        case Kind::Complete:
            if (n < 2) throw std::invalid_argument("complete graph requires n >= 2");
            return n - 1;
        case Kind::Star:
            if (n < 2) throw std::invalid_argument("star requires n >= 2");
            return n - 1;
        case Kind::Multipartite: {
            if (spec.parts.size() < 2)
                throw std::invalid_argument("multipartite requires at least 2 parts");
            const int total = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
            return multipartite_full_case(spec.parts) ? total - 1 : total - 2;
        }
        case Kind::Hypercube:
            if (spec.k < 1) throw std::invalid_argument("hypercube requires k >= 1");
            return 1 << (spec.k - 1);
        case Kind::RandomTree:
            no_closed_form();
    }
    no_closed_form();
}

Layout family_witness_layout(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    const int d = family_deduction_number(spec);  // also validates parameters
    const int n = spec.n;
    Layout w;
    switch (spec.kind) {
        case Kind::Path:
            // Even order: alternate from 0. Odd: 0 plus the odd positions.
            if (n % 2 == 0)
                for (int v = 0; v < n; v += 2) w.add(v);
            else {
                w.add(0);
                for (int v = 1; v < n - 1; v += 2) w.add(v);
            }
            break;
        case Kind::Cycle:
            // Two adjacent searchers split the cycle into a path; the rest
            // alternate along it, odd orders closing with the last vertex.
            w.add(0);
            w.add(1);
            if (n % 2 == 0)
                for (int v = 3; v <= n - 3; v += 2) w.add(v);
            else {
                for (int v = 3; v <= n - 4; v += 2) w.add(v);
                if (n >= 5) w.add(n - 1);
            }
            break;
        case Kind::Wheel:
            // Hub 0, rim 1..n-1. All searchers sit on the rim; one rim run
            // fires into the hub first, then the stragglers fan out.
            if (n == 4) {
                w.add(0);
                w.add(1);
                w.add(2);
            } else if (n % 2 == 1) {
                w.add(1);
                for (int v = 2; v <= n - 5; v += 2) w.add(v);
                w.add(n - 2);
                w.add(n - 1);
            } else {
                for (int v = 1; v <= n - 5; v += 2) w.add(v);
                w.add(n - 2);
                w.add(n - 1);
            }
            break;
        case Kind::Complete:
        case Kind::Star:
            for (int v = 0; v + 1 < n; ++v) w.add(v);
            break;
        case Kind::Multipartite: {
            const int total = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
            if (multipartite_full_case(spec.parts)) {
                for (int v = 0; v + 1 < total; ++v) w.add(v);
                break;
            }
            // Leave empty one vertex u in a part of size >= 2 and one
            // vertex v in some other part; everyone else is occupied.
            int first = 0, u = -1, v = -1;
            for (size_t i = 0; i < spec.parts.size() && v < 0; ++i) {
                if (u < 0 && spec.parts[i] >= 2)
                    u = first;
                else if (u >= 0)
                    v = first;
                first += spec.parts[i];
            }
            if (v < 0) v = 0;  // the size->=2 part came last; any earlier part works
            for (int x = 0; x < total; ++x)
                if (x != u && x != v) w.add(x);
            break;
        }
        case Kind::Hypercube:
            // The whole bottom face: each vertex there has exactly one
            // unoccupied neighbour, directly above.
            for (int v = 0; v < (1 << (spec.k - 1)); ++v) w.add(v);
            break;
        case Kind::RandomTree:
            no_closed_form();
    }
    if (w.total() != d) throw std::logic_error("witness size does not match the closed form");
    return w;
}

FamilyAnswer family_answer(const FamilySpec& spec) {
    return {spec, family_deduction_number(spec), family_witness_layout(spec)};
}

long long product_upper_bound(long long size_g, long long d_g, long long size_h, long long d_h) {
    if (size_g < 1 || d_g < 1 || size_h < 1 || d_h < 1)
        throw std::invalid_argument("product bound arguments must be >= 1");
    return std::min(size_g * d_h, size_h * d_g);
}

int join_bound(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("join bound arguments must be >= 1");
    return d1 + d2;
}

std::optional<int> cut_vertex_upper_bound(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("cut vertex bound requires order >= 3");
    const auto cuts = find_cut_vertices(g);
    std::optional<int> best;
    std::vector<Vertex> rest;
    for (Vertex u : cuts) {
        rest.clear();
        for (Vertex v = 0; v < g.order(); ++v)
            if (v != u) rest.push_back(v);
        const SolveResult parts = solve(induced_subgraph(g, rest));
        const int bound = 1 + parts.d;
        if (!best || bound < *best) best = bound;
    }
    return best;
}

}  // namespace deduct
