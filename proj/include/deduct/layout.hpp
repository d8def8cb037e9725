#pragma once

#include <map>
#include <string>

#include "deduct/graph.hpp"

namespace deduct {

/// Multiset of searcher positions. Only vertices holding at least one
/// searcher appear; counts are strictly positive.
class Layout {
public:
    Layout() = default;

    /// From vertex -> count entries; zero counts are dropped, negatives rejected.
    explicit Layout(const std::map<Vertex, int>& counts);

    int total() const;
    int count(Vertex v) const;
    bool occupied(Vertex v) const { return counts_.count(v) != 0; }

    /// Occupied vertices in increasing order.
    std::vector<Vertex> support() const;

    void add(Vertex v, int k = 1);

    /// At most one searcher per vertex.
    bool is_standard() const;

    const std::map<Vertex, int>& counts() const { return counts_; }

    bool operator==(const Layout&) const = default;
    bool operator<(const Layout& o) const { return counts_ < o.counts_; }

private:
    std::map<Vertex, int> counts_;
};

/// Parse "v[:k](,v[:k])*", e.g. "0,2:3,5". Repeating a vertex accumulates.
/// Every vertex must lie in [0, n); counts must be >= 1.
Layout parse_layout(const std::string& text, int n);

/// Inverse of parse_layout: "v" for count 1, "v:k" otherwise, increasing v,
/// comma separated. The empty layout prints as "".
std::string format_layout(const Layout& layout);

}  // namespace deduct
