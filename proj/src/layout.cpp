#include "deduct/layout.hpp"

#include <numeric>
#include <sstream>

namespace deduct {

Layout::Layout(const std::map<Vertex, int>& counts) {
    for (auto [v, k] : counts) {
        if (k < 0) throw std::invalid_argument("negative searcher count");
        if (k > 0) counts_[v] = k;
    }
}

int Layout::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0,
                           [](int acc, const auto& e) { return acc + e.second; });
}

int Layout::count(Vertex v) const {
    auto it = counts_.find(v);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<Vertex> Layout::support() const {
    std::vector<Vertex> out;
    out.reserve(counts_.size());
    for (auto& [v, k] : counts_) out.push_back(v);
    return out;
}

void Layout::add(Vertex v, int k) {
    if (k < 0) throw std::invalid_argument("negative searcher count");
    if (k > 0) counts_[v] += k;
}

bool Layout::is_standard() const {
    for (auto& [v, k] : counts_)
        if (k != 1) return false;
    return true;
}

Layout parse_layout(const std::string& text, int n) {
    Layout layout;
    std::istringstream in(text);
    std::string item;
    bool any = false;
    while (std::getline(in, item, ',')) {
        any = true;
        const auto colon = item.find(':');
        const std::string vtext = item.substr(0, colon);
        long v = -1, k = 1;
        try {
            size_t pos = 0;
            v = std::stol(vtext, &pos);
            if (pos != vtext.size()) throw std::invalid_argument(vtext);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad layout entry \"" + item + "\": vertex expected");
        }
        if (colon != std::string::npos) {
            const std::string ktext = item.substr(colon + 1);
            try {
                size_t pos = 0;
                k = std::stol(ktext, &pos);
                if (pos != ktext.size()) throw std::invalid_argument(ktext);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad layout entry \"" + item + "\": count expected");
            }
        }
        if (v < 0 || v >= n)
            throw std::invalid_argument("layout vertex " + std::to_string(v) +
                                        " out of range [0, " + std::to_string(n) + ")");
        if (k < 1)
            throw std::invalid_argument("layout count for vertex " + std::to_string(v) +
                                        " must be >= 1");
        layout.add(static_cast<Vertex>(v), static_cast<int>(k));
    }
    if (!any && !text.empty())
        throw std::invalid_argument("bad layout \"" + text + "\"");
    return layout;
}

std::string format_layout(const Layout& layout) {
    std::ostringstream out;
    bool first = true;
    for (auto& [v, k] : layout.counts()) {
        if (!first) out << ',';
        first = false;
        out << v;
        if (k != 1) out << ':' << k;
    }
    return out.str();
}

}  // namespace deduct
