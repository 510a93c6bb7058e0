#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degseq/graphic.hpp"

namespace degseq {

/// Thrown by realize() when the input is not a degree sequence of any simple graph.
class NotGraphic : public std::domain_error {
public:
    /// failing_t == 0 means the sum is odd.
    NotGraphic(std::size_t failing_t, const std::string& what)
        : std::domain_error(what), failing_t_(failing_t) {}
    std::size_t failing_t() const noexcept { return failing_t_; }

private:
    std::size_t failing_t_;
};

/// Simple undirected graph on vertices 0..n-1 as a normalized edge list
/// (u < v, no duplicates).
class SimpleGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit SimpleGraph(std::size_t n) : n_(n) {}

    SimpleGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= n_ || v >= n_)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it != edges_.end() && *it == Edge{u, v})
            throw std::invalid_argument("duplicate edge");
        edges_.insert(it, Edge{u, v});
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<degree_t> degrees() const {
        std::vector<degree_t> deg(n_, 0);
        for (auto [u, v] : edges_) {
            ++deg[u];
            ++deg[v];
        }
        return deg;
    }

private:
    friend SimpleGraph realize(const DegreeSequence&);
    SimpleGraph(std::size_t n, std::vector<Edge>&& sorted_unique, int) : n_(n), edges_(std::move(sorted_unique)) {}

    std::size_t n_;
    std::vector<Edge> edges_;
};

/// Havel-Hakimi construction. Vertex i of the result has degree d[i].
/// Throws NotGraphic carrying the failing Erdos-Gallai index (0 for odd sum).
inline SimpleGraph realize(const DegreeSequence& d) {
    if (!d.even_sum())
        throw NotGraphic(0, "odd sum");
    if (auto t = first_eg_violation(d.values()))
        throw NotGraphic(*t, "Erdos-Gallai inequality fails at t=" + std::to_string(*t));

    const std::size_t n = d.size();
    struct Slot {
        degree_t residual;
        std::size_t vertex;
    };
    auto by_residual = [](const Slot& x, const Slot& y) {
        return x.residual != y.residual ? x.residual > y.residual : x.vertex < y.vertex;
    };

    std::vector<Slot> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = {d[i], i};
    std::sort(order.begin(), order.end(), by_residual);

    std::vector<SimpleGraph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(d.sum() / 2));
    auto first = order.begin();
    while (first != order.end() && first->residual > 0) {
        const Slot hub = *first++;
        const auto r = static_cast<std::size_t>(hub.residual);
        if (static_cast<std::size_t>(order.end() - first) < r)
            throw std::logic_error("Havel-Hakimi ran out of vertices on a graphic sequence");
        for (auto it = first; it != first + r; ++it) {
            if (it->residual == 0)
                throw std::logic_error("Havel-Hakimi hit a saturated vertex on a graphic sequence");
            --it->residual;
            edges.emplace_back(std::min(hub.vertex, it->vertex), std::max(hub.vertex, it->vertex));
        }
        // Both halves stay sorted; one merge restores the order in O(n).
        std::inplace_merge(first, first + r, order.end(), by_residual);
    }
    std::sort(edges.begin(), edges.end());
    return SimpleGraph(n, std::move(edges), 0);
}

} // namespace degseq
