#include "phee/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace phee {

void Graph::build_csr(std::size_t n,
                      std::vector<std::pair<VertexId, VertexId>>& arcs,
                      std::vector<std::size_t>& offsets,
                      std::vector<VertexId>& targets) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    offsets.assign(n + 1, 0);
    for (const auto& [u, v] : arcs) offsets[u + 1]++;
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(arcs.size());
    std::size_t idx = 0;
    for (const auto& [u, v] : arcs) targets[idx++] = v;
}

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<VertexId, VertexId>>& edges,
                        bool directed,
                        std::vector<std::int64_t> labels) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    if (n > static_cast<std::size_t>(UINT32_MAX))
        throw std::invalid_argument("vertex count exceeds id space");

    Graph g;
    g.n_ = n;
    g.directed_ = directed;

    std::vector<std::pair<VertexId, VertexId>> arcs;
    arcs.reserve(edges.size() * (directed ? 1 : 2));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) continue; // invariant: no self-loops
        arcs.emplace_back(u, v);
        if (!directed) arcs.emplace_back(v, u);
    }

    build_csr(n, arcs, g.out_offsets_, g.out_targets_);

    if (directed) {
        std::vector<std::pair<VertexId, VertexId>> rev;
        rev.reserve(g.out_targets_.size());
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : g.out_neighbors(u)) rev.emplace_back(v, u);
        build_csr(n, rev, g.in_offsets_, g.in_targets_);

        std::vector<std::pair<VertexId, VertexId>> undirected;
        undirected.reserve(2 * g.out_targets_.size());
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : g.out_neighbors(u)) {
                undirected.emplace_back(u, v);
                undirected.emplace_back(v, u);
            }
        build_csr(n, undirected, g.union_offsets_, g.union_targets_);
        g.m_ = g.out_targets_.size();
    } else {
        g.m_ = g.out_targets_.size() / 2;
    }

    if (labels.empty()) {
        g.labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.labels_[i] = static_cast<std::int64_t>(i);
    } else {
        if (labels.size() != n) throw std::invalid_argument("labels size mismatch");
        g.labels_ = std::move(labels);
    }
    g.label_index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = g.label_index_.emplace(g.labels_[i], static_cast<VertexId>(i));
        if (!fresh) throw std::invalid_argument("duplicate vertex label");
    }
    return g;
}

std::span<const VertexId> Graph::out_neighbors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const VertexId> Graph::in_neighbors(VertexId v) const {
    if (!directed_) return out_neighbors(v);
    return {in_targets_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (!directed_) return out_neighbors(v);
    return {union_targets_.data() + union_offsets_[v], union_offsets_[v + 1] - union_offsets_[v]};
}

std::span<const VertexId> Graph::neighbors(VertexId v, EdgeView view) const {
    switch (view) {
        case EdgeView::Out: return out_neighbors(v);
        case EdgeView::In: return in_neighbors(v);
        default: return neighbors(v);
    }
}

bool Graph::has_out_edge(VertexId u, VertexId v) const {
    const auto nb = out_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> Graph::internal_id(std::int64_t original) const {
    const auto it = label_index_.find(original);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

DeletionOverlay::DeletionOverlay(const Graph& g)
    : g_(&g), deleted_(g.vertex_count(), 0), live_degree_(g.vertex_count()), live_(g.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        live_degree_[v] = static_cast<std::uint32_t>(g.degree(v));
}

void DeletionOverlay::erase(VertexId v) {
    if (v >= deleted_.size()) throw std::out_of_range("overlay erase: bad vertex");
    if (deleted_[v]) throw std::logic_error("overlay erase: vertex already deleted");
    deleted_[v] = 1;
    --live_;
    for (VertexId u : g_->neighbors(v))
        if (!deleted_[u]) --live_degree_[u];
    live_degree_[v] = 0;
}

std::vector<std::pair<VertexId, std::uint32_t>>
bfs_within(const Graph& g, VertexId source, std::uint32_t radius, EdgeView view) {
    if (source >= g.vertex_count()) throw std::out_of_range("bfs source out of range");
    std::vector<std::pair<VertexId, std::uint32_t>> result;
    std::vector<std::uint32_t> dist(g.vertex_count(), UINT32_MAX);
    std::queue<VertexId> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const VertexId u = frontier.front();
        frontier.pop();
        if (dist[u] == radius) continue;
        for (VertexId v : g.neighbors(u, view)) {
            if (dist[v] != UINT32_MAX) continue;
            dist[v] = dist[u] + 1;
            result.emplace_back(v, dist[v]);
            frontier.push(v);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return result;
}

} // namespace phee
