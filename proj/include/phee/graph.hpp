#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phee {

using VertexId = std::uint32_t;

enum class EdgeView { Out, In, Union };

// Immutable graph in CSR form. Invariants: no self-loops, no duplicate
// edges, adjacency lists sorted ascending. For undirected graphs each edge
// is stored in both endpoint lists and edge_count() counts it once. For
// directed graphs a merged undirected "union" adjacency is precomputed; the
// structural rankings operate on that view while diffusion follows out-edges.
class Graph {
public:
    // edges hold internal ids in [0, n). Self-loops and duplicates are
    // dropped (they violate the invariant; the loader counts them before
    // calling this). labels: original external id per vertex; empty -> 0..n-1.
    static Graph from_edges(std::size_t n,
                            const std::vector<std::pair<VertexId, VertexId>>& edges,
                            bool directed,
                            std::vector<std::int64_t> labels = {});

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    bool directed() const { return directed_; }

    std::span<const VertexId> out_neighbors(VertexId v) const;
    std::span<const VertexId> in_neighbors(VertexId v) const;
    // Union of in/out neighborhoods (== out_neighbors when undirected).
    std::span<const VertexId> neighbors(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v, EdgeView view) const;

    std::size_t out_degree(VertexId v) const { return out_neighbors(v).size(); }
    std::size_t in_degree(VertexId v) const { return in_neighbors(v).size(); }
    // Union degree; the degree used by every ranking.
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool has_out_edge(VertexId u, VertexId v) const;

    std::int64_t original_id(VertexId v) const { return labels_[v]; }
    const std::vector<std::int64_t>& original_ids() const { return labels_; }
    std::optional<VertexId> internal_id(std::int64_t original) const;

private:
    Graph() = default;

    static void build_csr(std::size_t n,
                          std::vector<std::pair<VertexId, VertexId>>& arcs,
                          std::vector<std::size_t>& offsets,
                          std::vector<VertexId>& targets);

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    bool directed_ = false;

    std::vector<std::size_t> out_offsets_;
    std::vector<VertexId> out_targets_;
    std::vector<std::size_t> in_offsets_;   // directed only
    std::vector<VertexId> in_targets_;
    std::vector<std::size_t> union_offsets_; // directed only
    std::vector<VertexId> union_targets_;

    std::vector<std::int64_t> labels_;
    std::unordered_map<std::int64_t, VertexId> label_index_;
};

// Simulated vertex deletion for the peeling algorithms: O(1) deleted checks,
// live degrees maintained over the union view. Never mutates the graph.
class DeletionOverlay {
public:
    explicit DeletionOverlay(const Graph& g);

    bool deleted(VertexId v) const { return deleted_[v] != 0; }
    std::uint32_t live_degree(VertexId v) const { return live_degree_[v]; }
    std::size_t live_count() const { return live_; }

    // Marks v deleted and decrements live neighbors' degrees.
    // Deleting twice is a logic error and throws.
    void erase(VertexId v);

private:
    const Graph* g_;
    std::vector<std::uint8_t> deleted_;
    std::vector<std::uint32_t> live_degree_;
    std::size_t live_;
};

// Vertices u != source with shortest-path distance <= radius, paired with
// their exact distance, sorted by (distance, id). Isolated source -> empty.
std::vector<std::pair<VertexId, std::uint32_t>>
bfs_within(const Graph& g, VertexId source, std::uint32_t radius,
           EdgeView view = EdgeView::Out);

} // namespace phee
