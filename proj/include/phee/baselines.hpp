#pragma once

#include "phee/diffusion.hpp"
#include "phee/graph.hpp"
#include "phee/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace phee {

// Deterministic spread evaluator: must be a pure function of the seed set,
// independent of call order, or CELF and greedy lose their equivalence.
using SpreadOracle = std::function<double(std::span<const VertexId>)>;

// Live-edge enumeration oracle; tiny graphs only (see exact_spread).
SpreadOracle exact_oracle(const Graph& g, double p);

// Monte-Carlo oracle. The per-call seed is derived from the sorted seed set
// content and master_seed, so equal sets always score equally.
SpreadOracle monte_carlo_oracle(const Graph& g, double p, std::uint32_t runs,
                                std::uint64_t master_seed, unsigned num_threads = 0);

struct GreedyResult {
    std::vector<VertexId> seed_set;                    // pick order
    std::vector<std::pair<VertexId, double>> picks;    // (vertex, marginal gain)
    std::uint64_t evaluations = 0;                     // oracle calls
};

// Hill-climbing greedy: k rounds, each adding the vertex with the largest
// marginal gain (ties ascending id).
GreedyResult greedy_im(const Graph& g, std::uint32_t k, const SpreadOracle& oracle);

// Lazy-forward greedy: marginal gains kept in a priority queue (gain desc,
// id asc); stale entries (scored before the last pick) are re-evaluated and
// re-inserted. Picks identical to greedy_im under a deterministic oracle,
// with at most as many oracle calls.
GreedyResult celf_im(const Graph& g, std::uint32_t k, const SpreadOracle& oracle);

// Top-k by union degree, ties ascending id.
std::vector<VertexId> degree_topk(const Graph& g, std::uint32_t k);

// k distinct vertices drawn uniformly.
std::vector<VertexId> random_seed_set(const Graph& g, std::uint32_t k, Rng& rng);

} // namespace phee
