#pragma once

#include "phee/graph.hpp"

#include <functional>
#include <span>
#include <vector>

namespace phee {

enum class RankMethod { Mdd, Gci, KShell, Degree };

// Permutation of all vertices, strongest candidate first. scores is indexed
// by vertex id and is non-increasing along `order`. On directed graphs every
// ranking works on the union neighborhood so all inputs are rankable.
struct VertexOrdering {
    std::vector<VertexId> order;
    std::vector<double> scores;
    RankMethod method = RankMethod::Degree;
};

// Classic k-core shell number per vertex (bucket peel, O(m + n)).
std::vector<std::uint32_t> kshell_decompose(const Graph& g);

// One peeling batch of the mixed-degree decomposition, reported before the
// batch is deleted. `removed` is ascending by id; `live` holds every not yet
// deleted vertex (including the batch) with its current mixed degree.
// Only materialized when an observer is attached.
struct MddBatchEvent {
    double level;
    std::span<const VertexId> removed;
    std::span<const std::pair<VertexId, double>> live;
};
using MddObserver = std::function<void(const MddBatchEvent&)>;

// Mixed-degree decomposition: peel batches of minimal mixed degree
//   k_m(v) = k_live(v) + lambda * k_removed(v),
// raising the threshold by 1 when no vertex qualifies; the ordering is the
// reverse of the removal sequence. scores[v] = threshold at v's removal.
// Ties inside a batch are recorded in ascending id order.
VertexOrdering sortv_mdd(const Graph& g, double lambda,
                         const MddObserver& observer = {});

// Gravity centrality: G(v) = sum over u within `radius` hops of
// shell(v) * shell(u) / dist(v,u)^2. num_threads 0 -> default.
VertexOrdering sortv_gci(const Graph& g, std::uint32_t radius = 3,
                         unsigned num_threads = 0);

// Degree ranking (union degree). Ties ascending id, like every ordering here.
VertexOrdering sortv_degree(const Graph& g);

// Shell-number ranking.
VertexOrdering sortv_kshell(const Graph& g);

struct RankingParams {
    RankMethod method = RankMethod::Mdd;
    double mdd_lambda = 0.7;
    std::uint32_t gci_radius = 3;
};

VertexOrdering rank_vertices(const Graph& g, const RankingParams& params);

const char* rank_method_name(RankMethod method);
// Accepts "mdd", "gci", "kshell", "degree"; throws otherwise.
RankMethod parse_rank_method(const std::string& name);

} // namespace phee
