#pragma once

#include "phee/adap_saa.hpp"
#include "phee/graph.hpp"
#include "phee/rand_rde.hpp"
#include "phee/ranking.hpp"

namespace phee {

// Full pipeline configuration: ranking -> evolutionary candidate search ->
// annealing refinement. The EDV activation probability lives in rde and is
// shared by the annealing stage.
struct PheeParams {
    RankingParams ranking;
    RdeParams rde;
    SaaParams saa;
    std::uint64_t master_seed = 0;
};

struct PheeResult {
    CandidateSet csset;
    SaaResult saa;
    const std::vector<VertexId>& seed_set() const { return saa.seed_set; }
};

// Deterministic end-to-end run: the evolutionary stage consumes stream
// (master_seed, 0) and the annealing stage stream (master_seed, 1).
PheeResult run_phee(const Graph& g, const PheeParams& params);

} // namespace phee
