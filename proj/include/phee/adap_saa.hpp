#pragma once

#include "phee/graph.hpp"
#include "phee/rand_rde.hpp"
#include "phee/rng.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace phee {

struct SaaParams {
    double initial_temperature = 2000.0;
    double final_temperature = 10.0;
    double cooling_coefficient = 5.0; // theta
    std::uint32_t moves_per_level = 15;
    // Floor applied to the per-level temperature drop so a level that ends
    // right after an improving move (r = 0, theta*ln(1) = 0) still cools.
    // <= 0 selects the default theta * ln(2).
    double min_decrement = 0.0;
    std::uint64_t max_levels = 100000;

    void validate() const;
    double effective_min_decrement() const {
        return min_decrement > 0.0 ? min_decrement : cooling_coefficient * std::log(2.0);
    }
};

// Temperature drop after a level that ended with rejection counter r.
inline double cooling_decrement(double theta, std::uint64_t r, double min_decrement) {
    return std::max(theta * std::log(static_cast<double>(r) + 1.0), min_decrement);
}

// Greedy max-degree peel: k times pick the live vertex of maximum live
// degree (ties ascending id), then delete it and its incident edges.
// Requires 1 <= k <= n. Result in pick order.
std::vector<VertexId> construct_ss(const Graph& g, std::uint32_t k);

struct SaaMoveEvent {
    std::uint64_t level;
    std::uint32_t move;     // 0-based within the level
    double candidate_edv;
    double current_edv;     // after accept/reject
    bool accepted;
};
using SaaObserver = std::function<void(const SaaMoveEvent&)>;

struct SaaResult {
    std::vector<VertexId> seed_set;
    double edv = 0.0;          // EDV of seed_set
    double initial_edv = 0.0;  // EDV of the construct_ss start
    std::uint64_t levels = 0;
    std::uint64_t accepted_moves = 0;
    // Set when a move found no candidate (csset minus the current set was
    // empty); the search stops early and returns the current set.
    bool moves_exhausted = false;
};

// Simulated-annealing refinement over the candidate set. Per temperature
// level, moves_per_level swap attempts: draw a uniform candidate from
// csset \ S (rejection draws first), then a uniform victim slot; accept on
// strict EDV improvement (r resets to 0), otherwise r grows. The level ends
// with T -= cooling_decrement(theta, r, min_decrement); r carries across
// levels. Stops when T <= final_temperature or max_levels is hit. Strict
// improvement means the returned set is also the best one seen.
SaaResult adap_saa(const Graph& g, const CandidateSet& csset, std::uint32_t k,
                   const SaaParams& params, double activation_probability, Rng& rng,
                   const SaaObserver& observer = {});

} // namespace phee
