#pragma once

#include "phee/diffusion.hpp"
#include "phee/graph.hpp"
#include "phee/ranking.hpp"
#include "phee/rng.hpp"

#include <cstdint>
#include <vector>

namespace phee {

struct RdeParams {
    std::uint32_t seed_set_size = 10;     // k
    std::uint32_t population_size = 10;   // pop
    std::uint32_t max_generations = 100;  // gmax
    double diversity_factor = 0.6;
    double mutation_probability = 0.1;
    double crossover_probability = 0.6;
    double division_p_low = 0.1;          // range the division exponent p is drawn from
    double division_p_high = 0.5;
    double activation_probability = 0.05; // p used by the EDV fitness

    // Throws invalid_argument; n is the graph's vertex count (k < n needed
    // by the pool division formula).
    void validate(std::size_t n) const;
};

// Ordered k-tuple with distinct entries; slots matter to the crossover.
using Individual = std::vector<VertexId>;
using Population = std::vector<Individual>;

// Union of the final population, sorted by occurrence count (desc), ties by
// ascending id. occurrences[i] belongs to vertices[i].
struct CandidateSet {
    std::vector<VertexId> vertices;
    std::vector<std::uint32_t> occurrences;
};

// Random-range-division bound: k + n * (k/(n-k))^(1-p) * sin(pi*p/2).
// Requires 1 <= k < n and p in (0,1). Returns the real value; pool sizes
// floor it and clamp to [k+1, n].
double up_bound(std::uint32_t k, std::size_t n, double p);

// Draws p uniformly from [p_low, p_high] (one draw), evaluates up_bound,
// floors and clamps. The pool is the returned number of leading SVet entries.
std::size_t rrd_pool(const VertexOrdering& svet, std::uint32_t k,
                     double p_low, double p_high, Rng& rng);

// Inverse permutation of svet.order: position[v] = rank position of v.
std::vector<std::uint32_t> svet_positions(const VertexOrdering& svet);

// Per-slot replacement shared by initialization and mutation. For each slot
// in ascending order: draw ran; if ran < prob, replace the slot's vertex by
// a uniform pool member that is not currently in the individual (rejection
// draws follow the ran draw). If every pool vertex is already a member the
// slot is skipped. positions = svet_positions(svet).
void rrd_replace_slots(Individual& ind, const VertexOrdering& svet,
                       const std::vector<std::uint32_t>& positions,
                       std::size_t pool_size, double prob, Rng& rng);

// Population of `pop` copies of SVet's top-k, each diversified by
// rrd_replace_slots with probability diversity_factor and its own pool.
Population initial_pop(const VertexOrdering& svet, const RdeParams& params, Rng& rng);

// Same replacement scheme with mutation_probability; input not modified.
Population rde_mutation(const Population& x, const VertexOrdering& svet,
                        const RdeParams& params, Rng& rng);

// Slot-wise recombination. Per slot: draw a fresh pool (p draw), then ran;
// ran < cp prefers xm's gene, otherwise x's, falling back to the other when
// the preferred one is already placed; when both are placed, a uniform
// not-yet-placed pool vertex is drawn (expanding the pool to all of SVet if
// it is exhausted).
Population rde_crossover(const Population& x, const Population& xm,
                         const VertexOrdering& svet, const RdeParams& params, Rng& rng);

// Pairwise EDV tournament at activation probability p; ties keep x[i].
Population rde_selection(const Graph& g, const Population& x,
                         const Population& xc, double p);

// Full evolutionary stage: initial_pop, then max_generations rounds of
// mutation -> crossover -> selection; candidate set from the final
// population's occurrence counts.
CandidateSet rand_rde(const Graph& g, const VertexOrdering& svet,
                      const RdeParams& params, Rng& rng);

} // namespace phee
