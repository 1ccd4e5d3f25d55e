#pragma once

#include "phee/graph.hpp"
#include "phee/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace phee {

struct DiffusionParams {
    double activation_probability = 0.01;
    std::uint32_t runs = 1000;
    std::uint64_t master_seed = 0;
    void validate() const; // p in [0,1], runs >= 1
};

struct SpreadEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint32_t runs = 0;
};

// Throws invalid_argument unless seeds is non-empty, in range and distinct.
void validate_seed_set(const Graph& g, std::span<const VertexId> seeds);

// Reusable scratch for simulate_once: stamped activation marks, no per-run
// allocation after warmup.
class CascadeWorkspace {
public:
    explicit CascadeWorkspace(std::size_t n) : active_stamp_(n, 0) {}

    std::vector<std::uint32_t> active_stamp_;
    std::vector<VertexId> frontier_;
    std::vector<VertexId> next_;
    std::uint32_t epoch_ = 0;
};

// One independent-cascade simulation: every newly activated vertex gets one
// chance, with probability p, to activate each inactive out-neighbor.
// Within a round, activators attempt in ascending id order (their neighbor
// lists are already sorted), which pins the stream consumption order.
// Returns the number of active vertices including the seeds.
std::uint32_t simulate_once(const Graph& g, std::span<const VertexId> seeds,
                            double p, Rng& rng, CascadeWorkspace& ws);
std::uint32_t simulate_once(const Graph& g, std::span<const VertexId> seeds,
                            double p, Rng& rng);

// Monte-Carlo spread: run i consumes stream (master_seed, i), cascade sizes
// are accumulated as exact integer sums, so the estimate is bit-identical
// for any worker count. num_threads 0 -> default.
SpreadEstimate estimate_spread(const Graph& g, std::span<const VertexId> seeds,
                               const DiffusionParams& params, unsigned num_threads = 0);

// Exact expected spread by live-edge enumeration over all 2^m edge subsets.
// Refuses graphs with more than 22 edges.
double exact_spread(const Graph& g, std::span<const VertexId> seeds, double p);

// Expected diffusion value surrogate:
//   EDV(S) = |S| + sum over v in N_out(S)\S of (1 - (1-p)^tau(v)),
// where tau(v) counts seeds with an arc into v.
double edv(const Graph& g, std::span<const VertexId> seeds, double p);

// Same computation with reusable stamp arrays; the evolutionary stage calls
// this thousands of times per generation.
class EdvEvaluator {
public:
    explicit EdvEvaluator(const Graph& g);
    double operator()(std::span<const VertexId> seeds, double p);

private:
    const Graph* g_;
    std::vector<std::uint32_t> seed_stamp_;
    std::vector<std::uint32_t> tau_stamp_;
    std::vector<std::uint32_t> tau_;
    std::vector<VertexId> touched_;
    std::uint32_t epoch_ = 0;
};

} // namespace phee
