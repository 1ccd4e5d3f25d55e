#include "phee/rand_rde.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace phee {

void RdeParams::validate(std::size_t n) const {
    if (seed_set_size < 1 || seed_set_size >= n)
        throw std::invalid_argument("seed set size must satisfy 1 <= k < n");
    if (population_size < 1) throw std::invalid_argument("population size must be >= 1");
    if (max_generations < 1) throw std::invalid_argument("generation count must be >= 1");
    const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(diversity_factor)) throw std::invalid_argument("diversity factor must be in [0,1]");
    if (!in_unit(mutation_probability)) throw std::invalid_argument("mutation probability must be in [0,1]");
    if (!in_unit(crossover_probability)) throw std::invalid_argument("crossover probability must be in [0,1]");
    if (!(division_p_low > 0.0 && division_p_low <= division_p_high && division_p_high < 1.0))
        throw std::invalid_argument("division p range must satisfy 0 < low <= high < 1");
    if (!in_unit(activation_probability))
        throw std::invalid_argument("activation probability must be in [0,1]");
}

double up_bound(std::uint32_t k, std::size_t n, double p) {
    if (k < 1 || k >= n) throw std::invalid_argument("up_bound needs 1 <= k < n");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("up_bound needs p in (0,1)");
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    return kd + nd * std::pow(kd / (nd - kd), 1.0 - p) * std::sin(M_PI * p / 2.0);
}

std::size_t rrd_pool(const VertexOrdering& svet, std::uint32_t k,
                     double p_low, double p_high, Rng& rng) {
    const std::size_t n = svet.order.size();
    const double p = rng.next_double(p_low, p_high);
    const double raw = std::floor(up_bound(k, n, p));
    const double lo = static_cast<double>(k) + 1.0;
    const double hi = static_cast<double>(n);
    return static_cast<std::size_t>(std::min(hi, std::max(lo, raw)));
}

std::vector<std::uint32_t> svet_positions(const VertexOrdering& svet) {
    std::vector<std::uint32_t> pos(svet.order.size());
    for (std::uint32_t i = 0; i < svet.order.size(); ++i) pos[svet.order[i]] = i;
    return pos;
}

void rrd_replace_slots(Individual& ind, const VertexOrdering& svet,
                       const std::vector<std::uint32_t>& positions,
                       std::size_t pool_size, double prob, Rng& rng) {
    std::unordered_set<VertexId> members(ind.begin(), ind.end());
    std::size_t members_in_pool = 0;
    for (VertexId v : ind)
        if (positions[v] < pool_size) ++members_in_pool;

    for (std::size_t j = 0; j < ind.size(); ++j) {
        const double ran = rng.next_double();
        if (ran >= prob) continue;
        if (members_in_pool >= pool_size) continue; // pool is all members: nothing to draw

        VertexId cand;
        do {
            cand = svet.order[rng.next_below(pool_size)];
        } while (members.count(cand));

        const VertexId old = ind[j];
        members.erase(old);
        members.insert(cand);
        if (positions[old] < pool_size) --members_in_pool;
        ++members_in_pool; // cand comes from the pool by construction
        ind[j] = cand;
    }
}

namespace {

Population perturbed_population(const Population& base, const VertexOrdering& svet,
                                const RdeParams& params, double prob, Rng& rng) {
    const std::vector<std::uint32_t> positions = svet_positions(svet);
    Population out;
    out.reserve(base.size());
    for (const Individual& src : base) {
        const std::size_t pool =
            rrd_pool(svet, params.seed_set_size, params.division_p_low, params.division_p_high, rng);
        Individual ind = src;
        rrd_replace_slots(ind, svet, positions, pool, prob, rng);
        out.push_back(std::move(ind));
    }
    return out;
}

} // namespace

Population initial_pop(const VertexOrdering& svet, const RdeParams& params, Rng& rng) {
    params.validate(svet.order.size());
    const Individual top(svet.order.begin(), svet.order.begin() + params.seed_set_size);
    const Population base(params.population_size, top);
    return perturbed_population(base, svet, params, params.diversity_factor, rng);
}

Population rde_mutation(const Population& x, const VertexOrdering& svet,
                        const RdeParams& params, Rng& rng) {
    return perturbed_population(x, svet, params, params.mutation_probability, rng);
}

Population rde_crossover(const Population& x, const Population& xm,
                         const VertexOrdering& svet, const RdeParams& params, Rng& rng) {
    if (x.size() != xm.size()) throw std::invalid_argument("crossover populations differ in size");
    const std::size_t n = svet.order.size();
    const std::vector<std::uint32_t> positions = svet_positions(svet);
    const std::uint32_t k = params.seed_set_size;

    Population out;
    out.reserve(x.size());
    std::vector<std::uint32_t> placed_stamp(n, 0);
    std::uint32_t epoch = 0;

    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].size() != k || xm[i].size() != k)
            throw std::invalid_argument("crossover individual has wrong size");
        ++epoch;
        Individual child;
        child.reserve(k);

        for (std::uint32_t j = 0; j < k; ++j) {
            // Fixed stream order per slot: pool draw, then ran draw.
            std::size_t pool =
                rrd_pool(svet, k, params.division_p_low, params.division_p_high, rng);
            const double ran = rng.next_double();

            const VertexId preferred = ran < params.crossover_probability ? xm[i][j] : x[i][j];
            const VertexId fallback = ran < params.crossover_probability ? x[i][j] : xm[i][j];

            VertexId pick;
            if (placed_stamp[preferred] != epoch) {
                pick = preferred;
            } else if (placed_stamp[fallback] != epoch) {
                pick = fallback;
            } else {
                // Both parents' genes already placed: fill from the pool.
                std::size_t placed_in_pool = 0;
                for (VertexId v : child)
                    if (positions[v] < pool) ++placed_in_pool;
                if (placed_in_pool >= pool) pool = n; // exhausted: widen to the whole ranking
                do {
                    pick = svet.order[rng.next_below(pool)];
                } while (placed_stamp[pick] == epoch);
            }
            placed_stamp[pick] = epoch;
            child.push_back(pick);
        }
        out.push_back(std::move(child));
    }
    return out;
}

Population rde_selection(const Graph& g, const Population& x,
                         const Population& xc, double p) {
    if (x.size() != xc.size()) throw std::invalid_argument("selection populations differ in size");
    EdvEvaluator eval(g);
    Population out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out.push_back(eval(xc[i], p) > eval(x[i], p) ? xc[i] : x[i]);
    return out;
}

CandidateSet rand_rde(const Graph& g, const VertexOrdering& svet,
                      const RdeParams& params, Rng& rng) {
    params.validate(g.vertex_count());
    if (svet.order.size() != g.vertex_count())
        throw std::invalid_argument("ordering does not match the graph");

    Population x = initial_pop(svet, params, rng);
    for (std::uint32_t gen = 0; gen < params.max_generations; ++gen) {
        Population xm = rde_mutation(x, svet, params, rng);
        Population xc = rde_crossover(x, xm, svet, params, rng);
        x = rde_selection(g, x, xc, params.activation_probability);
    }

    std::vector<std::uint32_t> count(g.vertex_count(), 0);
    for (const Individual& ind : x)
        for (VertexId v : ind) ++count[v];

    CandidateSet cs;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (count[v]) cs.vertices.push_back(v);
    std::sort(cs.vertices.begin(), cs.vertices.end(), [&](VertexId a, VertexId b) {
        return count[a] != count[b] ? count[a] > count[b] : a < b;
    });
    cs.occurrences.reserve(cs.vertices.size());
    for (VertexId v : cs.vertices) cs.occurrences.push_back(count[v]);
    return cs;
}

} // namespace phee
