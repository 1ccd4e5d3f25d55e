#include "phee/baselines.hpp"

#include "phee/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace phee {

SpreadOracle exact_oracle(const Graph& g, double p) {
    return [&g, p](std::span<const VertexId> seeds) { return exact_spread(g, seeds, p); };
}

SpreadOracle monte_carlo_oracle(const Graph& g, double p, std::uint32_t runs,
                                std::uint64_t master_seed, unsigned num_threads) {
    return [&g, p, runs, master_seed, num_threads](std::span<const VertexId> seeds) {
        std::vector<VertexId> sorted(seeds.begin(), seeds.end());
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t h = master_seed;
        for (VertexId v : sorted) h = fnv1a_u64(v, h);
        DiffusionParams params;
        params.activation_probability = p;
        params.runs = runs;
        params.master_seed = h;
        return estimate_spread(g, sorted, params, num_threads).mean;
    };
}

GreedyResult greedy_im(const Graph& g, std::uint32_t k, const SpreadOracle& oracle) {
    const std::size_t n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("greedy needs 1 <= k <= n");

    GreedyResult res;
    std::vector<std::uint8_t> chosen(n, 0);
    std::vector<VertexId> trial;
    trial.reserve(k);
    double current = 0.0;

    for (std::uint32_t round = 0; round < k; ++round) {
        VertexId best = UINT32_MAX;
        double best_value = 0.0;
        for (VertexId v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            trial = res.seed_set;
            trial.push_back(v);
            const double value = oracle(trial);
            ++res.evaluations;
            if (best == UINT32_MAX || value > best_value) {
                best = v;
                best_value = value;
            }
        }
        chosen[best] = 1;
        res.seed_set.push_back(best);
        res.picks.emplace_back(best, best_value - current);
        current = best_value;
    }
    return res;
}

GreedyResult celf_im(const Graph& g, std::uint32_t k, const SpreadOracle& oracle) {
    const std::size_t n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("celf needs 1 <= k <= n");

    // Entries carry the marginal gain (queue priority / lazy bound) and the
    // absolute spread value the gain came from. A vertex's gain never grows
    // as the set grows, so a fresh top dominates every stale bound
    // meaningfully below it. Exact agreement with the plain greedy scan
    // needs care around ties: the same tied gain evaluated from different
    // bases can land a few ulps apart in either direction, so a stale bound
    // may even sit slightly below a fresh gain it would actually beat.
    // Before a fresh top is trusted, every stale entry within tolerance of
    // it is re-evaluated against the current base; the deciding comparison
    // then runs on floats identical to greedy's, and the lowest id wins
    // ties exactly like greedy's ascending scan. Gain ties in the heap pop
    // staler entries first so exact-tie refreshes happen eagerly.
    struct Entry {
        double gain;
        double value;
        VertexId vertex;
        std::uint32_t round; // |S| when the gain was computed
    };
    const auto worse = [](const Entry& a, const Entry& b) {
        if (a.gain != b.gain) return a.gain < b.gain;
        if (a.round != b.round) return a.round > b.round;
        return a.vertex > b.vertex;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
    constexpr double tie_tol = 1e-9;

    GreedyResult res;
    std::vector<VertexId> trial;
    trial.reserve(k);
    for (VertexId v = 0; v < n; ++v) {
        trial.assign(1, v);
        const double value = oracle(trial);
        queue.push(Entry{value, value, v, 0});
        ++res.evaluations;
    }

    double current = 0.0;
    const auto refresh = [&](Entry e, std::uint32_t round) {
        trial = res.seed_set;
        trial.push_back(e.vertex);
        e.value = oracle(trial);
        e.gain = e.value - current;
        e.round = round;
        ++res.evaluations;
        return e;
    };
    std::vector<Entry> band;
    while (res.seed_set.size() < k) {
        Entry top = queue.top();
        queue.pop();
        const auto round = static_cast<std::uint32_t>(res.seed_set.size());
        if (top.round != round) {
            queue.push(refresh(top, round));
            continue;
        }
        band.clear();
        bool refreshed = false;
        const double floor = top.gain - tie_tol * std::max(1.0, std::fabs(top.gain));
        while (!queue.empty() && queue.top().gain >= floor) {
            Entry e = queue.top();
            queue.pop();
            if (e.round != round) {
                e = refresh(e, round);
                refreshed = true;
            }
            band.push_back(e);
        }
        for (const Entry& e : band) queue.push(e);
        if (refreshed) { // order may have changed; re-select
            queue.push(top);
            continue;
        }
        res.seed_set.push_back(top.vertex);
        res.picks.emplace_back(top.vertex, top.gain);
        current = top.value; // absolute, not accumulated: no drift vs greedy
    }
    return res;
}

std::vector<VertexId> degree_topk(const Graph& g, std::uint32_t k) {
    if (k < 1 || k > g.vertex_count()) throw std::invalid_argument("degree_topk needs 1 <= k <= n");
    const VertexOrdering order = sortv_degree(g);
    return {order.order.begin(), order.order.begin() + k};
}

std::vector<VertexId> random_seed_set(const Graph& g, std::uint32_t k, Rng& rng) {
    const std::size_t n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("random seed set needs 1 <= k <= n");
    std::vector<std::uint8_t> taken(n, 0);
    std::vector<VertexId> out;
    out.reserve(k);
    while (out.size() < k) {
        const auto v = static_cast<VertexId>(rng.next_below(n));
        if (taken[v]) continue;
        taken[v] = 1;
        out.push_back(v);
    }
    return out;
}

} // namespace phee
