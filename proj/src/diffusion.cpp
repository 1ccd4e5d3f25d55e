#include "phee/diffusion.hpp"

#include "phee/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phee {

void DiffusionParams::validate() const {
    if (!(activation_probability >= 0.0 && activation_probability <= 1.0))
        throw std::invalid_argument("activation probability must be in [0,1]");
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
}

void validate_seed_set(const Graph& g, std::span<const VertexId> seeds) {
    if (seeds.empty()) throw std::invalid_argument("seed set is empty");
    std::vector<VertexId> sorted(seeds.begin(), seeds.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= g.vertex_count())
        throw std::invalid_argument("seed id out of range");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("seed set contains duplicates");
}

std::uint32_t simulate_once(const Graph& g, std::span<const VertexId> seeds,
                            double p, Rng& rng, CascadeWorkspace& ws) {
    auto& stamp = ws.active_stamp_;
    const std::uint32_t epoch = ++ws.epoch_;
    if (epoch == 0) throw std::logic_error("workspace epoch wrapped");

    ws.frontier_.assign(seeds.begin(), seeds.end());
    std::sort(ws.frontier_.begin(), ws.frontier_.end());
    if (ws.frontier_.empty() || ws.frontier_.back() >= stamp.size())
        throw std::invalid_argument("bad seed set");
    for (VertexId s : ws.frontier_) {
        if (stamp[s] == epoch) throw std::invalid_argument("seed set contains duplicates");
        stamp[s] = epoch;
    }

    std::uint32_t active = static_cast<std::uint32_t>(seeds.size());
    while (!ws.frontier_.empty()) {
        ws.next_.clear();
        for (VertexId u : ws.frontier_)
            for (VertexId v : g.out_neighbors(u)) {
                if (stamp[v] == epoch) continue;
                if (!rng.bernoulli(p)) continue;
                stamp[v] = epoch;
                ws.next_.push_back(v);
                ++active;
            }
        std::sort(ws.next_.begin(), ws.next_.end());
        std::swap(ws.frontier_, ws.next_);
    }
    return active;
}

std::uint32_t simulate_once(const Graph& g, std::span<const VertexId> seeds,
                            double p, Rng& rng) {
    CascadeWorkspace ws(g.vertex_count());
    return simulate_once(g, seeds, p, rng, ws);
}

SpreadEstimate estimate_spread(const Graph& g, std::span<const VertexId> seeds,
                               const DiffusionParams& params, unsigned num_threads) {
    params.validate();
    validate_seed_set(g, seeds);

    const std::uint32_t runs = params.runs;
    unsigned threads = num_threads ? num_threads : default_thread_count();
    std::vector<std::uint64_t> sums(threads, 0), squares(threads, 0);

    parallel_for(runs, threads, [&](std::size_t begin, std::size_t end, unsigned worker) {
        CascadeWorkspace ws(g.vertex_count());
        std::uint64_t sum = 0, sq = 0;
        for (std::size_t run = begin; run < end; ++run) {
            Rng rng = Rng::stream(params.master_seed, run);
            const std::uint64_t size = simulate_once(g, seeds, params.activation_probability, rng, ws);
            sum += size;
            sq += size * size;
        }
        sums[worker] += sum;
        squares[worker] += sq;
    });

    std::uint64_t sum = 0, sq = 0;
    for (unsigned w = 0; w < threads; ++w) {
        sum += sums[w];
        sq += squares[w];
    }

    SpreadEstimate est;
    est.runs = runs;
    est.mean = static_cast<double>(sum) / runs;
    if (runs > 1) {
        // Sample variance from exact integer moments.
        const double num = static_cast<double>(sq) - static_cast<double>(sum) * est.mean;
        const double var = std::max(0.0, num / (runs - 1));
        est.std_error = std::sqrt(var / runs);
    }
    return est;
}

double exact_spread(const Graph& g, std::span<const VertexId> seeds, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    validate_seed_set(g, seeds);

    // Collect the edge set once: undirected edges contribute both arcs when
    // their coin lands heads (one coin per edge, per the live-edge view).
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.out_neighbors(u)) {
            if (!g.directed() && v < u) continue;
            edges.emplace_back(u, v);
        }
    const std::size_t m = edges.size();
    if (m > 22) throw std::invalid_argument("exact_spread: graph has more than 22 edges");

    std::vector<double> pow_p(m + 1, 1.0), pow_q(m + 1, 1.0);
    for (std::size_t i = 1; i <= m; ++i) {
        pow_p[i] = pow_p[i - 1] * p;
        pow_q[i] = pow_q[i - 1] * (1.0 - p);
    }

    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<VertexId> queue;
    std::uint32_t epoch = 0;

    double total = 0.0;
    const std::uint64_t worlds = 1ull << m;
    for (std::uint64_t mask = 0; mask < worlds; ++mask) {
        for (auto& lst : adj) lst.clear();
        int live = 0;
        for (std::size_t e = 0; e < m; ++e)
            if (mask >> e & 1) {
                ++live;
                adj[edges[e].first].push_back(edges[e].second);
                if (!g.directed()) adj[edges[e].second].push_back(edges[e].first);
            }

        ++epoch;
        queue.assign(seeds.begin(), seeds.end());
        for (VertexId s : seeds) stamp[s] = epoch;
        std::size_t reached = seeds.size();
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (VertexId v : adj[queue[head]])
                if (stamp[v] != epoch) {
                    stamp[v] = epoch;
                    queue.push_back(v);
                    ++reached;
                }

        total += pow_p[static_cast<std::size_t>(live)] *
                 pow_q[m - static_cast<std::size_t>(live)] * static_cast<double>(reached);
    }
    return total;
}

EdvEvaluator::EdvEvaluator(const Graph& g)
    : g_(&g),
      seed_stamp_(g.vertex_count(), 0),
      tau_stamp_(g.vertex_count(), 0),
      tau_(g.vertex_count(), 0) {}

double EdvEvaluator::operator()(std::span<const VertexId> seeds, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    if (seeds.empty()) throw std::invalid_argument("seed set is empty");
    const std::uint32_t epoch = ++epoch_;
    if (epoch == 0) throw std::logic_error("evaluator epoch wrapped");

    for (VertexId s : seeds) {
        if (s >= g_->vertex_count()) throw std::invalid_argument("seed id out of range");
        if (seed_stamp_[s] == epoch) throw std::invalid_argument("seed set contains duplicates");
        seed_stamp_[s] = epoch;
    }

    touched_.clear();
    for (VertexId s : seeds)
        for (VertexId v : g_->out_neighbors(s)) {
            if (seed_stamp_[v] == epoch) continue;
            if (tau_stamp_[v] != epoch) {
                tau_stamp_[v] = epoch;
                tau_[v] = 0;
                touched_.push_back(v);
            }
            ++tau_[v];
        }

    const double q = 1.0 - p;
    double sum = static_cast<double>(seeds.size());
    for (VertexId v : touched_) {
        double qt = 1.0;
        for (std::uint32_t i = 0; i < tau_[v]; ++i) qt *= q; // tau <= |S|, exact and portable
        sum += 1.0 - qt;
    }
    return sum;
}

double edv(const Graph& g, std::span<const VertexId> seeds, double p) {
    validate_seed_set(g, seeds);
    EdvEvaluator eval(g);
    return eval(seeds, p);
}

} // namespace phee
