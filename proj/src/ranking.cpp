#include "phee/ranking.hpp"

#include "phee/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace phee {
namespace {

std::vector<VertexId> order_desc(const std::vector<double>& scores) {
    std::vector<VertexId> order(scores.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
    });
    return order;
}

} // namespace

std::vector<std::uint32_t> kshell_decompose(const Graph& g) {
    // Batagelj-Zaversnik bucket peel over union degrees.
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> core(n);
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        core[v] = static_cast<std::uint32_t>(g.degree(v));
        max_deg = std::max(max_deg, core[v]);
    }

    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (VertexId v = 0; v < n; ++v) bin[core[v] + 1]++;
    for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];

    std::vector<VertexId> vert(n);
    std::vector<std::size_t> pos(n);
    {
        std::vector<std::size_t> next(bin.begin(), bin.end() - 1);
        for (VertexId v = 0; v < n; ++v) {
            pos[v] = next[core[v]]++;
            vert[pos[v]] = v;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = vert[i];
        for (VertexId u : g.neighbors(v)) {
            if (core[u] <= core[v]) continue;
            // Move u to the front of its bucket, then shrink its degree.
            const std::size_t bucket_start = bin[core[u]];
            const VertexId first = vert[bucket_start];
            if (first != u) {
                std::swap(vert[pos[u]], vert[bucket_start]);
                std::swap(pos[u], pos[first]);
            }
            ++bin[core[u]];
            --core[u];
        }
    }
    return core;
}

VertexOrdering sortv_mdd(const Graph& g, double lambda, const MddObserver& observer) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("mdd lambda must be in [0,1]");

    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> live_deg(n);
    for (VertexId v = 0; v < n; ++v) live_deg[v] = static_cast<std::uint32_t>(g.degree(v));

    // Mixed degree: live links count 1, removed links count lambda. Computed
    // through one canonical expression so heap snapshots compare exactly.
    const auto mixed = [&](VertexId v) {
        const double total = static_cast<double>(g.degree(v));
        const double live = static_cast<double>(live_deg[v]);
        return live + lambda * (total - live);
    };

    using Entry = std::pair<double, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    double min_mdd = mixed(0);
    for (VertexId v = 0; v < n; ++v) {
        heap.emplace(mixed(v), v);
        min_mdd = std::min(min_mdd, mixed(v));
    }

    std::vector<std::uint8_t> deleted(n, 0), pending(n, 0);
    std::vector<VertexId> removal_order;
    removal_order.reserve(n);
    std::vector<double> scores(n, 0.0);
    std::vector<VertexId> batch;
    std::vector<std::pair<VertexId, double>> live_snapshot;
    constexpr double eps = 1e-9;

    std::size_t removed = 0;
    while (removed < n) {
        batch.clear();
        while (!heap.empty()) {
            auto [key, v] = heap.top();
            if (deleted[v] || pending[v]) {
                heap.pop();
                continue;
            }
            const double fresh = mixed(v);
            if (fresh != key) {
                // Stale snapshot; mixed degrees only decrease, so reinsert.
                heap.pop();
                heap.emplace(fresh, v);
                continue;
            }
            if (key > min_mdd + eps) break;
            heap.pop();
            pending[v] = 1;
            batch.push_back(v);
        }

        if (batch.empty()) {
            min_mdd += 1.0;
            continue;
        }

        std::sort(batch.begin(), batch.end());
        if (observer) {
            live_snapshot.clear();
            for (VertexId v = 0; v < n; ++v)
                if (!deleted[v]) live_snapshot.emplace_back(v, mixed(v));
            observer(MddBatchEvent{min_mdd, batch, live_snapshot});
        }

        for (VertexId v : batch) {
            scores[v] = min_mdd;
            removal_order.push_back(v);
            deleted[v] = 1;
            pending[v] = 0;
        }
        removed += batch.size();
        for (VertexId v : batch)
            for (VertexId u : g.neighbors(v))
                if (!deleted[u]) {
                    --live_deg[u];
                    heap.emplace(mixed(u), u);
                }
    }

    VertexOrdering result;
    result.method = RankMethod::Mdd;
    result.order.assign(removal_order.rbegin(), removal_order.rend());
    result.scores = std::move(scores);
    return result;
}

VertexOrdering sortv_gci(const Graph& g, std::uint32_t radius, unsigned num_threads) {
    if (radius < 1) throw std::invalid_argument("gci radius must be >= 1");

    const std::size_t n = g.vertex_count();
    const std::vector<std::uint32_t> shell = kshell_decompose(g);
    std::vector<double> scores(n, 0.0);

    parallel_for(n, num_threads, [&](std::size_t begin, std::size_t end, unsigned) {
        std::vector<std::uint32_t> dist(n, UINT32_MAX);
        std::vector<VertexId> visited;
        std::vector<VertexId> queue;
        for (std::size_t sv = begin; sv < end; ++sv) {
            const auto v = static_cast<VertexId>(sv);
            double sum = 0.0;
            queue.clear();
            visited.clear();
            dist[v] = 0;
            visited.push_back(v);
            queue.push_back(v);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const VertexId u = queue[head];
                if (dist[u] == radius) continue;
                for (VertexId w : g.neighbors(u)) {
                    if (dist[w] != UINT32_MAX) continue;
                    dist[w] = dist[u] + 1;
                    visited.push_back(w);
                    queue.push_back(w);
                    const double d = dist[w];
                    sum += static_cast<double>(shell[v]) * static_cast<double>(shell[w]) / (d * d);
                }
            }
            scores[v] = sum;
            for (VertexId w : visited) dist[w] = UINT32_MAX;
        }
    });

    VertexOrdering result;
    result.method = RankMethod::Gci;
    result.order = order_desc(scores);
    result.scores = std::move(scores);
    return result;
}

VertexOrdering sortv_degree(const Graph& g) {
    VertexOrdering result;
    result.method = RankMethod::Degree;
    result.scores.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        result.scores[v] = static_cast<double>(g.degree(v));
    result.order = order_desc(result.scores);
    return result;
}

VertexOrdering sortv_kshell(const Graph& g) {
    const auto shell = kshell_decompose(g);
    VertexOrdering result;
    result.method = RankMethod::KShell;
    result.scores.assign(shell.begin(), shell.end());
    result.order = order_desc(result.scores);
    return result;
}

VertexOrdering rank_vertices(const Graph& g, const RankingParams& params) {
    switch (params.method) {
        case RankMethod::Mdd: return sortv_mdd(g, params.mdd_lambda);
        case RankMethod::Gci: return sortv_gci(g, params.gci_radius);
        case RankMethod::KShell: return sortv_kshell(g);
        default: return sortv_degree(g);
    }
}

const char* rank_method_name(RankMethod method) {
    switch (method) {
        case RankMethod::Mdd: return "mdd";
        case RankMethod::Gci: return "gci";
        case RankMethod::KShell: return "kshell";
        default: return "degree";
    }
}

RankMethod parse_rank_method(const std::string& name) {
    if (name == "mdd") return RankMethod::Mdd;
    if (name == "gci") return RankMethod::Gci;
    if (name == "kshell") return RankMethod::KShell;
    if (name == "degree") return RankMethod::Degree;
    throw std::invalid_argument("unknown ranking method '" + name + "'");
}

} // namespace phee
