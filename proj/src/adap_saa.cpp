#include "phee/adap_saa.hpp"

#include "phee/diffusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace phee {

void SaaParams::validate() const {
    if (!(initial_temperature > final_temperature && final_temperature > 0.0))
        throw std::invalid_argument("temperatures must satisfy T_initial > T_final > 0");
    if (!(cooling_coefficient > 0.0))
        throw std::invalid_argument("cooling coefficient must be positive");
    if (moves_per_level < 1) throw std::invalid_argument("moves per level must be >= 1");
    if (max_levels < 1) throw std::invalid_argument("max levels must be >= 1");
}

std::vector<VertexId> construct_ss(const Graph& g, std::uint32_t k) {
    const std::size_t n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("construct_ss needs 1 <= k <= n");

    DeletionOverlay overlay(g);
    std::vector<VertexId> picks;
    picks.reserve(k);
    for (std::uint32_t round = 0; round < k; ++round) {
        VertexId best = UINT32_MAX;
        std::uint32_t best_deg = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (overlay.deleted(v)) continue;
            if (best == UINT32_MAX || overlay.live_degree(v) > best_deg) {
                best = v;
                best_deg = overlay.live_degree(v);
            }
        }
        picks.push_back(best);
        overlay.erase(best);
    }
    return picks;
}

SaaResult adap_saa(const Graph& g, const CandidateSet& csset, std::uint32_t k,
                   const SaaParams& params, double activation_probability, Rng& rng,
                   const SaaObserver& observer) {
    params.validate();
    const std::size_t n = g.vertex_count();
    for (VertexId v : csset.vertices)
        if (v >= n) throw std::invalid_argument("candidate set id out of range");

    EdvEvaluator eval(g);
    SaaResult res;
    std::vector<VertexId> current = construct_ss(g, k);
    res.initial_edv = eval(current, activation_probability);
    double current_edv = res.initial_edv;

    std::vector<std::uint8_t> in_set(n, 0), in_csset(n, 0);
    for (VertexId v : current) in_set[v] = 1;
    for (VertexId v : csset.vertices) {
        if (in_csset[v]) throw std::invalid_argument("candidate set contains duplicates");
        in_csset[v] = 1;
    }
    std::size_t csset_members_in_set = 0;
    for (VertexId v : current)
        if (in_csset[v]) ++csset_members_in_set;

    const double min_dec = params.effective_min_decrement();
    double temperature = params.initial_temperature;
    std::uint64_t r = 0;

    while (temperature > params.final_temperature && res.levels < params.max_levels) {
        ++res.levels;
        for (std::uint32_t move = 0; move < params.moves_per_level; ++move) {
            if (csset_members_in_set >= csset.vertices.size()) {
                res.moves_exhausted = true;
                goto finished;
            }
            // Stream order per move: candidate rejection draws, then slot.
            VertexId incoming;
            do {
                incoming = csset.vertices[rng.next_below(csset.vertices.size())];
            } while (in_set[incoming]);
            const std::size_t slot = rng.next_below(k);
            const VertexId outgoing = current[slot];

            current[slot] = incoming;
            const double cand_edv = eval(current, activation_probability);
            const bool accept = cand_edv > current_edv;
            if (accept) {
                in_set[outgoing] = 0;
                in_set[incoming] = 1;
                ++csset_members_in_set; // incoming is a candidate by construction
                if (in_csset[outgoing]) --csset_members_in_set;
                current_edv = cand_edv;
                r = 0;
                ++res.accepted_moves;
            } else {
                current[slot] = outgoing;
                ++r;
            }
            if (observer)
                observer(SaaMoveEvent{res.levels, move, cand_edv, current_edv, accept});
        }
        temperature -= cooling_decrement(params.cooling_coefficient, r, min_dec);
    }

finished:
    res.seed_set = std::move(current);
    res.edv = current_edv;
    return res;
}

} // namespace phee
