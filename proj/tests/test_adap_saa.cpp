#include "phee/adap_saa.hpp"

#include "phee/diffusion.hpp"

#include <doctest.h>
#include <test_graphs.hpp>

#include <algorithm>
#include <cmath>
#include <set>

using namespace phee;
using namespace phee::testing;

TEST_CASE("cooling decrement takes the floor right after an accept") {
    CHECK(cooling_decrement(5.0, 0, 3.0) == doctest::Approx(3.0));
    CHECK(cooling_decrement(5.0, 1, 3.0) == doctest::Approx(5.0 * std::log(2.0)));
    CHECK(cooling_decrement(5.0, 100, 3.0) == doctest::Approx(5.0 * std::log(101.0)));
    SaaParams params;
    CHECK(params.effective_min_decrement() == doctest::Approx(5.0 * std::log(2.0)));
    params.min_decrement = 1.25;
    CHECK(params.effective_min_decrement() == doctest::Approx(1.25));
}

TEST_CASE("construct_ss peels hubs first: star") {
    const Graph g = star_graph(4);
    CHECK(construct_ss(g, 1) == std::vector<VertexId>{0});
    // After the center is gone every leaf is degree 0; lowest id wins.
    CHECK(construct_ss(g, 2) == std::vector<VertexId>{0, 1});
}

TEST_CASE("construct_ss alternates between two triangles") {
    const Graph g = two_triangles();
    // All degrees are 2, ascending-id ties: take 0, its neighbors drop to 1,
    // so the second pick is 3 from the untouched triangle.
    CHECK(construct_ss(g, 2) == std::vector<VertexId>{0, 3});
}

TEST_CASE("construct_ss degree updates matter: adjacent hubs") {
    // 0 and 1 are both high degree but adjacent; peeling 0 weakens 1 enough
    // that 5 (untouched hub) comes second.
    const Graph g = make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4},
                                   {5, 6}, {5, 7}, {5, 8}});
    const auto picks = construct_ss(g, 2);
    CHECK(picks == std::vector<VertexId>{0, 5});
}

TEST_CASE("construct_ss covers the whole graph at k = n") {
    const Graph g = path_graph(4);
    const auto picks = construct_ss(g, 4);
    CHECK(std::set<VertexId>(picks.begin(), picks.end()).size() == 4);
    CHECK_THROWS_AS(construct_ss(g, 5), std::invalid_argument);
    CHECK_THROWS_AS(construct_ss(g, 0), std::invalid_argument);
}

namespace {

CandidateSet make_csset(std::vector<VertexId> vs) {
    CandidateSet cs;
    cs.vertices = std::move(vs);
    cs.occurrences.assign(cs.vertices.size(), 1);
    return cs;
}

} // namespace

TEST_CASE("p = 0 accepts nothing and still terminates") {
    const Graph g = star_graph(6);
    const CandidateSet cs = make_csset({0, 1, 2, 3, 4, 5, 6});
    SaaParams params;
    params.initial_temperature = 200.0;
    params.final_temperature = 10.0;
    Rng rng(5);
    const SaaResult res = adap_saa(g, cs, 2, params, 0.0, rng);
    CHECK(res.accepted_moves == 0);
    // Every EDV is |S| = 2 at p = 0, strict improvement never fires.
    CHECK(res.edv == doctest::Approx(2.0));
    CHECK(res.initial_edv == doctest::Approx(2.0));
    CHECK(res.levels >= 1);
    CHECK(res.seed_set.size() == 2);
}

TEST_CASE("the refined set never falls below the constructive start") {
    Rng graph_rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(graph_rng, 40, 100);
        if (g.vertex_count() < 6) continue;
        CandidateSet cs;
        for (VertexId v = 0; v < g.vertex_count(); v += 2) cs.vertices.push_back(v);
        cs.occurrences.assign(cs.vertices.size(), 1);

        SaaParams params;
        params.initial_temperature = 100.0;
        params.final_temperature = 10.0;
        Rng rng(trial);
        const SaaResult res = adap_saa(g, cs, 3, params, 0.1, rng);
        CHECK(res.edv >= res.initial_edv - 1e-12);
        CHECK(res.edv == doctest::Approx(edv(g, res.seed_set, 0.1)));
        CHECK(res.seed_set.size() == 3);
        std::set<VertexId> distinct(res.seed_set.begin(), res.seed_set.end());
        CHECK(distinct.size() == 3);
    }
}

TEST_CASE("acceptances are strict improvements and the final set is the best seen") {
    const Graph g = two_triangles();
    const CandidateSet cs = make_csset({0, 1, 2, 3, 4, 5});
    SaaParams params;
    params.initial_temperature = 500.0;
    params.final_temperature = 10.0;
    Rng rng(9);

    double best_seen = 0.0, last_current = 0.0;
    const SaaResult res = adap_saa(g, cs, 2, params, 0.3, rng, [&](const SaaMoveEvent& ev) {
        if (ev.accepted) CHECK(ev.candidate_edv > best_seen);
        best_seen = std::max(best_seen, ev.current_edv);
        last_current = ev.current_edv;
    });
    CHECK(res.edv == doctest::Approx(best_seen));
    CHECK(res.edv == doctest::Approx(last_current));
}

TEST_CASE("exhausted candidate pools stop the search with a flag") {
    const Graph g = star_graph(4);
    // Both candidates end up inside the set immediately: construct_ss picks
    // {0, 1} and the pool is exactly {0, 1}.
    const CandidateSet cs = make_csset({0, 1});
    SaaParams params;
    Rng rng(3);
    const SaaResult res = adap_saa(g, cs, 2, params, 0.2, rng);
    CHECK(res.moves_exhausted);
    CHECK(res.seed_set.size() == 2);
    CHECK(res.accepted_moves == 0);
}

TEST_CASE("max_levels caps a schedule that would run forever") {
    const Graph g = path_graph(8);
    const CandidateSet cs = make_csset({0, 1, 2, 3, 4, 5, 6, 7});
    SaaParams params;
    params.initial_temperature = 1e12;
    params.final_temperature = 1.0;
    params.max_levels = 50;
    Rng rng(7);
    const SaaResult res = adap_saa(g, cs, 2, params, 0.1, rng);
    CHECK(res.levels == 50);
}

TEST_CASE("level count matches the pure-rejection schedule at p = 0") {
    // With no accepts, r grows by moves_per_level per level and the
    // decrement is theta * ln(r + 1); replaying that recurrence must land on
    // the same level count.
    const Graph g = path_graph(6);
    const CandidateSet cs = make_csset({0, 1, 2, 3, 4, 5});
    SaaParams params;
    params.initial_temperature = 300.0;
    params.final_temperature = 10.0;
    params.cooling_coefficient = 5.0;
    params.moves_per_level = 15;
    Rng rng(1);
    const SaaResult res = adap_saa(g, cs, 2, params, 0.0, rng);

    double t = params.initial_temperature;
    std::uint64_t r = 0, levels = 0;
    while (t > params.final_temperature) {
        ++levels;
        r += params.moves_per_level;
        t -= cooling_decrement(params.cooling_coefficient, r, params.effective_min_decrement());
    }
    CHECK(res.levels == levels);
}

TEST_CASE("candidate ids beyond the graph are rejected") {
    const Graph g = path_graph(3);
    const CandidateSet cs = make_csset({0, 9});
    SaaParams params;
    Rng rng(2);
    CHECK_THROWS_AS(adap_saa(g, cs, 1, params, 0.1, rng), std::invalid_argument);
}

TEST_CASE("temperature parameters are validated") {
    SaaParams params;
    params.initial_temperature = 5.0;
    params.final_temperature = 10.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.initial_temperature = 2000.0;
    params.final_temperature = 0.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.final_temperature = 10.0;
    params.cooling_coefficient = 0.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
}
