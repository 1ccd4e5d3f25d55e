#include "phee/rand_rde.hpp"

#include <doctest.h>
#include <test_graphs.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

using namespace phee;
using namespace phee::testing;

namespace {

VertexOrdering identity_ordering(std::size_t n) {
    VertexOrdering o;
    o.order.resize(n);
    std::iota(o.order.begin(), o.order.end(), 0);
    o.scores.resize(n);
    for (std::size_t i = 0; i < n; ++i) o.scores[i] = static_cast<double>(n - i);
    return o;
}

bool all_distinct(const Individual& ind) {
    std::set<VertexId> s(ind.begin(), ind.end());
    return s.size() == ind.size();
}

} // namespace

TEST_CASE("up_bound frozen values and domain") {
    CHECK(up_bound(20, 100, 0.3) == doctest::Approx(37.20302303733914).epsilon(1e-13));
    CHECK(up_bound(3, 6, 0.1) == doctest::Approx(3.9386067902413853).epsilon(1e-13));
    CHECK(up_bound(3, 6, 0.5) == doctest::Approx(7.242640687119285).epsilon(1e-13));
    CHECK(up_bound(10, 1589, 0.3) == doctest::Approx(30.85946526570651).epsilon(1e-13));

    CHECK_THROWS_AS(up_bound(0, 10, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(up_bound(10, 10, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(up_bound(2, 10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(up_bound(2, 10, 1.0), std::invalid_argument);
}

TEST_CASE("up_bound agrees with the direct formula everywhere") {
    Rng rng(606);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 3 + rng.next_below(3000);
        const auto k = static_cast<std::uint32_t>(1 + rng.next_below(n - 1));
        const double p = rng.next_double(0.01, 0.99);
        CHECK(up_bound(k, n, p) == doctest::Approx(ref_up_bound(k, n, p)).epsilon(1e-12));
    }
}

TEST_CASE("up_bound exceeds k and grows with p on the small-k side") {
    Rng rng(607);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 10 + rng.next_below(500);
        const auto k = static_cast<std::uint32_t>(1 + rng.next_below(n / 2 - 1));
        const double p1 = rng.next_double(0.05, 0.5);
        const double p2 = p1 + rng.next_double(0.01, 0.45);
        CHECK(up_bound(k, n, p1) > k);
        CHECK(up_bound(k, n, p2) > up_bound(k, n, p1));
    }
}

TEST_CASE("rrd_pool lands in [k+1, n]") {
    const auto svet = identity_ordering(6);
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        const std::size_t pool = rrd_pool(svet, 3, 0.1, 0.5, rng);
        CHECK(pool >= 4);
        CHECK(pool <= 6);
    }
    // At k = n - 1 the bound blows past n and must clamp down to n.
    const auto tight = identity_ordering(5);
    for (int i = 0; i < 20; ++i) CHECK(rrd_pool(tight, 4, 0.1, 0.5, rng) == 5);
}

TEST_CASE("svet_positions inverts the order") {
    VertexOrdering o;
    o.order = {2, 0, 1};
    o.scores = {1.0, 0.5, 2.0};
    const auto pos = svet_positions(o);
    CHECK(pos == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("zero diversity keeps the initial population at the ranking prefix") {
    const auto svet = identity_ordering(20);
    RdeParams params;
    params.seed_set_size = 5;
    params.population_size = 4;
    params.diversity_factor = 0.0;
    Rng rng(1);
    const Population pop = initial_pop(svet, params, rng);
    REQUIRE(pop.size() == 4);
    for (const auto& ind : pop) CHECK(ind == Individual{0, 1, 2, 3, 4});
}

TEST_CASE("full diversity never produces duplicate entries") {
    const auto svet = identity_ordering(30);
    RdeParams params;
    params.seed_set_size = 6;
    params.population_size = 10;
    params.diversity_factor = 1.0;
    Rng rng(2);
    for (const auto& ind : initial_pop(svet, params, rng)) {
        CHECK(ind.size() == 6);
        CHECK(all_distinct(ind));
    }
}

TEST_CASE("forced slot replacement draws uniformly from the eligible pool") {
    const auto svet = identity_ordering(12);
    const auto positions = svet_positions(svet);
    Rng rng(42);
    const std::size_t pool = 7;
    std::map<VertexId, int> hits;
    const int trials = 70000;
    for (int i = 0; i < trials; ++i) {
        Individual ind{0};
        rrd_replace_slots(ind, svet, positions, pool, 1.0, rng);
        ++hits[ind[0]];
    }
    // Vertex 0 is excluded as the current member, so 1..6 share the mass.
    CHECK(hits.count(0) == 0);
    CHECK(hits.size() == 6);
    for (const auto& [v, c] : hits) {
        CHECK(v >= 1);
        CHECK(v < 7);
        // Binomial(70000, 1/6): sd ~ 98.6; 5 sigma.
        CHECK(std::abs(c - trials / 6) < 494);
    }
}

TEST_CASE("replacement skips the slot when the pool is saturated by members") {
    const auto svet = identity_ordering(8);
    const auto positions = svet_positions(svet);
    Rng rng(3);
    Individual ind{0, 1, 2};
    rrd_replace_slots(ind, svet, positions, 3, 1.0, rng); // pool == members
    CHECK(ind == Individual{0, 1, 2});
}

TEST_CASE("mutation changes slots at the configured rate and keeps sets valid") {
    const auto svet = identity_ordering(40);
    RdeParams params;
    params.seed_set_size = 5;
    params.population_size = 400;
    params.mutation_probability = 0.1;
    params.diversity_factor = 0.0;
    Rng rng(11);

    const Population x = initial_pop(svet, params, rng);
    const Population xm = rde_mutation(x, svet, params, rng);
    REQUIRE(xm.size() == x.size());

    int changed = 0, total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(all_distinct(xm[i]));
        for (std::size_t j = 0; j < x[i].size(); ++j) {
            ++total;
            changed += xm[i][j] != x[i][j];
        }
    }
    // 2000 slots at rate 0.1: sd ~ 13.4; allow 5 sigma.
    CHECK(std::abs(changed - total / 10) < 68);
}

TEST_CASE("crossover at the probability extremes copies one parent") {
    const auto svet = identity_ordering(6);
    RdeParams params;
    params.seed_set_size = 3;
    const Population x{{0, 1, 2}, {3, 4, 5}};
    const Population xm{{2, 0, 1}, {5, 3, 4}};

    params.crossover_probability = 1.0;
    Rng rng_hi(5);
    CHECK(rde_crossover(x, xm, svet, params, rng_hi) == xm);

    params.crossover_probability = 0.0;
    Rng rng_lo(6);
    CHECK(rde_crossover(x, xm, svet, params, rng_lo) == x);
}

TEST_CASE("crossover resolves collisions and sometimes recruits fresh pool vertices") {
    const auto svet = identity_ordering(6);
    RdeParams params;
    params.seed_set_size = 3;
    params.crossover_probability = 0.5;
    // Slot 2 collides whenever slot 0 took 2 and slot 1 took 1: both parent
    // genes for slot 2 are then already placed and the pool kicks in.
    const Population x{{0, 1, 2}};
    const Population xm{{2, 0, 1}};

    Rng rng(21);
    int fresh = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Population xc = rde_crossover(x, xm, svet, params, rng);
        REQUIRE(xc.size() == 1);
        REQUIRE(xc[0].size() == 3);
        CHECK(all_distinct(xc[0]));
        for (VertexId v : xc[0])
            if (v > 2) ++fresh;
    }
    CHECK(fresh > 20);
}

TEST_CASE("slot-identical parents reproduce themselves under any coin flips") {
    const auto svet = identity_ordering(9);
    RdeParams params;
    params.seed_set_size = 3;
    params.crossover_probability = 0.5;
    const Population x{{4, 7, 1}};
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const Population xc = rde_crossover(x, x, svet, params, rng);
        CHECK(xc[0] == Individual{4, 7, 1});
    }
}

TEST_CASE("selection keeps the fitter individual and ties keep the incumbent") {
    const Graph g = star_graph(5);
    const Population x{{1}, {0}, {1}};
    const Population xc{{0}, {2}, {2}};
    const Population sel = rde_selection(g, x, xc, 0.1);
    CHECK(sel[0] == Individual{0}); // center beats leaf
    CHECK(sel[1] == Individual{0}); // leaf loses to center incumbent
    CHECK(sel[2] == Individual{1}); // equal leaves: incumbent stays
}

TEST_CASE("a frozen evolution collapses to the ranking prefix") {
    const Graph g = path_graph(10);
    const auto svet = identity_ordering(10);
    RdeParams params;
    params.seed_set_size = 3;
    params.population_size = 1;
    params.max_generations = 5;
    params.diversity_factor = 0.0;
    params.mutation_probability = 0.0;
    params.crossover_probability = 0.0;
    Rng rng(1);
    const CandidateSet cs = rand_rde(g, svet, params, rng);
    CHECK(cs.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(cs.occurrences == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("candidate set invariants on a random instance") {
    Rng graph_rng(500);
    const Graph g = random_graph(graph_rng, 60, 150);
    if (g.vertex_count() < 8) return;
    const auto svet = identity_ordering(g.vertex_count());
    RdeParams params;
    params.seed_set_size = 4;
    params.population_size = 6;
    params.max_generations = 20;
    Rng rng(123);
    const CandidateSet cs = rand_rde(g, svet, params, rng);

    REQUIRE(cs.vertices.size() == cs.occurrences.size());
    CHECK(cs.vertices.size() <= params.population_size * params.seed_set_size);
    std::set<VertexId> distinct(cs.vertices.begin(), cs.vertices.end());
    CHECK(distinct.size() == cs.vertices.size());

    std::uint32_t sum = 0;
    for (std::size_t i = 0; i < cs.occurrences.size(); ++i) {
        sum += cs.occurrences[i];
        CHECK(cs.occurrences[i] >= 1);
        CHECK(cs.occurrences[i] <= params.population_size);
        if (i > 0) {
            // Non-increasing occurrence counts, ties ascending by id.
            CHECK(cs.occurrences[i - 1] >= cs.occurrences[i]);
            if (cs.occurrences[i - 1] == cs.occurrences[i])
                CHECK(cs.vertices[i - 1] < cs.vertices[i]);
        }
    }
    CHECK(sum == params.population_size * params.seed_set_size);
}

TEST_CASE("identical seeds reproduce the candidate set bit for bit") {
    Rng graph_rng(501);
    const Graph g = random_graph(graph_rng, 40, 90);
    const auto svet = identity_ordering(g.vertex_count());
    RdeParams params;
    params.seed_set_size = 3;
    params.population_size = 5;
    params.max_generations = 15;

    Rng a(42), b(42), c(43);
    const CandidateSet ca = rand_rde(g, svet, params, a);
    const CandidateSet cb = rand_rde(g, svet, params, b);
    const CandidateSet cc = rand_rde(g, svet, params, c);
    CHECK(ca.vertices == cb.vertices);
    CHECK(ca.occurrences == cb.occurrences);
    const bool differs = ca.vertices != cc.vertices || ca.occurrences != cc.occurrences;
    CHECK(differs);
}

TEST_CASE("parameter validation names the offender") {
    RdeParams params;
    params.seed_set_size = 10;
    CHECK_THROWS_AS(params.validate(10), std::invalid_argument); // k == n
    params.seed_set_size = 2;
    params.division_p_low = 0.0;
    CHECK_THROWS_AS(params.validate(10), std::invalid_argument);
    params.division_p_low = 0.6;
    params.division_p_high = 0.5;
    CHECK_THROWS_AS(params.validate(10), std::invalid_argument);
    params.division_p_low = 0.1;
    params.division_p_high = 0.5;
    params.mutation_probability = 1.5;
    CHECK_THROWS_AS(params.validate(10), std::invalid_argument);
}
