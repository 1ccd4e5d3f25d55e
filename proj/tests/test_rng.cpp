#include "phee/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

using namespace phee;

TEST_CASE("same seed replays the same sequence") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("streams with different ids diverge, same id matches") {
    Rng a = Rng::stream(7, 0);
    Rng b = Rng::stream(7, 1);
    Rng c = Rng::stream(7, 0);
    bool any_diff = false;
    for (int i = 0; i < 16; ++i) {
        const auto av = a.next_u64();
        if (av != b.next_u64()) any_diff = true;
        CHECK(av == c.next_u64());
    }
    CHECK(any_diff);
}

TEST_CASE("next_double stays in [0,1) and looks uniform") {
    Rng rng(99);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.next_double();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        sum += x;
    }
    // Mean of U(0,1): 0.5, sd of the mean = 1/sqrt(12 n) ~ 0.0009.
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("next_double(lo,hi) respects the interval") {
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.next_double(0.1, 0.5);
        REQUIRE(x >= 0.1);
        REQUIRE(x < 0.5);
    }
}

TEST_CASE("next_below is unbiased over a small modulus") {
    Rng rng(11);
    std::vector<int> counts(7, 0);
    const int n = 70000;
    for (int i = 0; i < n; ++i) ++counts[rng.next_below(7)];
    for (int c : counts) {
        // Binomial(70000, 1/7): sd ~ 92.6; allow 5 sigma.
        CHECK(std::abs(c - 10000) < 464);
    }
}

TEST_CASE("next_below(1) is always zero") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) CHECK(rng.next_below(1) == 0);
}

TEST_CASE("bernoulli edge cases consume no randomness surprises") {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        CHECK_FALSE(rng.bernoulli(0.0));
        CHECK(rng.bernoulli(1.0));
    }
    int hits = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) hits += rng.bernoulli(0.3);
    CHECK(std::abs(hits - 30000) < 5 * std::sqrt(n * 0.3 * 0.7));
}

TEST_CASE("mix64 has no obvious fixed point at small inputs") {
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 0; i < 100; ++i) out.insert(mix64(i));
    CHECK(out.size() == 100);
}

TEST_CASE("fnv1a matches the published test vectors") {
    // Standard FNV-1a 64: "" -> offset basis, "a" -> 0xaf63dc4c8601ec8c.
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("fnv1a_u64 differs from hashing nothing and is order sensitive") {
    const std::uint64_t h0 = fnv1a("x");
    CHECK(fnv1a_u64(1, h0) != h0);
    CHECK(fnv1a_u64(1, fnv1a_u64(2, h0)) != fnv1a_u64(2, fnv1a_u64(1, h0)));
}
