#pragma once

#include <cstdint>
#include <string_view>

namespace phee {

// SplitMix64 generator. Chosen over std::mt19937 because the entire pipeline
// must replay bit-identically across platforms and stdlib versions, and
// std::uniform_*_distribution is not portable. Streams derived from
// (master_seed, stream_id) are independent for all practical purposes: the
// seed goes through two full mix rounds before use.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent stream keyed by (master_seed, stream_id). Same key -> same
    // sequence, forever; different stream_id -> decorrelated sequence.
    static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    // Uniform double in [0, 1), 53 random bits.
    double next_double();

    // Uniform double in [lo, hi).
    double next_double(double lo, double hi);

    // Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
    std::uint64_t next_below(std::uint64_t bound);

    // True with probability p (p <= 0 -> never, p >= 1 -> always).
    bool bernoulli(double p);

private:
    std::uint64_t state_;
};

// Finalizer used both for stream derivation and for hash mixing.
std::uint64_t mix64(std::uint64_t z);

// FNV-1a 64-bit. Stable content hash for deriving experiment cell seeds from
// strings/ints; never use std::hash here (implementation-defined).
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull);
std::uint64_t fnv1a_u64(std::uint64_t value, std::uint64_t h);

} // namespace phee
