#include "phee/rng.hpp"

namespace phee {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

Rng Rng::stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    // Two mix rounds so that adjacent (seed, stream) pairs land far apart.
    return Rng(mix64(master_seed ^ mix64(stream_id + 0x9e3779b97f4a7c15ull)));
}

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    // Rejection below the largest multiple of bound; expected < 2 draws.
    const std::uint64_t limit = bound * ((~0ull) / bound);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

bool Rng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_double() < p;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a_u64(std::uint64_t value, std::uint64_t h) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace phee
