#pragma once

#include <cstdint>
#include <string_view>

namespace congr {

/// FNV-1a over the bytes of s. Used to derive stable stream tags from check
/// names so distinct check families never share a random stream.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

/// Deterministic pseudo-random generator (splitmix64). The output stream
/// depends only on the seed, never on the platform or standard library, so
/// seeded runs reproduce byte-for-byte everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniformly-ish distributed value in [0, bound). Exactly one draw per
    /// call, so consumption is schedule-independent. bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Integer in the inclusive range [lo, hi].
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next_u64() & 1) != 0; }

    /// Independent substream for one trial of a batch run. Derived only from
    /// (seed, trial); parallel trial execution cannot perturb the streams.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ull * (trial + 1)));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace congr
