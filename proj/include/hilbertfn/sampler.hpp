#pragma once

#include <cstdint>
#include <optional>

#include "error.hpp"

namespace hilbertfn {

/// Deterministic source of "generic" coordinates.
///
/// The stream is splitmix64 over a 64-bit state, so identical seeds give
/// bitwise identical draws on every platform. Independent sub-streams are
/// obtained with split(index) rather than by sharing one global generator.
///
/// When a bound B is set, every field draws integers uniformly from [-B, B]
/// instead of its native range; this lets the same integer configuration be
/// instantiated over F_p and over Q.
class GenericSampler {
public:
    explicit GenericSampler(std::uint64_t seed, std::optional<std::int64_t> bound = std::nullopt)
        : seed_(seed), state_(seed), bound_(bound) {
        if (bound_ && *bound_ <= 0) throw Error(Errc::bound_violation, "sampler bound must be positive");
    }

    std::uint64_t seed() const noexcept { return seed_; }
    const std::optional<std::int64_t>& bound() const noexcept { return bound_; }

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, n), n > 0, by rejection (no modulo bias).
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw Error(Errc::bound_violation, "uniform_below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw Error(Errc::bound_violation, "empty integer range");
        const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(uniform_below(width));
    }

    /// Child stream number `index`; does not advance this sampler.
    GenericSampler split(std::uint64_t index) const {
        return GenericSampler(mix(seed_ ^ mix(index + 0x632be59bd9b4e019ULL)), bound_);
    }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_;
    std::optional<std::int64_t> bound_;
};

} // namespace hilbertfn
