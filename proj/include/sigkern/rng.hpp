#pragma once

#include <cmath>
#include <cstdint>

namespace sigkern {

/// Stateless counter-based generator: every draw is a hash of
/// (seed, stream, counter), so per-path substreams are reproducible under
/// any parallel schedule.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    CounterRng substream(std::uint64_t s) const {
        return CounterRng(seed_, hash(stream_ ^ (0x9e3779b97f4a7c15ULL + s)));
    }

    std::uint64_t next_u64() { return hash(seed_ ^ hash(stream_ ^ hash(counter_++))); }

    /// Uniform in [0, 1).
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (one value kept in reserve).
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform(), u2 = next_uniform();
        if (u1 <= 0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t hash(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t seed_, stream_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sigkern
