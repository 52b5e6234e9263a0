#pragma once

#include <cstdint>
#include <string_view>

namespace cdx {

/// Deterministic splittable PRNG (splitmix64 core). The standard engines have
/// portable output but the standard distributions do not, and report bytes
/// must not depend on the platform, so sampling goes through this wrapper
/// exclusively.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free threshold sampling keeps the stream deterministic
        // while avoiding gross modulo bias for small n.
        std::uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }

    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Uniform double in [0,1), 53 bits.
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent stream for sample `index` of the check named `tag`,
    /// derived only from (seed, tag, index) so execution order cannot matter.
    static Rng derive(std::uint64_t master, std::string_view tag, std::uint64_t index) {
        std::uint64_t h = 1469598103934665603ULL; // FNV-1a over the tag
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        Rng mixer(master ^ h);
        mixer.state_ ^= 0x632be59bd9b4e019ULL * (index + 1);
        mixer.next();
        mixer.next();
        return mixer;
    }

  private:
    std::uint64_t state_;
};

} // namespace cdx
