#pragma once

#include <cstdint>
#include <random>

namespace simonlab {

// Deterministic random source. std::mt19937_64 supplies the raw 64-bit
// stream; the bounded-int and unit-double mappings are implemented here
// because the std::*_distribution adapters are implementation-defined and
// would break byte-identical reruns across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound) by masked rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) {
            return 0;
        }
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(bound - 1 | 1);
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < bound) {
                return v;
            }
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Derived stream for per-item work (dataset entries, sweep cells).
    // splitmix64 finalizer keeps nearby (seed, index) pairs uncorrelated.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed ^ (index + 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 engine_;
};

template <typename Container>
void shuffle(Container& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace simonlab
