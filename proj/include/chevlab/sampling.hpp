#pragma once

// Deterministic seeded sampling for verification sweeps.  Raw mt19937_64
// output with modulo indexing; distribution objects are avoided so reports
// are byte-identical across platforms.

#include "chevlab/group.hpp"

#include <random>

namespace chevlab {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    const RingElement& pick(const std::vector<RingElement>& pool) { return pool[index(pool.size())]; }

    std::vector<WordLetter> word(const Algebra& alg, const std::vector<RingElement>& pool,
                                 std::size_t length) {
        std::vector<WordLetter> w;
        for (std::size_t i = 0; i < length; ++i)
            w.push_back({static_cast<int>(index(static_cast<std::size_t>(alg.sys->count()))),
                         pool[index(pool.size())]});
        return w;
    }

    GroupElement group_element(const Algebra& alg, const Ring& ring,
                               const std::vector<RingElement>& pool, std::size_t length) {
        return word_element(alg, ring, word(alg, pool, length));
    }

    std::pair<int, int> orthogonal_pair(const RootSystem& sys) {
        for (;;) {
            int a = static_cast<int>(index(static_cast<std::size_t>(sys.count())));
            int b = static_cast<int>(index(static_cast<std::size_t>(sys.count())));
            if (a != b && sys.pairing(a, b) == 0) return {a, b};
        }
    }

private:
    std::mt19937_64 rng_;
};

/// Small integer pool for rings without enumeration (Z, polynomials).
inline std::vector<RingElement> sample_pool(const Ring& ring) {
    if (ring.is_finite()) return enumerate_elements(ring);
    std::vector<RingElement> out;
    for (int v = -2; v <= 2; ++v) out.push_back(ring.from_int(v));
    return out;
}

}  // namespace chevlab
