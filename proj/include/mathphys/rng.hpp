#ifndef MATHPHYS_RNG_HPP
#define MATHPHYS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace mathphys::numerics {

// Value-type handle for a reproducible random stream.  Identical
// (seed, stream_id) pairs always produce identical sequences; distinct
// stream_ids give statistically independent streams, so workers shard by
// substream instead of sharing one engine.
struct RandomStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    [[nodiscard]] RandomStream substream(std::uint64_t k) const {
        return RandomStream{seed, mix(stream_id, k)};
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        // splitmix64 finalizer over the pair; cheap and well scrambled.
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256** seeded through splitmix64, the usual pairing.
class RandomEngine {
public:
    explicit RandomEngine(RandomStream stream) {
        std::uint64_t x = RandomStream::mix(stream.seed, stream.stream_id);
        for (auto& si : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            si = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Draw from density (1/tau) e^{-t/tau}.  1-u is in (0,1], so the log is
// finite and every draw is >= 0.
inline double sample_exponential(RandomEngine& eng, double tau) {
    return -tau * std::log1p(-eng.uniform());
}

} // namespace mathphys::numerics

#endif
