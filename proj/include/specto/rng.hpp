#pragma once

#include <cstdint>
#include <vector>

namespace specto {

// Counter-based generator: every draw is a pure function of (seed, stream,
// counter), so results do not depend on call order or thread count.
// SplitMix64 finalizer over a Weyl-sequenced counter.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream ^ 0x7ea5'00d1'5ca1'ab1eULL))) {}

    std::uint64_t word(std::uint64_t counter) const {
        return mix(key_ + counter * 0x9e37'79b9'7f4a'7c15ULL);
    }

    // uniform in [0, 1) with 53 random bits
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
    }

    // little-endian 64-bit limbs for a P-bit fixed-point draw
    std::vector<std::uint64_t> limbs(std::uint64_t counter, int nbits) const {
        int nwords = (nbits + 63) / 64;
        std::vector<std::uint64_t> out(static_cast<std::size_t>(nwords));
        for (int w = 0; w < nwords; ++w)
            out[static_cast<std::size_t>(w)] = word(counter * 0x1'0000ULL + static_cast<std::uint64_t>(w));
        int excess = nwords * 64 - nbits;
        if (excess > 0) out.back() >>= excess;
        return out;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58'476d'1ce4'e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d0'49bb'1331'11ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
};

// Stream tags, one per randomized subsystem; keeps draws from distinct
// subsystems independent under a shared --seed.
enum class RngStream : std::uint64_t {
    McTorusSample = 1,
    QuadratureSample = 2,
    OmegaSample = 3,
    ParsevalCheck = 4,
    Generic = 99,
};

inline CounterRng make_rng(std::uint64_t seed, RngStream s) {
    return CounterRng(seed, static_cast<std::uint64_t>(s));
}

} // namespace specto
