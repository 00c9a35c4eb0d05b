#ifndef TRG_RNG_HPP
#define TRG_RNG_HPP

#include <cstdint>
#include <vector>

namespace trg {

// Identifies one reproducible random stream.  Equal (master_seed, stream_id)
// always produce the same draws, independent of platform and of any other
// stream, so parallel trials just use distinct stream ids.
struct RngSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

// Counter-free splittable generator built on SplitMix64.  The state is a hash
// of (master_seed, stream_id, domain_tag); the tag lets one logical stream
// carry several independent substreams (graph 1, graph 2, arrival order...)
// without colliding with neighbouring stream ids.
class Rng {
public:
    explicit Rng(RngSpec spec, std::uint64_t domain_tag = 0) {
        std::uint64_t s = spec.master_seed;
        detail::splitmix64(s);
        s ^= 0xd1b54a32d192ed03ULL * (spec.stream_id + 1);
        detail::splitmix64(s);
        s ^= 0xeb44accab455d165ULL * (domain_tag + 1);
        detail::splitmix64(s);
        state_ = s;
    }

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Substream tags used across the library.
enum : std::uint64_t {
    kRngTagDefault = 0,
    kRngTagGraph1 = 1,
    kRngTagGraph2 = 2,
    kRngTagArrival = 3,
};

} // namespace trg

#endif
