#ifndef KCYCLE_RNG_HPP
#define KCYCLE_RNG_HPP

#include <cstdint>
#include <vector>

namespace kcycle {

// Splitmix64 stream. Hand-rolled so that sequences are identical on every
// platform (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Fans a root seed out to independent per-trial streams.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t z = root ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniformly random injection of {1..d} onto `count` slots: the first `count`
// entries of a random permutation of [1..d].
inline std::vector<int> random_label_injection(Rng& rng, int count, int d) {
    std::vector<int> pool(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(count));
    return pool;
}

}  // namespace kcycle

#endif
