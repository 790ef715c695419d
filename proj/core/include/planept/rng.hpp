#ifndef PLANEPT_RNG_HPP
#define PLANEPT_RNG_HPP

#include <cstdint>
#include <random>

namespace planept {

// Seeded RNG for "general position" choices.  std::uniform_int_distribution
// is not portable across standard libraries, so bounded draws are done by
// rejection on the raw 64-bit stream; identical seeds give identical choices
// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, n), n >= 1
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
    std::uint64_t seed_;
};

} // namespace planept

#endif
