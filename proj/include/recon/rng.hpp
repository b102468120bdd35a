#pragma once

#include <cstdint>
#include <random>

namespace recon {

// Deterministic random numbers. mt19937_64 is fully specified by the
// standard; the std:: distributions are not, so doubles are derived from
// the raw engine output directly. Same seed, same stream, everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0,1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // uniform integer in [0,n)
    int below(int n) { return static_cast<int>(uniform() * n) % n; }

    std::uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace recon
