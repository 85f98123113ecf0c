#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace monoseg {

/// Deterministic standard-normal stream: std::mt19937_64 words mapped to
/// uniforms in (0, 1] through their top 53 bits, then paired into deviates
/// with the Box-Muller transform. The engine is fully specified by the
/// standard, so a seed names the same sequence everywhere.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

    double next();

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Random walk y[0] = 0, y[i+1] = y[i] + e with e ~ N(0, 1) drawn from
/// NormalStream(seed). Identical seed, identical values.
std::vector<double> random_walk(std::size_t n, std::uint64_t seed);

}  // namespace monoseg
