#include "monoseg/random_walk.hpp"

#include <cmath>

namespace monoseg {

double NormalStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // top 53 bits -> (0, 1]; u1 never hits 0 so the log is finite
    const double u1 = static_cast<double>((rng_() >> 11) + 1) * 0x1p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1p-53;
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = two_pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::vector<double> random_walk(std::size_t n, std::uint64_t seed) {
    std::vector<double> ys(n);
    if (n == 0) return ys;
    ys[0] = 0.0;
    NormalStream normals(seed);
    for (std::size_t i = 1; i < n; ++i) ys[i] = ys[i - 1] + normals.next();
    return ys;
}

}  // namespace monoseg
