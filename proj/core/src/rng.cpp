#include "asymlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace asymlab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer; full 64-bit avalanche.
std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix(a ^ (b + kGolden + (a << 6) + (a >> 2)));
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

RngStream RngStream::substream(std::string_view label) const {
    return RngStream(combine(seed_, fnv1a(label)));
}

RngStream RngStream::substream(std::uint64_t index) const {
    return RngStream(combine(seed_, mix(index + kGolden)));
}

std::uint64_t RngStream::next_u64() {
    return mix(seed_ + kGolden * ++counter_);
}

double RngStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_uniform();
}

double RngStream::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted away from 0 so log stays finite.
    double u1 = next_uniform();
    double u2 = next_uniform();
    u1 = (u1 <= 0.0) ? 0x1.0p-53 : u1;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace asymlab
