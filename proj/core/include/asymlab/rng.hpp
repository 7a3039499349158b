#pragma once

#include <cstdint>
#include <string_view>

namespace asymlab {

/// Counter-based deterministic random stream. Draws depend only on
/// (seed, counter), so identical streams replay identically on every
/// platform; substreams derived by label never collide for distinct labels.
///
/// Toggling one consumer's draws never shifts another's as long as each
/// consumer owns its own labeled substream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {}

    /// Independent stream for a named sub-task.
    RngStream substream(std::string_view label) const;
    /// Independent stream for an indexed sub-task (image i, view t, ...).
    RngStream substream(std::uint64_t index) const;

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_uniform();
    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi);
    /// Standard normal via Box-Muller (pair cached).
    double next_gaussian();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace asymlab
