#pragma once

#include <cstdint>

namespace synthcat {

// Counter-based generator used everywhere randomness is needed.
//
// Draw n of stream k is the SplitMix64 finalizer applied to
// k + (n + 1) * 0x9E3779B97F4A7C15. Streams split hierarchically:
// substream(i) of stream k is the stream keyed by draw i of k. The layout
// used by the samplers is frozen as part of the output contract:
//
//   method stream  = seed stream split by method ordinal (pipeline runs)
//   record stream  = method/sampler stream split by record index
//   per-record draws advance one counter per node, in topological order
//     (Bayesian networks) or schema order (copula latent vector)
//
// Because every draw is addressable by (key, counter), outputs do not
// depend on how records are partitioned across workers.
std::uint64_t mix64(std::uint64_t key, std::uint64_t counter);

class RngStream {
  public:
    explicit RngStream(std::uint64_t key) : key_(key) {}

    RngStream substream(std::uint64_t index) const { return RngStream(mix64(key_, index)); }

    std::uint64_t next_u64() { return mix64(key_, counter_++); }

    // Uniform on [0, 1) with 53-bit resolution.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1); safe to pass through logs and quantile functions.
    double next_uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Zero-mean Laplace noise with the given scale.
    double next_laplace(double scale);

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace synthcat
