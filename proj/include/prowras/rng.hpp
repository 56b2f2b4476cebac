#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace prowras {

// Deterministic random source. All distributions are implemented by hand on
// top of mt19937_64 raw draws so that identical seeds give byte-identical
// results on every platform (std::uniform_real_distribution and friends are
// not pinned by the standard).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform on [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // unbiased uniform integer on [0, n); n >= 1
    std::size_t uniform_index(std::size_t n);

    // standard normal via Box-Muller (two raw draws per call, no cached spare)
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }

    // unit-rate exponential
    double exponential() { return -std::log1p(-uniform01()); }

    // k distinct indices from [0, n), order as selected (partial Fisher-Yates)
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    // uniform point on the (k-1)-simplex: normalized unit exponentials
    std::vector<double> simplex_weights(std::size_t k);

  private:
    std::mt19937_64 eng_;
};

// Stream-splitting helper: mixes a base seed with string/integer context parts
// (dataset name, oversampler, fold number, ...) into an independent child seed.
class SeedMixer {
  public:
    explicit SeedMixer(std::uint64_t base);
    SeedMixer& mix(std::string_view part);
    SeedMixer& mix(std::uint64_t part);
    std::uint64_t value() const { return h_; }

  private:
    std::uint64_t h_;
};

}  // namespace prowras
