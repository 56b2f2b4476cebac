#include "prowras/rng.hpp"

#include <cmath>
#include <numeric>

namespace prowras {

std::size_t Rng::uniform_index(std::size_t n) {
    // rejection below 2^64 mod n keeps the draw exactly uniform
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - un) % un;
    for (;;) {
        const std::uint64_t x = eng_();
        if (x >= threshold) return static_cast<std::size_t>(x % un);
    }
}

double Rng::normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_index(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

std::vector<double> Rng::simplex_weights(std::size_t k) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (auto& x : w) {
        x = exponential();
        sum += x;
    }
    if (sum <= 0.0) {  // astronomically unlikely; keep the invariant anyway
        for (auto& x : w) x = 1.0 / static_cast<double>(k);
        return w;
    }
    for (auto& x : w) x /= sum;
    return w;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

SeedMixer::SeedMixer(std::uint64_t base) : h_(splitmix64(base)) {}

SeedMixer& SeedMixer::mix(std::string_view part) {
    h_ = splitmix64(h_ ^ fnv1a(part));
    return *this;
}

SeedMixer& SeedMixer::mix(std::uint64_t part) {
    h_ = splitmix64(h_ ^ (part * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull));
    return *this;
}

}  // namespace prowras
