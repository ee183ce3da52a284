#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace ambc {

/// Random stream with a fully pinned draw discipline so that results are
/// reproducible bit-for-bit across runs and platforms: raw mt19937_64 words,
/// uniforms from the top 53 bits, normals via Box-Muller. std::*_distribution
/// is avoided because its algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_word() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// One Box-Muller pair of independent standard normals.
  /// Consumes exactly two engine words.
  std::pair<double, double> normal_pair() {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  /// Circularly symmetric complex Gaussian with E[|h|^2] = variance.
  /// Consumes exactly one normal pair (two engine words).
  std::complex<double> cgauss(double variance) {
    const auto [a, b] = normal_pair();
    const double scale = std::sqrt(variance / 2.0);
    return {scale * a, scale * b};
  }

  /// Fair bit.
  int bit() { return uniform01() < 0.5 ? 0 : 1; }

  /// Uniform integer in [0, bound). bound must be < 2^53; the deterministic
  /// floor mapping keeps the stream identical across platforms.
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(bound));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Derives an independent stream seed from a master seed and a lineage path
/// (e.g. {"sweep", "snr=10", "trial=7"}). FNV-1a over the master bytes and
/// labels (0x1F separates labels), finished with a splitmix64 mix. Trials can
/// therefore run on any worker in any order and still see identical streams.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::span<const std::string> path) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  constexpr std::uint64_t kPrime = 0x100000001b3ULL;
  for (int i = 0; i < 8; ++i) {
    h = (h ^ ((master >> (8 * i)) & 0xFF)) * kPrime;
  }
  for (const auto& label : path) {
    for (unsigned char c : label) {
      h = (h ^ c) * kPrime;
    }
    h = (h ^ 0x1FULL) * kPrime;
  }
  return detail::splitmix64(h);
}

inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::string> path) {
  std::vector<std::string> labels(path);
  return derive_seed(master, std::span<const std::string>(labels));
}

}  // namespace ambc
