#pragma once

#include "symcheck/scalar.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace symcheck {

/// Deterministic splitmix64 generator. Randomized checks derive their stream
/// from (global seed, pair id, check name) so that checks are independent yet
/// reproducible bit-for-bit across runs and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return h;
  }

  static Rng scoped(std::uint64_t global_seed, std::string_view pair_id,
                    std::string_view check) {
    std::uint64_t h = fnv1a(pair_id);
    h = (h ^ fnv1a(check)) * 0x9e3779b97f4a7c15ULL;
    return Rng(h ^ (global_seed + 0x9e3779b97f4a7c15ULL));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi]; the modulo bias is irrelevant for test sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Integer coordinate in the sampling window used throughout the tool.
  Scalar small_int() { return Scalar(static_cast<int>(uniform_int(-5, 5))); }

  std::vector<Scalar> small_int_vector(std::size_t n) {
    std::vector<Scalar> v(n);
    for (Scalar& s : v) s = small_int();
    return v;
  }

  /// Small Gaussian rational, used by field-axiom tests.
  Scalar small_gaussian() {
    Rational re = Rational(uniform_int(-5, 5)) / Rational(uniform_int(1, 4));
    Rational im = Rational(uniform_int(-5, 5)) / Rational(uniform_int(1, 4));
    return Scalar{re, im};
  }

 private:
  std::uint64_t state_;
};

}  // namespace symcheck
