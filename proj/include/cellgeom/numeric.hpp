#pragma once

// Arbitrary-precision integer and rational carriers shared by every module.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cellgeom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error raised for malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Uses plain modular reduction so that a seed
/// gives the same stream on every standard library.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cellgeom
