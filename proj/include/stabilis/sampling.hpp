#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "stabilis/scalar.hpp"

namespace stabilis {

struct SamplingConfig {
  std::size_t sample_count = 64;
  std::uint64_t seed = 1;
  unsigned height = 32;
  // Cross-check proper position through a second reduction.
  bool strict_mode = false;
  // Sampled acceptance is reported as inconclusive.
  bool require_certified = false;
  // 1 forces the serial kernels; 0 leaves the choice to OpenMP.
  int threads = 0;

  static SamplingConfig certification() {
    SamplingConfig c;
    c.sample_count = 256;
    return c;
  }
};

std::uint64_t splitmix64(std::uint64_t& state);
// Independent stream for sample k.
std::uint64_t stream_state(std::uint64_t seed, std::uint64_t k);

// t -> lambda t + alpha with lambda >= 0 and Im alpha >= 0, every coordinate moving or lifted off
// the real axis, so the open upper half-plane in t lands inside H^n.
struct Line {
  std::vector<mpq_class> lambda;
  std::vector<Scalar> alpha;
};

// Line number k: index 0 is the diagonal through the origin, the first quarter is a fixed
// sweep of real lines, the rest is drawn from the seeded stream and cycles through real
// lines, lines with complex offsets, and coordinate sections.
Line sample_line(std::size_t nvars, std::size_t k, const SamplingConfig& cfg);

// Rational p/q with 1 <= p, q <= height.
mpq_class random_positive(std::uint64_t& state, unsigned height);
// Rational +-p/q with 0 <= p <= height, 1 <= q <= height.
mpq_class random_signed(std::uint64_t& state, unsigned height);

}  // namespace stabilis
