#include "stabilis/sampling.hpp"

#include <algorithm>

namespace stabilis {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_state(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t s = seed ^ (k * 0xD1B54A32D192ED03ULL);
  splitmix64(s);
  return s;
}

mpq_class random_positive(std::uint64_t& state, unsigned height) {
  unsigned h = std::max(1u, height);
  mpq_class q(static_cast<unsigned long>(1 + splitmix64(state) % h),
              static_cast<unsigned long>(1 + splitmix64(state) % h));
  q.canonicalize();
  return q;
}

mpq_class random_signed(std::uint64_t& state, unsigned height) {
  unsigned h = std::max(1u, height);
  mpq_class q(static_cast<unsigned long>(splitmix64(state) % (h + 1)),
              static_cast<unsigned long>(1 + splitmix64(state) % h));
  q.canonicalize();
  if (splitmix64(state) & 1u) q = -q;
  return q;
}

Line sample_line(std::size_t nvars, std::size_t k, const SamplingConfig& cfg) {
  Line line;
  line.lambda.assign(nvars, mpq_class(1));
  line.alpha.assign(nvars, Scalar(0));
  if (k == 0) return line;
  const unsigned long h = std::max(1u, cfg.height);
  const std::size_t sweep = std::max<std::size_t>(1, cfg.sample_count / 4);
  if (k < sweep) {
    for (std::size_t i = 0; i < nvars; ++i) {
      unsigned long a = 1 + (k * (2 * i + 3) + i) % h;
      unsigned long b = 1 + (k * (7 * i + 5) + 3 * i) % h;
      long c = static_cast<long>((k * (3 * i + 1) * 11 + 5 * i) % (2 * h + 1)) - static_cast<long>(h);
      unsigned long d = 1 + (k * 13 + i) % h;
      line.lambda[i] = mpq_class(a, b);
      line.lambda[i].canonicalize();
      line.alpha[i] = Scalar(mpq_class(c, d));
    }
    return line;
  }
  std::uint64_t s = stream_state(cfg.seed, k);
  for (std::size_t i = 0; i < nvars; ++i) {
    line.lambda[i] = random_positive(s, cfg.height);
    line.alpha[i] = Scalar(random_signed(s, cfg.height));
  }
  switch (k % 3) {
    case 1:
      for (std::size_t i = 0; i < nvars; ++i) line.alpha[i] = Scalar(line.alpha[i].re(), random_positive(s, cfg.height));
      break;
    case 2: {
      std::size_t free = splitmix64(s) % nvars;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (i == free) continue;
        line.lambda[i] = 0;
        line.alpha[i] = Scalar(line.alpha[i].re(), random_positive(s, cfg.height));
      }
      break;
    }
    default: break;
  }
  return line;
}

}  // namespace stabilis
