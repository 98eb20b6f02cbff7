#pragma once

// Counter-based random streams. A stream is fully determined by
// (seed, stream index); there is no shared state between streams, so work
// split by stream index gives the same numbers on any schedule.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace noma {

/// Philox4x32-10 (Salmon et al., SC'11) as a UniformRandomBitGenerator.
/// The 64-bit seed is the key; the high half of the 128-bit counter holds
/// the stream index and the low half counts blocks within the stream.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (index_ == 4) refill();
    return buffer_[index_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
  }

  /// Bijection applied to one counter block.
  static Block encrypt(Block counter, Key key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * counter[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * counter[2];
      counter = {static_cast<std::uint32_t>(p1 >> 32) ^ counter[1] ^ key[0],
                 static_cast<std::uint32_t>(p1),
                 static_cast<std::uint32_t>(p0 >> 32) ^ counter[3] ^ key[1],
                 static_cast<std::uint32_t>(p0)};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return counter;
  }

 private:
  void refill() {
    const Block ctr{static_cast<std::uint32_t>(block_),
                    static_cast<std::uint32_t>(block_ >> 32),
                    static_cast<std::uint32_t>(stream_),
                    static_cast<std::uint32_t>(stream_ >> 32)};
    buffer_ = encrypt(ctr, key_);
    ++block_;
    index_ = 0;
  }

  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  int index_ = 4;
};

/// Uniform on the open interval (0, 1) with 53 random bits.
template <class Rng>
double uniform_open01(Rng& rng) {
  const std::uint64_t hi = rng();
  const std::uint64_t lo = rng();
  const std::uint64_t bits = ((hi << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

/// Standard normal by Marsaglia's polar rejection method. Draws pairs but
/// returns one value so the consumed stream never depends on history.
template <class Rng>
double standard_normal(Rng& rng) {
  for (;;) {
    const double u = 2.0 * uniform_open01(rng) - 1.0;
    const double w = 2.0 * uniform_open01(rng) - 1.0;
    const double s = u * u + w * w;
    if (s < 1.0 && s > 0.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

/// Exact Gamma(shape, scale) variate: Marsaglia-Tsang squeeze/rejection for
/// shape >= 1, boosted by U^(1/shape) below 1.
template <class Rng>
double draw_gamma(double shape, double scale, Rng& rng) {
  double boost = 1.0;
  if (shape < 1.0) {
    boost = std::pow(uniform_open01(rng), 1.0 / shape);
    shape += 1.0;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open01(rng);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2 ||
        std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v * boost * scale;
    }
  }
}

}  // namespace noma
