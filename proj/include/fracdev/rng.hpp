#ifndef FRACDEV_RNG_HPP
#define FRACDEV_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace fracdev {

// Counter-based generator (Philox 2x64, 10 rounds; Salmon et al. 2011).
// The 128-bit counter is (draw counter, stream id), the key is the seed, so
// any two states with different (seed, stream) pairs produce independent
// sequences and a state is reproduced exactly by replaying the call sequence.
class RngState {
 public:
  RngState(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() {
    if (buf_pos_ == 2) {
      block_ = philox_block(counter_++, stream_, seed_);
      buf_pos_ = 0;
    }
    return block_[buf_pos_++];
  }

  // Uniform on [0, 1), 53-bit mantissa.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0, 1); safe for log().
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

  double exponential() { return -std::log(uniform_open()); }

  // Standard normal via Box-Muller, caching the second variate.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    const double a = 6.283185307179586476925286766559 * uniform01();
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::array<std::uint64_t, 2> philox_block(std::uint64_t c0,
                                                   std::uint64_t c1,
                                                   std::uint64_t key) {
    constexpr std::uint64_t kMul = 0xD2B74407B1CE6E93ULL;
    constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(kMul) * c0;
      const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
      const std::uint64_t lo = static_cast<std::uint64_t>(prod);
      c0 = hi ^ key ^ c1;
      c1 = lo;
      key += kWeyl;
    }
    return {c0, c1};
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> block_{};
  int buf_pos_ = 2;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fracdev

#endif  // FRACDEV_RNG_HPP
