#ifndef FDRFORGE_RNG_HPP
#define FDRFORGE_RNG_HPP

#include <array>
#include <cstdint>

namespace fdrforge {

// Philox4x32-10 counter-based generator. One call encrypts a 128-bit
// counter under a 64-bit key into four independent 32-bit words, so any
// point of the stream can be generated without sequencing through the
// rest. This is what makes replications reproducible under an arbitrary
// worker count: every draw is addressed, not iterated.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);
};

// Stream domains keep draws for different purposes out of each other's
// counter space within one replication.
enum class StreamDomain : std::uint32_t {
  Coordinate = 0,   // unit = p-value coordinate index
  BlockFactor = 1,  // unit = dependence-block index
  Permutation = 2,  // unit unused
};

// A lazily evaluated stream addressed by (seed, domain, replication, unit).
// Equal addresses always yield the identical sequence.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, StreamDomain domain, std::uint32_t replication,
             std::uint32_t unit);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0,1) with 53 random bits.
  double next_double();

  // Uniform on (0,1), safe as input to inverse-CDF transforms.
  double next_open_double();

  // Standard normal via the inverse CDF.
  double next_normal();

  // Uniform integer on [0, n), unbiased (rejection sampling). n >= 1.
  std::uint64_t next_below(std::uint64_t n);

 private:
  void refill();

  Philox4x32::Key key_;
  std::uint32_t unit_;
  std::uint32_t replication_;
  std::uint32_t domain_;
  std::uint32_t seq_ = 0;
  Philox4x32::Counter buf_{};
  int pos_ = 4;
};

// Standard normal CDF and quantile (double precision via erfc / erfc_inv).
double normal_cdf(double z);
double normal_quantile(double u);

// SplitMix64 finalizer; used to derive independent sub-seeds from a user
// seed plus context tags so distinct experiments never share streams.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t context);

// FNV-1a over a byte string; stable across platforms, used for stream
// contexts and sweep cell keys.
std::uint64_t fnv1a64(const void* data, std::size_t n);
std::uint64_t fnv1a64(const char* s);

}  // namespace fdrforge

#endif  // FDRFORGE_RNG_HPP
