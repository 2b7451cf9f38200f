#include "fdrforge/rng.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace fdrforge {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::uint32_t mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi) {
  const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(prod >> 32);
  return static_cast<std::uint32_t>(prod);
}

inline Philox4x32::Counter round_once(const Philox4x32::Counter& ctr,
                                      const Philox4x32::Key& key) {
  std::uint32_t hi0 = 0;
  std::uint32_t hi1 = 0;
  const std::uint32_t lo0 = mulhilo(kPhiloxM0, ctr[0], hi0);
  const std::uint32_t lo1 = mulhilo(kPhiloxM1, ctr[2], hi1);
  return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  ctr = round_once(ctr, key);
  for (int r = 1; r < 10; ++r) {
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
    ctr = round_once(ctr, key);
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed, StreamDomain domain,
                       std::uint32_t replication, std::uint32_t unit)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      unit_(unit),
      replication_(replication),
      domain_(static_cast<std::uint32_t>(domain)) {}

void CounterRng::refill() {
  buf_ = Philox4x32::block({seq_++, unit_, replication_, domain_}, key_);
  pos_ = 0;
}

std::uint32_t CounterRng::next_u32() {
  if (pos_ == 4) refill();
  return buf_[pos_++];
}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_open_double() {
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double CounterRng::next_normal() { return normal_quantile(next_open_double()); }

std::uint64_t CounterRng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be >= 1");
  if (n == 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x < limit) return x % n;
  }
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw std::invalid_argument("normal_quantile: u must lie in (0,1)");
  return -M_SQRT2 * boost::math::erfc_inv(2.0 * u);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t context) {
  return mix64(seed ^ mix64(context));
}

std::uint64_t fnv1a64(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t fnv1a64(const char* s) { return fnv1a64(s, std::strlen(s)); }

}  // namespace fdrforge
