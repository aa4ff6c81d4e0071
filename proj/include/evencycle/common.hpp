#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace evencycle {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Errors. One type per contract violation named by the operation contracts.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct SelfLoopError : Error {
  using Error::Error;
};
struct DuplicateEdgeError : Error {
  using Error::Error;
};
struct SourceNotAllowedError : Error {
  using Error::Error;
};
struct OverflowError : Error {
  using Error::Error;
};
struct SetsOverlapError : Error {
  using Error::Error;
};
struct BudgetExceededError : Error {
  using Error::Error;
};
struct EmptyGraphError : Error {
  using Error::Error;
};
struct OutOfRangeError : Error {
  using Error::Error;
};
struct EmptyAError : Error {
  using Error::Error;
};
struct NoEdgesError : Error {
  using Error::Error;
};
struct InvalidArgumentError : Error {
  using Error::Error;
};
// Raised when a verified internal invariant fails; maps to CLI exit code 4.
struct InternalError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Checked 128-bit counters. Overflow is an error, never a silent wrap.
// ---------------------------------------------------------------------------

inline constexpr u128 u128_max() { return ~static_cast<u128>(0); }

inline u128 checked_add(u128 a, u128 b) {
  if (a > u128_max() - b) throw OverflowError("128-bit counter overflow in addition");
  return a + b;
}

inline u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > u128_max() / a) throw OverflowError("128-bit counter overflow in multiplication");
  return a * b;
}

inline std::string to_string(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(x % 10)));
    x /= 10;
  }
  return {s.rbegin(), s.rend()};
}

// ---------------------------------------------------------------------------
// Deterministic RNG. SplitMix64 streams; per-use streams are derived by
// hashing (seed, tags...) so results never depend on evaluation order.
// ---------------------------------------------------------------------------

inline u64 mix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline u64 derive_stream(u64 seed, u64 a = 0, u64 b = 0, u64 c = 0) {
  u64 h = mix64(seed ^ 0x243f6a8885a308d3ULL);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    u64 z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n). Lemire reduction; deterministic across platforms.
  u64 below(u64 n) {
    if (n == 0) throw InvalidArgumentError("below(0)");
    return static_cast<u64>((static_cast<u128>(next()) * n) >> 64);
  }

  bool coin() { return next() & 1; }

 private:
  u64 state_;
};

// ---------------------------------------------------------------------------
// FNV-1a content digest for report input hashes.
// ---------------------------------------------------------------------------

inline u64 fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  u64 h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline u64 fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// ---------------------------------------------------------------------------
// Small integer helpers.
// ---------------------------------------------------------------------------

inline u32 floor_log2(u64 x) {
  if (x == 0) throw InvalidArgumentError("floor_log2(0)");
  return static_cast<u32>(std::bit_width(x) - 1);
}

inline u32 ceil_log2(u64 x) {
  if (x == 0) throw InvalidArgumentError("ceil_log2(0)");
  return x == 1 ? 0 : static_cast<u32>(std::bit_width(x - 1));
}

// The power of two n' in [n, 2n); n >= 1.
inline u64 pow2_at_least(u64 n) {
  if (n == 0) throw InvalidArgumentError("pow2_at_least(0)");
  return u64{1} << ceil_log2(n);
}

inline u64 saturating_mul(u64 a, u64 b) {
  u128 p = static_cast<u128>(a) * b;
  return p > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max()
                                             : static_cast<u64>(p);
}

}  // namespace evencycle
