#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "evencycle/common.hpp"

namespace evencycle {

using Rat = mpq_class;
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
  r.canonicalize();
  return r;
}

// Largest z with z^e <= x (x >= 0).
inline Int floor_root(const Int& x, unsigned long e) {
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

// floor(x^{a/b}) for integer x >= 0.
inline Int floor_pow_frac(const Int& x, unsigned long a, unsigned long b) {
  return floor_root(int_pow(x, a), b);
}

// ceil(x^{a/b}) for integer x >= 0.
inline Int ceil_pow_frac(const Int& x, unsigned long a, unsigned long b) {
  Int xa = int_pow(x, a);
  Int r = floor_root(xa, b);
  if (int_pow(r, b) != xa) r += 1;
  return r;
}

inline u64 to_u64(const Int& x) {
  if (x < 0 || !x.fits_ulong_p()) throw OverflowError("integer does not fit u64: " + x.get_str());
  return static_cast<u64>(x.get_ui());
}

inline u64 to_u64_saturating(const Int& x) {
  if (x < 0) throw InvalidArgumentError("negative value");
  return x.fits_ulong_p() ? static_cast<u64>(x.get_ui()) : std::numeric_limits<u64>::max();
}

inline Int int_from_u128(u128 x) {
  Int hi(static_cast<unsigned long>(x >> 64));
  Int lo(static_cast<unsigned long>(x & 0xffffffffffffffffULL));
  return (hi << 64) + lo;
}

// Canonical "p" or "p/q" rendering used by every report writer.
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p/q", integers, plain decimals ("0.25") and scientific notation
// ("1e-9", "2.5E3"); the result is exact.
inline std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0) return std::nullopt;
    if (den.set_str(text.substr(slash + 1), 10) != 0) return std::nullopt;
    if (den == 0) return std::nullopt;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  std::string mantissa = text;
  long exponent10 = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    try {
      exponent10 = std::stol(text.substr(epos + 1));
    } catch (...) {
      return std::nullopt;
    }
  }
  bool negative = false;
  std::string digits = mantissa;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits = digits.substr(1);
  }
  auto dot = digits.find('.');
  if (dot != std::string::npos) {
    exponent10 -= static_cast<long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  Int num;
  if (num.set_str(digits, 10) != 0) return std::nullopt;
  if (negative) num = -num;
  Rat r(num, 1);
  if (exponent10 >= 0)
    r *= Rat(int_pow(Int(10), static_cast<unsigned long>(exponent10)), 1);
  else
    r /= Rat(int_pow(Int(10), static_cast<unsigned long>(-exponent10)), 1);
  r.canonicalize();
  return r;
}

}  // namespace evencycle
