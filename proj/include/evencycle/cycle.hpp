#pragma once

#include <compare>
#include <span>
#include <vector>

#include "evencycle/graph.hpp"

namespace evencycle {

/// A simple cycle on 2k distinct vertices in canonical form: the
/// lexicographically smallest sequence over all rotations and reflections.
/// Two Cycle values are equal iff they denote the same subgraph cycle.
struct Cycle {
  std::vector<u32> v;

  // Writes the lexicographically smallest rotation/reflection of seq into
  // out. Allocation-free apart from out's own growth.
  static void canonical_sequence(std::span<const u32> seq, std::vector<u32>& out) {
    const std::size_t len = seq.size();
    if (len < 4 || len % 2 != 0) throw InvalidArgumentError("cycle length must be even and >= 4");
    out.assign(seq.begin(), seq.end());
    constexpr std::size_t kMaxLen = 64;
    if (len > kMaxLen) throw InvalidArgumentError("cycle too long");
    u32 cand[kMaxLen];
    for (int direction = 0; direction < 2; ++direction) {
      for (std::size_t shift = 0; shift < len; ++shift) {
        bool smaller = false, decided = false;
        for (std::size_t j = 0; j < len; ++j) {
          std::size_t idx = direction == 0 ? (shift + j) % len : (shift + len - j) % len;
          cand[j] = seq[idx];
          if (!decided && cand[j] != out[j]) {
            smaller = cand[j] < out[j];
            decided = true;
            if (!smaller) break;
          }
        }
        if (decided && smaller)
          for (std::size_t j = 0; j < len; ++j) out[j] = cand[j];
      }
    }
  }

  static Cycle from_sequence(std::span<const u32> seq) {
    Cycle c;
    canonical_sequence(seq, c.v);
    return c;
  }

  std::size_t length() const { return v.size(); }

  bool is_cycle_of(const Graph& g) const {
    if (v.size() < 4) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] >= g.n()) return false;
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] == v[j]) return false;
      if (!g.has_edge(v[i], v[(i + 1) % v.size()])) return false;
    }
    return true;
  }

  auto operator<=>(const Cycle&) const = default;
};

}  // namespace evencycle
