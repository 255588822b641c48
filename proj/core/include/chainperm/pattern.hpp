#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainperm/permutation.hpp"

namespace chainperm {

enum class PatternKind { classical, consecutive };

/// A permutation of length 1..9 to be avoided, either as an arbitrary
/// subsequence (classical) or at adjacent positions (consecutive).
class Pattern {
 public:
  static constexpr std::size_t kMaxLength = 9;

  /// Throws BadPattern if perm is empty or longer than kMaxLength.
  Pattern(Permutation perm, PatternKind kind = PatternKind::classical);

  const Permutation& perm() const noexcept { return perm_; }
  PatternKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return perm_.size(); }
  bool is_classical() const noexcept { return kind_ == PatternKind::classical; }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_;
  }

 private:
  friend class Matcher;

  Permutation perm_;
  PatternKind kind_;
  // For entry j, the index of the previous entry (k < j) with the closest
  // smaller / larger value, or -1. Fixes the relative order of a match as it
  // is built left to right.
  std::array<std::int8_t, kMaxLength> below_{};
  std::array<std::int8_t, kMaxLength> above_{};
};

/// "213" is classical, "~213" consecutive. Throws BadPattern.
Pattern parse_pattern(std::string_view text);

std::string to_string(const Pattern& p);

/// Canonical ordering of patterns inside a slot: by text form.
bool pattern_less(const Pattern& a, const Pattern& b);

bool contains(const Permutation& pi, const Pattern& p);

/// Containment in any sequence of distinct values (not necessarily 1..n).
bool contains(std::span<const std::uint8_t> seq, const Pattern& p);

/// True iff seq has a classical occurrence of p whose last entry is
/// seq.back(). Prefix-pruned generation relies on this: a prefix contains p
/// iff some prefix of it has such an occurrence.
bool contains_ending_at_last(std::span<const std::uint8_t> seq, const Pattern& p);

inline bool avoids(const Permutation& pi, const Pattern& p) { return !contains(pi, p); }

/// True iff pi avoids every pattern in ps; vacuously true for an empty set.
bool avoids_all(const Permutation& pi, std::span<const Pattern> ps);

// Linear-time recognisers for the classes the enumeration relies on.

/// Increasing then decreasing; exactly Av(213, 312).
bool is_unimodal(const Permutation& pi);

/// Direct sum of eps blocks d 1 2 ... (d-1); exactly Av(231, 321).
bool is_layered_eps(const Permutation& pi);

/// Av(312), via stack-sortability of the reverse-complement.
bool avoids_312(const Permutation& pi);

}  // namespace chainperm
