#pragma once

/**
 * @file chain.hpp
 * @brief Chains of pattern sets and chain avoidance.
 *
 * A permutation pi avoids the chain (S_1 : S_2 : ... : S_k) when pi^i avoids
 * every pattern of S_i. An empty slot places no requirement on its power. An
 * optional tail T ("T^inf") additionally constrains every power pi^i with
 * i > k.
 *
 * Text form (ASCII, whitespace ignored):
 *
 *   chain   := "(" slot (":" slot)* ["^inf"] ")"
 *   slot    := "_" | pattern ("," pattern)*
 *   pattern := ["~"] digit+
 *
 * "^inf" may only follow the last slot, which then becomes the tail. "∅" and
 * "^∞" are accepted as aliases; the printer only emits the ASCII forms.
 */

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainperm/pattern.hpp"
#include "chainperm/permutation.hpp"

namespace chainperm {

/// Patterns constraining one power; kept sorted by text form, no duplicates.
using PatternSet = std::vector<Pattern>;

class Chain {
 public:
  /// Canonicalises each set. Throws InvalidArgument when there are neither
  /// slots nor a tail.
  Chain(std::vector<PatternSet> slots, std::optional<PatternSet> tail = std::nullopt);

  /// slots()[i] constrains pi^(i+1).
  const std::vector<PatternSet>& slots() const noexcept { return slots_; }
  const std::optional<PatternSet>& tail() const noexcept { return tail_; }

  /// Every pattern in every slot and the tail is classical.
  bool is_classical() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<PatternSet> slots_;
  std::optional<PatternSet> tail_;
};

/// Throws SyntaxError (with byte offset) or BadPattern.
Chain parse_chain(std::string_view text);

/// Canonical text, e.g. "(213,312 : 123)", "(132 : _ : 21)", "(231,321 : 321^inf)".
std::string format_chain(const Chain& chain);

/// Powers repeat with period order(pi), so the tail is checked over exactly
/// one period starting at pi^(k+1).
bool avoids_chain(const Permutation& pi, const Chain& chain);

/// Replaces every pattern tau by rc(tau)^-1. Count-preserving for classical
/// chains; see transform_preserves_counts.
Chain rc_inverse_transform(const Chain& chain);

/// False when the chain holds a consecutive pattern: the reversal part of rc
/// respects adjacency but inversion does not, so counts may change.
bool transform_preserves_counts(const Chain& chain);

}  // namespace chainperm
