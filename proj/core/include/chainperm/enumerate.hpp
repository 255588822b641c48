#pragma once

/**
 * @file enumerate.hpp
 * @brief Generation and counting of permutations, avoiders and compositions.
 *
 * Generators are push-style: they call a visitor once per item, on the
 * calling thread. Counting may fan out over worker threads; partial counts
 * are combined in a fixed order, so the result never depends on the number
 * of workers.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chainperm/bigint.hpp"
#include "chainperm/chain.hpp"
#include "chainperm/pattern.hpp"
#include "chainperm/permutation.hpp"

namespace chainperm {

using PermutationVisitor = std::function<void(const Permutation&)>;
using CompositionVisitor = std::function<void(const Composition&)>;

inline constexpr std::size_t kDefaultFullCap = 10;

/// All n! permutations in lexicographic order. Throws CapExceeded if n > max_n.
void for_each_permutation(std::size_t n, const PermutationVisitor& visit,
                          std::size_t max_n = kDefaultFullCap);

/// {pi in S_n : pi avoids every p in patterns}, lexicographic. Prefixes are
/// abandoned as soon as they contain a pattern. Throws InvalidArgument for
/// consecutive patterns.
void for_each_avoider(std::size_t n, std::span<const Pattern> patterns,
                      const PermutationVisitor& visit);

/// Same, restricted to permutations starting with first_value.
void for_each_avoider_with_first(std::size_t n, std::span<const Pattern> patterns,
                                 unsigned first_value, const PermutationVisitor& visit);

/// The 2^(n-1) unimodal permutations (= Av(213, 312)), lexicographic.
void for_each_unimodal(std::size_t n, const PermutationVisitor& visit);

/// layered_eps(c) for every composition c of n (= Av(231, 321)), lexicographic.
void for_each_layered(std::size_t n, const PermutationVisitor& visit);

/// All 2^(n-1) compositions of n >= 1, in lexicographic order of parts.
void for_each_composition(std::size_t n, const CompositionVisitor& visit);

std::vector<Permutation> collect_avoiders(std::size_t n, std::span<const Pattern> patterns);

enum class CountSource {
  automatic,   // pruned avoiders of slot 1 if it is nonempty and classical, else S_n
  structured,  // unimodal / layered generators when slot 1 is {213,312} / {231,321}
  full,        // every permutation of S_n (subject to the cap)
};

struct CountOptions {
  bool ending_in_one = false;
  std::size_t jobs = 1;
  std::size_t max_full_n = kDefaultFullCap;
  CountSource source = CountSource::automatic;
};

struct CountResult {
  std::size_t n = 0;
  Chain chain;
  BigInt count;
  bool restricted_to_ending_in_one = false;
};

/// Number of pi in S_n avoiding chain (with pi(n) = 1 when ending_in_one).
CountResult count_chain(std::size_t n, const Chain& chain, const CountOptions& options = {});

/// Every pi counted by count_chain, in generation order.
void for_each_chain_avoider(std::size_t n, const Chain& chain, const PermutationVisitor& visit,
                            const CountOptions& options = {});

/// A set of allowed part sizes: either every positive integer or an explicit list.
class PartSet {
 public:
  static PartSet all() { return PartSet(std::nullopt); }
  static PartSet of(std::vector<unsigned> parts);
  static PartSet divisors_of(unsigned k);

  bool contains(unsigned d) const;
  bool is_all() const noexcept { return !parts_.has_value(); }
  /// Sorted explicit parts; empty when is_all().
  std::span<const unsigned> parts() const noexcept;

  PartSet intersect(const PartSet& other) const;
  PartSet unite(const PartSet& other) const;

 private:
  explicit PartSet(std::optional<std::vector<unsigned>> parts) : parts_(std::move(parts)) {}
  std::optional<std::vector<unsigned>> parts_;
};

struct PartConstraint {
  PartSet first_allowed = PartSet::all();
  PartSet rest_allowed = PartSet::all();
};

/// Compositions (d_1, ..., d_m) of n with d_1 in first_allowed and every
/// later part in rest_allowed. n = 0 counts the empty composition once.
BigInt count_compositions(std::size_t n, const PartConstraint& pc);

}  // namespace chainperm
