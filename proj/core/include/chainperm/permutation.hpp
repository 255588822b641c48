#pragma once

/**
 * @file permutation.hpp
 * @brief Immutable permutations in one-line notation and their algebra.
 *
 * Values are 1-based: a permutation of length n stores pi(1)..pi(n), each of
 * 1..n exactly once. Storage is inline (no heap), so a Permutation is a cheap
 * value type that can be copied freely between threads.
 *
 * Composition convention: (sigma o tau)(i) = sigma(tau(i)). Under this
 * convention pi^2(i) = pi(pi(i)). The opposite convention changes which
 * permutations have a given square whenever the factors do not commute, so
 * every function in this library uses this one.
 */

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainperm {

class Permutation {
 public:
  static constexpr std::size_t kMaxSize = 64;

  /// The empty permutation (length 0).
  Permutation() = default;

  /// Validates and builds from one-line notation; throws NotABijection.
  static Permutation from_one_line(std::span<const unsigned> values);
  static Permutation from_one_line(std::initializer_list<unsigned> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// pi(i) for 1 <= i <= size(). Unchecked.
  unsigned operator()(std::size_t i) const noexcept { return values_[i - 1]; }

  /// The one-line notation; element k holds pi(k + 1).
  std::span<const std::uint8_t> values() const noexcept { return {values_.data(), size_}; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Shorter permutations first, then lexicographic on one-line notation.
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  // Unused tail of values_ stays zero so defaulted comparisons are exact.
  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxSize> values_{};

  friend class PermutationBuilder;
};

/// A composition of n: a nonempty sequence of positive parts summing to n.
class Composition {
 public:
  /// Throws InvalidArgument on an empty list or a zero part.
  explicit Composition(std::vector<unsigned> parts);

  std::span<const unsigned> parts() const noexcept { return parts_; }
  unsigned total() const noexcept { return total_; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

enum class BasicKind {
  increasing,  // 1 2 ... n
  decreasing,  // n ... 2 1
  eps,         // n 1 2 ... (n-1)
};

Permutation make_basic(BasicKind kind, std::size_t n);

/// (sigma o tau)(i) = sigma(tau(i)); throws LengthMismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// pi^k by repeated squaring; pi^0 is the identity.
Permutation power(const Permutation& pi, std::uint64_t k);

Permutation inverse(const Permutation& pi);

/// rc(pi)(i) = n + 1 - pi(n + 1 - i).
Permutation reverse_complement(const Permutation& pi);

/// Least m >= 1 with pi^m = identity (lcm of cycle lengths). order(empty) = 1.
std::uint64_t order(const Permutation& pi);

/// Cycle lengths in order of their smallest element.
std::vector<std::size_t> cycle_type(const Permutation& pi);

Permutation direct_sum(std::span<const Permutation> blocks);
Permutation direct_sum(const Permutation& sigma, const Permutation& tau);
Permutation skew_sum(const Permutation& sigma, const Permutation& tau);

/// eps_{d_1} (+) eps_{d_2} (+) ... for the parts d_i of comp.
Permutation layered_eps(const Composition& comp);

/// One-line text: contiguous digits when n <= 9, space separated otherwise.
std::string to_string(const Permutation& pi);

/// Accepts contiguous digits (n <= 9) or whitespace-separated integers.
/// Throws InvalidArgument on malformed text, NotABijection on a non-permutation.
Permutation parse_permutation(std::string_view text);

}  // namespace chainperm
