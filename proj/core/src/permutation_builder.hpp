#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "chainperm/permutation.hpp"

namespace chainperm {

// Internal: builds a Permutation from values already known to be a bijection.
class PermutationBuilder {
 public:
  static Permutation unchecked(std::span<const std::uint8_t> values) {
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) p.values_[i] = values[i];
    return p;
  }

  static std::uint8_t* data(Permutation& p) noexcept { return p.values_.data(); }
  static void set_size(Permutation& p, std::size_t n) noexcept {
    p.size_ = static_cast<std::uint8_t>(n);
  }
};

}  // namespace chainperm
