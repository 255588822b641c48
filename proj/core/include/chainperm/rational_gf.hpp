#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chainperm/bigint.hpp"

namespace chainperm {

/// Integer polynomial, ascending coefficients (index = power of x).
using Polynomial = std::vector<BigInt>;

Polynomial make_polynomial(std::span<const std::int64_t> coefficients);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// numerator / denominator with denominator(0) = 1.
class RationalGF {
 public:
  /// Divides through by -1 if denominator(0) = -1; throws InvalidArgument if
  /// denominator(0) is any other value.
  RationalGF(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return numerator_; }
  const Polynomial& denominator() const noexcept { return denominator_; }

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

/// a_0 .. a_upto from a_n = num_n - sum_{j>=1} den_j a_{n-j}.
std::vector<BigInt> gf_coefficients(const RationalGF& gf, std::size_t upto);

/// 1/r for the smallest positive root r of the denominator in (0, 1), by
/// bisection on the first sign change of a fine grid. Throws NoRootFound.
double growth_rate(const RationalGF& gf, double tol = 1e-12);

/// (1 - x - x^2 + x^3) / (1 - 2x - x^2 + 2x^3 - x^4): strong 312-avoiders.
RationalGF strong_312_gf();

/// (1 - x - x^2 + x^3) / (1 - 2x - x^2 + x^3): lower bound for (312 : 321).
RationalGF bound_312_321_gf();

/// x / ((1 - x)(1 - sum_{d | k} x^d)).
RationalGF ck_132_gf(unsigned k);

/// 1 / (1 - sum_{d in parts} x^d).
RationalGF composition_gf(std::span<const unsigned> parts);

}  // namespace chainperm
