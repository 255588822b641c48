#pragma once

/**
 * @file sequences.hpp
 * @brief Closed forms, bounds and recurrences for chain-avoidance counts.
 *
 * Range-checked evaluators throw OutOfStatedRange below the smallest n for
 * which the formula is claimed; small-n truth belongs to brute force. The
 * *_formula variants evaluate the expression at any n (used to reproduce
 * printed table rows that start before the stated range).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chainperm/bigint.hpp"
#include "chainperm/enumerate.hpp"
#include "chainperm/permutation.hpp"

namespace chainperm {

enum class SpecialKind { fibonacci, lucas, tribonacci, tetranacci };

/// F_0=0, F_1=1; L_0=2, L_1=1; T_0=T_1=0, T_2=1; Q_0=Q_1=Q_2=0, Q_3=1.
BigInt special_sequence(SpecialKind kind, std::size_t n);

BigInt binomial(std::int64_t n, std::int64_t k);

// c_n(213,312 : tau) for tau in S_3 ------------------------------------------

std::size_t unimodal_square_min_n(const Permutation& tau);
BigInt unimodal_square_formula(const Permutation& tau, std::size_t n);
BigInt table1_value(const Permutation& tau, std::size_t n);

// Lower bounds on c_n(312 : tau) ----------------------------------------------

std::size_t lower_bound_312_min_n(const Permutation& tau);
/// 123: floor(n/2); 132: 2^(n-1); 213: floor(10/7 * 2^(n-1)); 231: b_n; 321: d_n.
BigInt lower_bound_312_formula(const Permutation& tau, std::size_t n);
BigInt lower_bound_312(const Permutation& tau, std::size_t n);

/// floor(10/7 * 2^(n-1)), exact.
BigInt ten_sevenths_bound(std::size_t n);

// Powers of {231,321}-avoiders: c_n(231,321 : _^(k-2) : tau) ------------------

/// Part-size constraint on the layered blocks eps_{d_1} (+) ... (+) eps_{d_m}
/// for pi^k to avoid tau (tau in {132, 213, 231, 312, 321}).
PartConstraint layered_power_constraint(const Permutation& tau, unsigned k);

/// Exact count via the composition bijection; k >= 2.
BigInt ck_value(const Permutation& tau, unsigned k, std::size_t n);

// Rows of the (231,321 : tau_1 : tau_2 : tau_3) table -------------------------

struct LayeredTableRow {
  std::string id;           // e.g. "132:_:_"
  std::string closed_form;  // as printed
  std::string oeis;
  std::string chain;        // full chain text
};

const std::vector<LayeredTableRow>& layered_table_rows();
const LayeredTableRow& layered_table_row(std::string_view id);  // throws UnknownRow

/// The row's printed closed form at n (n >= 1).
BigInt table3_value(std::string_view row_id, std::size_t n);

/// Smallest n from which every row's printed closed form is asserted.
inline constexpr std::size_t kLayeredTableMinN = 3;

/// The same count through count_compositions with the intersected per-power
/// constraints (independent of the closed form).
BigInt table3_composition_count(std::string_view row_id, std::size_t n);

// Conjectured counts ------------------------------------------------------------

/// L_{n+1} - ceil(n/2) - 1.
BigInt lucas_conjecture_value(std::size_t n);
/// 2^(n-2) + n - 1 (n >= 2).
BigInt consecutive_conjecture_value(std::size_t n);

BigInt catalan(std::size_t n);

// Named sequences -----------------------------------------------------------------

struct SequenceSpec {
  std::string id;
  unsigned k = 2;    // ck-* families
  std::string row;   // table3
};

struct SequenceInfo {
  std::string id;
  std::string description;
  std::optional<std::string> oeis;
};

const std::vector<SequenceInfo>& sequence_catalog();

/// Smallest n at which evaluate_sequence is defined for spec.
std::size_t sequence_min_n(const SequenceSpec& spec);

/// Throws UnknownSequence, OutOfStatedRange, UnknownRow.
BigInt evaluate_sequence(const SequenceSpec& spec, std::size_t n);

std::string describe(const SequenceSpec& spec);

}  // namespace chainperm
