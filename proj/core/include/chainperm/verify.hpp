#pragma once

/**
 * @file verify.hpp
 * @brief Claim registry and the brute-force reproduction harness.
 *
 * A claim pairs a chain with a formula (or printed values, or a
 * decomposition identity) over a range of n. Verification enumerates the
 * chain-avoiders for each n and compares. Records below a claim's stated
 * validity threshold are reported but never count as a refutation.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chainperm/bigint.hpp"
#include "chainperm/enumerate.hpp"
#include "chainperm/sequences.hpp"

namespace chainperm {

enum class ClaimKind { equality, lower_bound, eventually_zero, identity };

/// theorem: a refutation is a failure. conjecture: refutations are reported
/// with their witness n. exploratory: informational only.
enum class ClaimStatus { theorem, conjecture, exploratory };

enum class IdentityKind {
  none,
  // c_n = a_n + sum_{i<n} a_i 2^(n-1-i)
  weighted_by_compositions,
  // c_n = sum_{i=1}^{n} a_i c_{n-i}, c_0 = 1
  direct_sum_convolution,
  // c_n(chain) = c_n(rc_inverse_transform(chain))
  rc_inverse_symmetry,
};

struct Claim {
  std::string id;
  std::string description;
  ClaimKind kind = ClaimKind::equality;
  ClaimStatus status = ClaimStatus::theorem;
  std::string chain;
  bool ending_in_one = false;
  std::optional<SequenceSpec> sequence;
  /// Printed reference values by n. For equality claims without a sequence
  /// they are the expected counts; otherwise they must equal the sequence.
  std::map<std::size_t, BigInt> printed;
  IdentityKind identity = IdentityKind::none;
  std::size_t stated_min_n = 1;
  std::size_t n_lo = 1;
  std::size_t n_hi = 10;
};

enum class RecordVerdict {
  holds,
  fails,          // within the stated range
  informational,  // fails below the stated range
};

enum class Verdict { confirmed, refuted, partial };

struct NRecord {
  std::size_t n = 0;
  BigInt brute;
  std::optional<BigInt> formula;
  std::optional<BigInt> printed;
  bool in_range = true;
  RecordVerdict verdict = RecordVerdict::holds;
};

struct Report {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::theorem;
  std::vector<NRecord> records;  // sorted by n
  Verdict verdict = Verdict::confirmed;
  double wall_seconds = 0.0;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  std::size_t max_full_n = kDefaultFullCap;
};

const std::vector<Claim>& claim_registry();
const Claim& find_claim(std::string_view id);  // throws UnknownClaim

struct NRange {
  std::size_t lo;
  std::size_t hi;
};

Report verify_claim(const Claim& claim, std::optional<NRange> range = std::nullopt,
                    const VerifyOptions& options = {});

/// id in {"conj-lucas", "conj-consecutive"}; throws UnknownClaim otherwise.
Report check_conjecture(std::string_view id, std::optional<NRange> range = std::nullopt,
                        const VerifyOptions& options = {});

/// True iff a theorem claim was refuted (the CLI's nonzero exit condition).
bool is_failure(const Report& report);

std::string to_string(Verdict v);
std::string to_string(RecordVerdict v);
std::string to_string(ClaimStatus s);
std::string to_string(ClaimKind k);

// Growth rates ----------------------------------------------------------------

struct GrowthRateCheck {
  std::string name;
  double computed = 0.0;
  double reported = 0.0;
  bool agrees = false;  // |computed - reported| <= tolerance
};

/// Dominant-root growth rates of b(x) and d(x) against the reported values;
/// a disagreement is flagged rather than corrected.
std::vector<GrowthRateCheck> growth_rate_checks(double tolerance = 1e-4);

// Tables ------------------------------------------------------------------------

struct TableRow {
  std::string label;      // tau or row id
  std::string chain;      // chain text
  std::string formula;    // closed form or bound, as text
  std::string oeis;
  std::vector<std::optional<BigInt>> brute;    // per column
  std::vector<std::optional<BigInt>> formula_values;  // empty cell = outside stated range
};

struct Table {
  int which = 1;
  std::string title;
  std::string formula_heading;  // "closed form" or "lower bound"
  std::vector<std::size_t> columns;  // the n values
  std::vector<TableRow> rows;
};

inline constexpr std::size_t kDefaultTableNMax = 12;

/// which in {1, 2, 3}. Brute-force column plus formula/bound column per row.
Table build_table(int which, std::size_t n_max, const VerifyOptions& options = {});

// b-files --------------------------------------------------------------------------

struct BfileEntry {
  std::int64_t index = 0;
  BigInt value;
};

/// Maps b-file entries onto a sequence: sequence(n) = bfile(n + index_offset) + value_shift.
struct BfileAlignment {
  std::string oeis;
  std::int64_t index_offset = 0;
  BigInt value_shift = 0;
};

/// Known alignment with the OEIS entry, if any.
std::optional<BfileAlignment> oeis_alignment(const SequenceSpec& spec);

/// "n a(n)" lines; '#' comments and blank lines ignored. Throws IoError / ParseError.
std::vector<BfileEntry> read_bfile(const std::string& path);
std::vector<BfileEntry> parse_bfile(std::string_view text);

/// Writes "n a(n)" for lo <= n <= hi (sequence indices). Throws IoError.
void export_bfile(const SequenceSpec& spec, std::size_t lo, std::size_t hi, const std::string& path);

/// Compares over the overlap; records carry the b-file value in `brute`.
/// Refuted on the first mismatch (which is the last record).
Report compare_bfile(const SequenceSpec& spec, const std::string& path,
                     const BfileAlignment& alignment);

}  // namespace chainperm
