#include "chainperm/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>

#include "chainperm/chain.hpp"
#include "chainperm/errors.hpp"
#include "chainperm/rational_gf.hpp"

namespace chainperm {

namespace {

std::map<std::size_t, BigInt> printed_from(std::size_t first_n, std::initializer_list<long long> values) {
  std::map<std::size_t, BigInt> out;
  std::size_t n = first_n;
  for (long long v : values) out.emplace(n++, BigInt(v));
  return out;
}

std::string ck_chain(const std::string& tau, unsigned k) {
  std::string text = "(231,321 : ";
  for (unsigned i = 2; i < k; ++i) text += "_ : ";
  return text + tau + ")";
}

std::vector<Claim> build_registry() {
  std::vector<Claim> claims;

  for (const char* tau : {"123", "132", "213", "231", "312", "321"}) {
    Claim c;
    c.id = std::string("uni-") + tau;
    c.description = std::string("unimodal permutations whose square avoids ") + tau;
    c.chain = std::string("(213,312 : ") + tau + ")";
    c.sequence = SequenceSpec{c.id, 2, {}};
    c.stated_min_n = unimodal_square_min_n(parse_permutation(tau));
    c.n_lo = 1;
    c.n_hi = 12;
    claims.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "av312-sq123-values";
    c.description = "printed values of c_n(312 : 123) for n = 1..12";
    c.chain = "(312 : 123)";
    c.printed = printed_from(1, {1, 2, 1, 4, 7, 12, 11, 29, 26, 50, 41, 108});
    c.n_lo = 1;
    c.n_hi = 12;
    claims.push_back(std::move(c));
  }

  const std::map<std::string, std::map<std::size_t, BigInt>> table2_counts = {
      {"132", printed_from(3, {5, 11, 23, 49, 102, 206, 419, 849, 1704, 3420})},
      {"213", printed_from(3, {5, 11, 23, 49, 102, 206, 419, 849, 1704, 3420})},
      {"231", printed_from(3, {5, 13, 30, 70, 167, 395, 932, 2206, 5217, 12334})},
      {"321", printed_from(3, {5, 12, 29, 68, 160, 378, 891, 2101, 4954, 11683})}};
  const std::map<std::string, std::map<std::size_t, BigInt>> table2_bounds = {
      {"132", printed_from(3, {4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048})},
      {"213", printed_from(3, {5, 11, 22, 45, 91, 182, 365, 731, 1462, 2925})},
      {"231", printed_from(3, {4, 9, 19, 41, 87, 186, 396, 845, 1801, 3841})},
      {"321", printed_from(3, {5, 11, 25, 56, 126, 283, 636, 1429, 3211, 7215})}};

  for (const auto& [tau, values] : table2_counts) {
    Claim c;
    c.id = "table2-" + tau;
    c.description = "printed values of c_n(312 : " + tau + ")";
    c.chain = "(312 : " + tau + ")";
    c.printed = values;
    c.stated_min_n = 3;
    c.n_lo = 3;
    c.n_hi = 12;
    claims.push_back(std::move(c));
  }

  for (const char* tau : {"123", "132", "213", "231", "321"}) {
    Claim c;
    c.id = std::string("bound-312-") + tau;
    c.kind = ClaimKind::lower_bound;
    c.description = std::string("lower bound on c_n(312 : ") + tau + ")";
    c.chain = std::string("(312 : ") + tau + ")";
    c.sequence = SequenceSpec{std::string("lb-312-") + tau, 2, {}};
    const auto it = table2_bounds.find(tau);
    if (it != table2_bounds.end()) c.printed = it->second;
    c.stated_min_n = lower_bound_312_min_n(parse_permutation(tau));
    c.n_lo = 1;
    c.n_hi = 12;
    claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.id = "bound-312-132-improved";
    c.kind = ClaimKind::lower_bound;
    c.description = "floor(10/7 * 2^(n-1)) also bounds c_n(312 : 132), by the rc-inverse symmetry";
    c.chain = "(312 : 132)";
    c.sequence = SequenceSpec{"lb-312-132-improved", 2, {}};
    c.stated_min_n = 5;
    c.n_lo = 1;
    c.n_hi = 12;
    claims.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "av231-321-sq123-zero";
    c.kind = ClaimKind::eventually_zero;
    c.description = "no layered permutation of length n >= 5 has a square avoiding 123";
    c.chain = "(231,321 : 123)";
    c.stated_min_n = 5;
    c.n_lo = 1;
    c.n_hi = 10;
    claims.push_back(std::move(c));
  }

  for (const char* tau : {"132", "213", "231", "312", "321"}) {
    for (unsigned k = 2; k <= 6; ++k) {
      Claim c;
      c.id = std::string("ck-") + tau + "-k" + std::to_string(k);
      c.description = std::string("layered permutations whose power ") + std::to_string(k) +
                      " avoids " + tau + ", via restricted compositions";
      c.chain = ck_chain(tau, k);
      c.sequence = SequenceSpec{std::string("ck-") + tau, k, {}};
      c.stated_min_n = 1;
      c.n_lo = 1;
      c.n_hi = 10;
      claims.push_back(std::move(c));
    }
  }

  for (const LayeredTableRow& row : layered_table_rows()) {
    Claim c;
    c.id = "table3-" + row.id;
    c.description = "closed form " + row.closed_form + " for " + row.chain;
    c.chain = row.chain;
    c.sequence = SequenceSpec{"table3", 2, row.id};
    c.stated_min_n = kLayeredTableMinN;
    c.n_lo = 1;
    c.n_hi = 12;
    claims.push_back(std::move(c));
  }

  for (const char* tau : {"132", "213"}) {
    Claim c;
    c.id = std::string("identity-312-") + tau + "-weighted";
    c.kind = ClaimKind::identity;
    c.identity = IdentityKind::weighted_by_compositions;
    c.description = std::string("c_n(312 : ") + tau + ") = a_n + sum_{i<n} a_i 2^(n-1-i)";
    c.chain = std::string("(312 : ") + tau + ")";
    c.stated_min_n = 3;
    c.n_lo = 1;
    c.n_hi = 10;
    claims.push_back(std::move(c));
  }
  for (const char* tau : {"231", "321"}) {
    Claim c;
    c.id = std::string("identity-312-") + tau + "-convolution";
    c.kind = ClaimKind::identity;
    c.identity = IdentityKind::direct_sum_convolution;
    c.description = std::string("c_n(312 : ") + tau + ") = sum_{i=1}^{n} a_i c_{n-i}";
    c.chain = std::string("(312 : ") + tau + ")";
    c.stated_min_n = 3;
    c.n_lo = 1;
    c.n_hi = 10;
    claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.id = "rc-inverse-312-132";
    c.kind = ClaimKind::identity;
    c.identity = IdentityKind::rc_inverse_symmetry;
    c.description = "c_n(312 : 132) = c_n(312 : 213) by two independent enumerations";
    c.chain = "(312 : 132)";
    c.n_lo = 1;
    c.n_hi = 11;
    claims.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "conj-lucas";
    c.status = ClaimStatus::conjecture;
    c.description = "c_n(231,1432 : 231) = L_{n+1} - ceil(n/2) - 1";
    c.chain = "(231,1432 : 231)";
    c.sequence = SequenceSpec{"conj-lucas", 2, {}};
    c.stated_min_n = 1;
    c.n_lo = 1;
    c.n_hi = 11;
    claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.id = "conj-consecutive";
    c.status = ClaimStatus::conjecture;
    c.description = "c_n(213,312 : ~213) = 2^(n-2) + n - 1";
    c.chain = "(213,312 : ~213)";
    c.sequence = SequenceSpec{"conj-consecutive", 2, {}};
    c.stated_min_n = 2;
    c.n_lo = 1;
    c.n_hi = 11;
    claims.push_back(std::move(c));
  }

  // Two readings of the mixed-chain prose; both compared against the
  // intersected composition constraints (power 2 avoids 132, power 3 avoids 231).
  {
    Claim c;
    c.id = "mixed-231-321-132-231";
    c.status = ClaimStatus::exploratory;
    c.description = "layered reading: (231,321 : 132 : 231) vs intersected part constraints";
    c.chain = "(231,321 : 132 : 231)";
    c.sequence = SequenceSpec{"table3-compositions", 2, "132:231:_"};
    c.n_lo = 1;
    c.n_hi = 10;
    claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.id = "mixed-231-312-132-231";
    c.status = ClaimStatus::exploratory;
    c.description = "literal reading: (231,312 : 132 : 231) vs the same composition count";
    c.chain = "(231,312 : 132 : 231)";
    c.sequence = SequenceSpec{"table3-compositions", 2, "132:231:_"};
    c.n_lo = 1;
    c.n_hi = 10;
    claims.push_back(std::move(c));
  }

  return claims;
}

std::optional<BigInt> try_evaluate(const SequenceSpec& spec, std::size_t n) {
  try {
    return evaluate_sequence(spec, n);
  } catch (const OutOfStatedRange&) {
    return std::nullopt;
  }
}

class ClaimRunner {
 public:
  ClaimRunner(const Claim& claim, const VerifyOptions& options)
      : claim_(claim), chain_(parse_chain(claim.chain)) {
    options_.jobs = options.jobs;
    options_.max_full_n = options.max_full_n;
  }

  BigInt count(std::size_t n) { return cached(counts_, chain_, n, false); }
  BigInt count_ending_in_one(std::size_t n) {
    if (n == 0) return 0;
    return cached(ending_in_one_, chain_, n, true);
  }

  NRecord record(std::size_t n) {
    NRecord r;
    r.n = n;
    r.in_range = n >= claim_.stated_min_n;
    if (claim_.kind != ClaimKind::identity) {
      r.brute = count(n);
      if (claim_.ending_in_one) r.brute = count_ending_in_one(n);
    }
    const auto printed = claim_.printed.find(n);
    if (printed != claim_.printed.end()) r.printed = printed->second;

    bool holds = true;
    switch (claim_.kind) {
      case ClaimKind::equality:
        if (claim_.sequence) {
          r.formula = try_evaluate(*claim_.sequence, n);
        } else {
          r.formula = r.printed;
        }
        if (r.formula) {
          holds = r.brute == *r.formula && (!r.printed || *r.printed == *r.formula);
        }
        break;
      case ClaimKind::lower_bound:
        r.formula = try_evaluate(*claim_.sequence, n);
        if (r.formula) {
          holds = r.brute >= *r.formula && (!r.printed || *r.printed == *r.formula);
        }
        break;
      case ClaimKind::eventually_zero:
        if (r.in_range) {
          r.formula = BigInt(0);
          holds = r.brute == 0;
        }
        break;
      case ClaimKind::identity:
        r.brute = count(n);
        r.formula = identity_side(n);
        holds = r.brute == *r.formula;
        break;
    }

    if (!r.in_range) {
      r.verdict = RecordVerdict::informational;
    } else if (!r.formula) {
      r.verdict = RecordVerdict::informational;
    } else if (holds) {
      r.verdict = RecordVerdict::holds;
    } else {
      r.verdict = claim_.status == ClaimStatus::exploratory ? RecordVerdict::informational
                                                            : RecordVerdict::fails;
    }
    return r;
  }

 private:
  BigInt cached(std::map<std::size_t, BigInt>& cache, const Chain& chain, std::size_t n,
                bool ending_in_one) {
    const auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CountOptions opts = options_;
    opts.ending_in_one = ending_in_one;
    BigInt value = count_chain(n, chain, opts).count;
    cache.emplace(n, value);
    return value;
  }

  BigInt identity_side(std::size_t n) {
    switch (claim_.identity) {
      case IdentityKind::weighted_by_compositions: {
        BigInt sum = count_ending_in_one(n);
        for (std::size_t i = 1; i < n; ++i) sum += count_ending_in_one(i) * (BigInt(1) << (n - 1 - i));
        return sum;
      }
      case IdentityKind::direct_sum_convolution: {
        if (n == 0) return 1;
        BigInt sum = 0;
        for (std::size_t i = 1; i <= n; ++i) sum += count_ending_in_one(i) * count(n - i);
        return sum;
      }
      case IdentityKind::rc_inverse_symmetry: {
        if (!transformed_) transformed_ = rc_inverse_transform(chain_);
        return cached(transformed_counts_, *transformed_, n, false);
      }
      case IdentityKind::none:
        break;
    }
    throw InvalidArgument("claim '" + claim_.id + "' has no identity");
  }

  const Claim& claim_;
  Chain chain_;
  CountOptions options_;
  std::map<std::size_t, BigInt> counts_;
  std::map<std::size_t, BigInt> ending_in_one_;
  std::optional<Chain> transformed_;
  std::map<std::size_t, BigInt> transformed_counts_;
};

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim& find_claim(std::string_view id) {
  for (const Claim& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw UnknownClaim("unknown claim '" + std::string(id) + "'");
}

Report verify_claim(const Claim& claim, std::optional<NRange> range, const VerifyOptions& options) {
  const NRange r = range.value_or(NRange{claim.n_lo, claim.n_hi});
  if (r.lo > r.hi) throw InvalidArgument("empty n range");
  const auto start = std::chrono::steady_clock::now();

  Report report;
  report.claim_id = claim.id;
  report.status = claim.status;
  ClaimRunner runner(claim, options);
  bool any_fail = false;
  bool any_confirmed = false;
  bool any_exploratory_mismatch = false;
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    NRecord rec = runner.record(n);
    if (rec.verdict == RecordVerdict::fails) any_fail = true;
    if (rec.verdict == RecordVerdict::holds) any_confirmed = true;
    if (rec.in_range && rec.formula && rec.verdict == RecordVerdict::informational) {
      any_exploratory_mismatch = true;
    }
    if (rec.verdict == RecordVerdict::fails) {
      report.notes.push_back("mismatch at n = " + std::to_string(n) + ": brute force " +
                             to_string(rec.brute) + ", formula " +
                             (rec.formula ? to_string(*rec.formula) : std::string("-")) +
                             (rec.printed ? ", printed " + to_string(*rec.printed) : std::string()));
    }
    report.records.push_back(std::move(rec));
  }
  if (any_fail) {
    report.verdict = Verdict::refuted;
  } else if (any_confirmed && !any_exploratory_mismatch) {
    report.verdict = Verdict::confirmed;
  } else {
    report.verdict = Verdict::partial;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Report check_conjecture(std::string_view id, std::optional<NRange> range, const VerifyOptions& options) {
  if (id != "conj-lucas" && id != "conj-consecutive") {
    throw UnknownClaim("unknown conjecture '" + std::string(id) + "'");
  }
  return verify_claim(find_claim(id), range, options);
}

bool is_failure(const Report& report) {
  return report.status == ClaimStatus::theorem && report.verdict == Verdict::refuted;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::partial: return "partial";
  }
  return "?";
}

std::string to_string(RecordVerdict v) {
  switch (v) {
    case RecordVerdict::holds: return "holds";
    case RecordVerdict::fails: return "fails";
    case RecordVerdict::informational: return "informational";
  }
  return "?";
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::theorem: return "theorem";
    case ClaimStatus::conjecture: return "conjecture";
    case ClaimStatus::exploratory: return "exploratory";
  }
  return "?";
}

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::equality: return "equality";
    case ClaimKind::lower_bound: return "lower_bound";
    case ClaimKind::eventually_zero: return "eventually_zero";
    case ClaimKind::identity: return "identity";
  }
  return "?";
}

std::vector<GrowthRateCheck> growth_rate_checks(double tolerance) {
  std::vector<GrowthRateCheck> out;
  const auto add = [&](std::string name, const RationalGF& gf, double reported) {
    GrowthRateCheck g;
    g.name = std::move(name);
    g.computed = growth_rate(gf);
    g.reported = reported;
    g.agrees = std::fabs(g.computed - g.reported) <= tolerance;
    out.push_back(std::move(g));
  };
  add("b(x)", strong_312_gf(), 2.13224);
  add("d(x)", bound_312_321_gf(), 2.24598);
  return out;
}

}  // namespace chainperm
