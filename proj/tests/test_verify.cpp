#include <gtest/gtest.h>

#include <set>

#include "chainperm/errors.hpp"
#include "chainperm/verify.hpp"
#include "oracles.hpp"

using namespace chainperm;

TEST(Verify, RegistryIdsAreUniqueAndChainsParse) {
  std::set<std::string> ids;
  for (const Claim& c : claim_registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_NO_THROW(parse_chain(c.chain)) << c.id;
    EXPECT_LE(c.n_lo, c.n_hi) << c.id;
    if (c.kind == ClaimKind::lower_bound) {
      EXPECT_TRUE(c.sequence.has_value()) << c.id;
    }
    if (c.kind == ClaimKind::identity) {
      EXPECT_NE(c.identity, IdentityKind::none) << c.id;
    }
  }
  EXPECT_THROW(find_claim("no-such-claim"), UnknownClaim);
}

TEST(Verify, UnimodalSquare132IsNPlusOne) {
  const Report r = verify_claim(find_claim("uni-132"), NRange{3, 12});
  EXPECT_EQ(r.verdict, Verdict::confirmed);
  ASSERT_EQ(r.records.size(), 10u);
  for (const NRecord& rec : r.records) {
    EXPECT_EQ(rec.brute, BigInt(rec.n + 1));
    EXPECT_EQ(rec.verdict, RecordVerdict::holds);
  }
}

TEST(Verify, Table2Row321) {
  const Report r = verify_claim(find_claim("table2-321"), NRange{3, 12});
  EXPECT_EQ(r.verdict, Verdict::confirmed);
  const long long expected[] = {5, 12, 29, 68, 160, 378, 891, 2101, 4954, 11683};
  for (std::size_t i = 0; i < r.records.size(); ++i) EXPECT_EQ(r.records[i].brute, expected[i]);
}

TEST(Verify, EventuallyZero) {
  const Report r = verify_claim(find_claim("av231-321-sq123-zero"), NRange{5, 10});
  EXPECT_EQ(r.verdict, Verdict::confirmed);
  for (const NRecord& rec : r.records) EXPECT_EQ(rec.brute, 0);
}

TEST(Verify, BelowStatedRangeIsInformational) {
  // floor(n/2) only claimed from n = 8; at n = 3 brute force gives 1.
  const Report r = verify_claim(find_claim("uni-123"), NRange{1, 9});
  EXPECT_EQ(r.verdict, Verdict::confirmed);
  for (const NRecord& rec : r.records) {
    EXPECT_EQ(rec.in_range, rec.n >= 8);
    EXPECT_EQ(rec.verdict, rec.n >= 8 ? RecordVerdict::holds : RecordVerdict::informational);
  }
  const Report only_below = verify_claim(find_claim("uni-123"), NRange{1, 7});
  EXPECT_EQ(only_below.verdict, Verdict::partial);
  EXPECT_FALSE(is_failure(only_below));
}

TEST(Verify, RefutationListsBothValues) {
  // A deliberately wrong claim: c_n(312 : 123) is not 2^(n-1).
  Claim wrong;
  wrong.id = "wrong";
  wrong.chain = "(312 : 123)";
  wrong.sequence = SequenceSpec{"pow2", 2, ""};
  wrong.n_lo = 1;
  wrong.n_hi = 5;
  const Report r = verify_claim(wrong);
  EXPECT_EQ(r.verdict, Verdict::refuted);
  EXPECT_TRUE(is_failure(r));
  bool found = false;
  for (const NRecord& rec : r.records) {
    if (rec.verdict == RecordVerdict::fails) {
      found = true;
      ASSERT_TRUE(rec.formula.has_value());
      EXPECT_NE(rec.brute, *rec.formula);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(r.notes.empty());

  Claim conj = wrong;
  conj.status = ClaimStatus::conjecture;
  const Report rc = verify_claim(conj);
  EXPECT_EQ(rc.verdict, Verdict::refuted);
  EXPECT_FALSE(is_failure(rc));

  Claim expl = wrong;
  expl.status = ClaimStatus::exploratory;
  const Report re = verify_claim(expl);
  EXPECT_NE(re.verdict, Verdict::refuted);
}

TEST(Verify, PrintedValuesMustMatchBoundRows) {
  Claim c = find_claim("bound-312-321");
  c.printed[7] = 127;  // the printed row says 126
  const Report r = verify_claim(c, NRange{6, 8});
  EXPECT_EQ(r.verdict, Verdict::refuted);
  EXPECT_EQ(r.records[1].verdict, RecordVerdict::fails);
}

TEST(Verify, Conjectures) {
  const Report c = check_conjecture("conj-consecutive", NRange{5, 5});
  ASSERT_EQ(c.records.size(), 1u);
  EXPECT_EQ(*c.records[0].formula, 12);
  // Independent count: unimodal pi of length 5 whose square avoids consecutive 213.
  std::uint64_t brute = oracle::count_chain(5, {oracle::slot({"213", "312"}), oracle::slot({"~213"})});
  EXPECT_EQ(c.records[0].brute, BigInt(brute));

  const Report l = check_conjecture("conj-lucas", NRange{1, 4});
  EXPECT_EQ(*l.records[3].formula, 8);
  EXPECT_EQ(l.records[0].brute, 1);
  EXPECT_EQ(l.records[3].brute, BigInt(oracle::count_chain(4, {oracle::slot({"231", "1432"}), oracle::slot({"231"})})));
  EXPECT_THROW(check_conjecture("uni-123"), UnknownClaim);
}

TEST(Verify, IdentityClaims) {
  for (const char* id : {"identity-312-132-weighted", "identity-312-213-weighted", "identity-312-231-convolution",
                         "identity-312-321-convolution", "rc-inverse-312-132"}) {
    const Report r = verify_claim(find_claim(id), NRange{1, 8});
    EXPECT_EQ(r.verdict, Verdict::confirmed) << id;
    for (const NRecord& rec : r.records) EXPECT_EQ(rec.brute, *rec.formula) << id << " n=" << rec.n;
  }
}

TEST(Verify, ReportsAreSortedAndDeterministic) {
  VerifyOptions one, eight;
  eight.jobs = 8;
  const Report a = verify_claim(find_claim("table3-_:_:312"), std::nullopt, one);
  const Report b = verify_claim(find_claim("table3-_:_:312"), std::nullopt, eight);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].n, a.records.front().n + i);
    EXPECT_EQ(a.records[i].brute, b.records[i].brute);
    EXPECT_EQ(a.records[i].verdict, b.records[i].verdict);
  }
}

TEST(Verify, GrowthRateChecksFlagTheDiscrepancy) {
  const auto checks = growth_rate_checks();
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_TRUE(checks[0].agrees);
  EXPECT_NEAR(checks[0].computed, 2.13224, 1e-4);
  EXPECT_FALSE(checks[1].agrees);
  EXPECT_NEAR(checks[1].computed, 2.24698, 1e-4);
  EXPECT_NEAR(checks[1].computed - checks[1].reported, 1e-3, 2e-4);
}

TEST(Tables, Structure) {
  const Table t1 = build_table(1, 6);
  ASSERT_EQ(t1.rows.size(), 6u);
  EXPECT_EQ(t1.columns, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  const TableRow& r213 = t1.rows[2];
  EXPECT_EQ(r213.label, "213");
  const long long expected[] = {1, 2, 4, 7, 10, 14};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(*r213.brute[i], expected[i]);

  const Table t2 = build_table(2, 8);
  EXPECT_EQ(t2.columns.front(), 3u);
  const long long row231[] = {5, 13, 30, 70, 167, 395};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(*t2.rows[2].brute[i], row231[i]);

  const Table t3 = build_table(3, 5);
  EXPECT_EQ(t3.rows.size(), 12u);
  EXPECT_THROW(build_table(4, 5), InvalidArgument);
}
