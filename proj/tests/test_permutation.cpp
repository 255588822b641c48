#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "chainperm/errors.hpp"
#include "chainperm/permutation.hpp"
#include "oracles.hpp"

using namespace chainperm;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

}  // namespace

TEST(Permutation, FromOneLineValid) {
  const Permutation p = Permutation::from_one_line({5, 2, 3, 1, 4});
  EXPECT_EQ(p.size(), 5u);
  EXPECT_EQ(p(1), 5u);
  EXPECT_EQ(p(5), 4u);
  EXPECT_EQ(to_string(p), "52314");
}

TEST(Permutation, FromOneLineRejectsNonBijections) {
  EXPECT_THROW(Permutation::from_one_line({1, 1, 2}), NotABijection);
  EXPECT_THROW(Permutation::from_one_line({0, 1}), NotABijection);
  EXPECT_THROW(Permutation::from_one_line({1, 3}), NotABijection);
}

TEST(Permutation, EmptyIsAllowed) {
  const Permutation e = Permutation::from_one_line(std::span<const unsigned>{});
  EXPECT_TRUE(e.empty());
  EXPECT_TRUE(e.is_identity());
  EXPECT_EQ(e, Permutation::identity(0));
}

TEST(Permutation, TooLongRejected) {
  std::vector<unsigned> v(65);
  std::iota(v.begin(), v.end(), 1u);
  EXPECT_THROW(Permutation::from_one_line(v), Error);
}

TEST(Permutation, MakeBasic) {
  EXPECT_EQ(to_string(make_basic(BasicKind::decreasing, 5)), "54321");
  EXPECT_EQ(to_string(make_basic(BasicKind::eps, 5)), "51234");
  EXPECT_EQ(to_string(make_basic(BasicKind::increasing, 4)), "1234");
  EXPECT_TRUE(make_basic(BasicKind::increasing, 0).empty());
  EXPECT_EQ(to_string(make_basic(BasicKind::eps, 1)), "1");
  EXPECT_THROW(make_basic(BasicKind::eps, 0), InvalidArgument);
}

TEST(Permutation, ComposeConvention) {
  EXPECT_EQ(compose(P("213"), P("213")), P("123"));
  EXPECT_EQ(compose(P("231"), P("231")), P("312"));
  // (sigma o tau)(i) = sigma(tau(i)): sigma = 231, tau = 132 gives 213.
  EXPECT_EQ(compose(P("231"), P("132")), P("213"));
  EXPECT_EQ(compose(P("52314"), Permutation::identity(5)), P("52314"));
  EXPECT_THROW(compose(P("12"), P("123")), LengthMismatch);
}

TEST(Permutation, Powers) {
  const Permutation eps5 = make_basic(BasicKind::eps, 5);
  EXPECT_EQ(to_string(power(eps5, 2)), "45123");
  EXPECT_EQ(power(P("3142"), 1), P("3142"));
  EXPECT_EQ(power(P("3142"), 0), Permutation::identity(4));
  EXPECT_EQ(power(make_basic(BasicKind::decreasing, 4), 2), P("1234"));
  EXPECT_EQ(power(eps5, 1'000'000'000'000ULL), Permutation::identity(5));
}

TEST(Permutation, InverseAndReverseComplement) {
  EXPECT_EQ(inverse(P("231")), P("312"));
  EXPECT_EQ(reverse_complement(P("312")), P("231"));
  EXPECT_EQ(inverse(reverse_complement(P("312"))), P("312"));
  EXPECT_EQ(inverse(reverse_complement(P("132"))), P("213"));
  EXPECT_EQ(reverse_complement(P("52314")), P("25341"));
}

TEST(Permutation, Order) {
  EXPECT_EQ(order(Permutation::identity(5)), 1u);
  EXPECT_EQ(order(make_basic(BasicKind::eps, 5)), 5u);
  EXPECT_EQ(order(P("21453")), 6u);
  EXPECT_EQ(order(Permutation::identity(0)), 1u);
  const std::vector<std::size_t> ct = cycle_type(P("21453"));
  EXPECT_EQ(std::accumulate(ct.begin(), ct.end(), std::size_t{0}), 5u);
}

TEST(Permutation, Sums) {
  const Permutation blocks[] = {P("52314"), P("2341")};
  EXPECT_EQ(to_string(direct_sum(blocks)), "523147896");
  EXPECT_EQ(to_string(skew_sum(P("52314"), P("2341"))), "967582341");

  const Permutation deltas[] = {make_basic(BasicKind::decreasing, 2), make_basic(BasicKind::decreasing, 1),
                                make_basic(BasicKind::decreasing, 5), make_basic(BasicKind::decreasing, 3)};
  EXPECT_EQ(to_string(direct_sum(deltas)), "2 1 3 8 7 6 5 4 11 10 9");

  const Permutation empty;
  EXPECT_EQ(direct_sum(empty, P("231")), P("231"));
  EXPECT_EQ(skew_sum(P("231"), empty), P("231"));
}

TEST(Permutation, LayeredEps) {
  EXPECT_EQ(to_string(layered_eps(Composition({1, 2}))), "132");
  EXPECT_EQ(to_string(layered_eps(Composition({3}))), "312");
  EXPECT_EQ(to_string(layered_eps(Composition({2, 2}))), "2143");
  EXPECT_EQ(layered_eps(Composition({2, 1, 5, 3})).size(), 11u);
}

TEST(Permutation, CompositionValidation) {
  EXPECT_THROW(Composition({}), InvalidArgument);
  EXPECT_THROW(Composition({2, 0, 1}), InvalidArgument);
  EXPECT_EQ(Composition({2, 1, 5, 3}).total(), 11u);
}

TEST(Permutation, TextForms) {
  EXPECT_EQ(P("52314"), Permutation::from_one_line({5, 2, 3, 1, 4}));
  EXPECT_EQ(P("5 2 3 1 4"), P("52314"));
  EXPECT_EQ(P("5,2,3,1,4"), P("52314"));
  const Permutation big = parse_permutation("10 1 2 3 4 5 6 7 8 9");
  EXPECT_EQ(big, make_basic(BasicKind::eps, 10));
  EXPECT_EQ(to_string(big), "10 1 2 3 4 5 6 7 8 9");
  EXPECT_THROW(parse_permutation("1x2"), Error);
  EXPECT_THROW(parse_permutation("122"), NotABijection);
}

TEST(PermutationProperty, ComposeMatchesOracleAndIsAssociative) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::random_int(1, 10);
    const auto a = oracle::random_perm(n), b = oracle::random_perm(n), c = oracle::random_perm(n);
    const Permutation A = oracle::from_vec(a), B = oracle::from_vec(b), C = oracle::from_vec(c);
    ASSERT_EQ(oracle::to_vec(compose(A, B)), oracle::compose(a, b));
    ASSERT_EQ(compose(compose(A, B), C), compose(A, compose(B, C)));
    const Permutation id = Permutation::identity(static_cast<std::size_t>(n));
    ASSERT_EQ(compose(A, id), A);
    ASSERT_EQ(compose(id, A), A);
    ASSERT_EQ(inverse(compose(A, B)), compose(inverse(B), inverse(A)));
  }
}

TEST(PermutationProperty, PowerMatchesRepeatedComposition) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::random_int(1, 12);
    const int k = oracle::random_int(0, 40);
    const auto p = oracle::random_perm(n);
    ASSERT_EQ(oracle::to_vec(power(oracle::from_vec(p), static_cast<std::uint64_t>(k))), oracle::power(p, k));
  }
}

TEST(PermutationProperty, PowerOfOrderIsIdentityExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    oracle::for_each_perm(n, [&](const oracle::Perm& p) {
      const Permutation P = oracle::from_vec(p);
      const std::uint64_t m = order(P);
      ASSERT_TRUE(power(P, m).is_identity());
      ASSERT_EQ(m, static_cast<std::uint64_t>(oracle::order(p)));
    });
  }
}

TEST(PermutationProperty, InvolutionsAndSymmetry) {
  for (int n = 0; n <= 7; ++n) {
    oracle::for_each_perm(n, [&](const oracle::Perm& p) {
      const Permutation P = oracle::from_vec(p);
      ASSERT_EQ(inverse(inverse(P)), P);
      ASSERT_EQ(reverse_complement(reverse_complement(P)), P);
      ASSERT_TRUE(compose(P, inverse(P)).is_identity());
    });
  }
}

namespace {

// Every list of blocks (each block any permutation of its size) with the
// given total length.
void for_each_block_list(int total, std::vector<Permutation>& prefix,
                         const std::function<void(const std::vector<Permutation>&)>& visit) {
  if (total == 0) {
    visit(prefix);
    return;
  }
  for (int s = 1; s <= total; ++s) {
    oracle::for_each_perm(s, [&](const oracle::Perm& b) {
      prefix.push_back(oracle::from_vec(b));
      for_each_block_list(total - s, prefix, visit);
      prefix.pop_back();
    });
  }
}

}  // namespace

TEST(PermutationProperty, PowerDistributesOverDirectSum) {
  std::size_t lists = 0;
  for (int total = 1; total <= 8; ++total) {
    std::vector<Permutation> prefix;
    for_each_block_list(total, prefix, [&](const std::vector<Permutation>& blocks) {
      ++lists;
      const Permutation sum = direct_sum(blocks);
      for (std::uint64_t m = 0; m <= 12; ++m) {
        std::vector<Permutation> powered;
        for (const Permutation& b : blocks) powered.push_back(power(b, m));
        ASSERT_EQ(power(sum, m), direct_sum(powered));
      }
    });
  }
  EXPECT_EQ(lists, 72418u);  // sum over totals 1..8 of sum_s s! f(total - s)
}

TEST(PermutationProperty, EpsPowersAreSkewSumsOfIdentities) {
  for (std::size_t d = 1; d <= 12; ++d) {
    const Permutation eps = make_basic(BasicKind::eps, d);
    for (std::uint64_t k = 0; k <= 24; ++k) {
      const std::size_t a = static_cast<std::size_t>(k % d);
      ASSERT_EQ(power(eps, k), skew_sum(Permutation::identity(a), Permutation::identity(d - a)))
          << "d=" << d << " k=" << k;
    }
  }
}
