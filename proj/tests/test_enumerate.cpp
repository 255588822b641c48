#include <gtest/gtest.h>

#include <set>

#include "chainperm/enumerate.hpp"
#include "chainperm/errors.hpp"
#include "oracles.hpp"

using namespace chainperm;

namespace {

std::vector<std::string> texts(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const Permutation& p : ps) out.push_back(to_string(p));
  return out;
}

std::vector<Pattern> patterns(std::initializer_list<const char*> list) {
  std::vector<Pattern> out;
  for (const char* t : list) out.push_back(parse_pattern(t));
  return out;
}

using Texts = std::vector<std::string>;

}  // namespace

TEST(Enumerate, PermutationsLexicographic) {
  std::vector<Permutation> seen;
  for_each_permutation(3, [&](const Permutation& p) { seen.push_back(p); });
  EXPECT_EQ(texts(seen), (Texts{"123", "132", "213", "231", "312", "321"}));

  seen.clear();
  for_each_permutation(0, [&](const Permutation& p) { seen.push_back(p); });
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_TRUE(seen[0].empty());

  std::size_t count = 0;
  Permutation prev;
  bool sorted = true;
  for_each_permutation(8, [&](const Permutation& p) {
    if (count && !(prev < p)) sorted = false;
    prev = p;
    ++count;
  });
  EXPECT_EQ(count, 40320u);
  EXPECT_TRUE(sorted);

  EXPECT_THROW(for_each_permutation(11, [](const Permutation&) {}), CapExceeded);
  EXPECT_NO_THROW(for_each_permutation(2, [](const Permutation&) {}, 2));
  EXPECT_THROW(for_each_permutation(3, [](const Permutation&) {}, 2), CapExceeded);
}

TEST(Enumerate, AvoiderExamples) {
  const auto p312 = patterns({"312"});
  EXPECT_EQ(collect_avoiders(3, p312).size(), 5u);
  std::size_t c = 0;
  for_each_avoider(12, p312, [&](const Permutation&) { ++c; });
  EXPECT_EQ(c, oracle::catalan(12));
  EXPECT_EQ(c, 208012u);

  const auto uni = patterns({"213", "312"});
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(collect_avoiders(n, uni).size(), std::size_t{1} << (n - 1)) << n;
  }
  EXPECT_THROW(collect_avoiders(4, patterns({"~213"})), InvalidArgument);
  EXPECT_EQ(collect_avoiders(0, p312).size(), 1u);
}

TEST(Enumerate, CatalanForEverySingleLengthThreePattern) {
  for (const char* t : {"123", "132", "213", "231", "312", "321"}) {
    const auto ps = patterns({t});
    for (int n = 0; n <= 11; ++n) {
      ASSERT_EQ(collect_avoiders(static_cast<std::size_t>(n), ps).size(), oracle::catalan(n)) << t << " n=" << n;
    }
  }
}

TEST(EnumerateProperty, PrunedAvoidersEqualFilteredPermutations) {
  // Every subset of S_3, n <= 7.
  std::vector<oracle::Perm> s3;
  oracle::for_each_perm(3, [&](const oracle::Perm& p) { s3.push_back(p); });
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Pattern> ps;
    for (unsigned i = 0; i < 6; ++i) {
      if (mask & (1u << i)) ps.emplace_back(oracle::from_vec(s3[i]));
    }
    for (int n = 0; n <= 7; ++n) {
      std::vector<Permutation> expected;
      oracle::for_each_perm(n, [&](const oracle::Perm& p) {
        for (unsigned i = 0; i < 6; ++i) {
          if ((mask & (1u << i)) && oracle::contains(p, s3[i])) return;
        }
        expected.push_back(oracle::from_vec(p));
      });
      ASSERT_EQ(collect_avoiders(static_cast<std::size_t>(n), ps), expected) << "mask=" << mask << " n=" << n;
    }
  }
}

TEST(EnumerateProperty, LengthFourPatternsAgreeWithFilter) {
  for (const char* t : {"1432", "2413", "3142", "1234"}) {
    const auto ps = patterns({"231", t});
    for (int n = 0; n <= 8; ++n) {
      std::vector<Permutation> expected;
      oracle::for_each_perm(n, [&](const oracle::Perm& p) {
        if (!oracle::contains(p, oracle::digits("231")) && !oracle::contains(p, oracle::digits(t))) {
          expected.push_back(oracle::from_vec(p));
        }
      });
      ASSERT_EQ(collect_avoiders(static_cast<std::size_t>(n), ps), expected) << t << " n=" << n;
    }
  }
}

TEST(Enumerate, WithFirstPartitionsAvoiders) {
  const auto ps = patterns({"312"});
  for (std::size_t n = 1; n <= 9; ++n) {
    std::vector<Permutation> joined;
    for (unsigned first = 1; first <= n; ++first) {
      for_each_avoider_with_first(n, ps, first, [&](const Permutation& p) {
        ASSERT_EQ(p(1), first);
        joined.push_back(p);
      });
    }
    EXPECT_EQ(joined, collect_avoiders(n, ps));
  }
}

TEST(Enumerate, Unimodal) {
  std::vector<Permutation> seen;
  for_each_unimodal(3, [&](const Permutation& p) { seen.push_back(p); });
  EXPECT_EQ(texts(seen), (Texts{"123", "132", "231", "321"}));
  seen.clear();
  for_each_unimodal(1, [&](const Permutation& p) { seen.push_back(p); });
  EXPECT_EQ(texts(seen), (Texts{"1"}));
  std::size_t c = 0;
  for_each_unimodal(10, [&](const Permutation&) { ++c; });
  EXPECT_EQ(c, 512u);
  EXPECT_THROW(for_each_unimodal(0, [](const Permutation&) {}), InvalidArgument);
}

TEST(Enumerate, Layered) {
  std::vector<Permutation> seen;
  for_each_layered(3, [&](const Permutation& p) { seen.push_back(p); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(texts(seen), (Texts{"123", "132", "213", "312"}));
  std::size_t c = 0;
  for_each_layered(5, [&](const Permutation&) { ++c; });
  EXPECT_EQ(c, 16u);
}

TEST(EnumerateProperty, StructuredGeneratorsEqualGenericAvoiders) {
  const auto uni = patterns({"213", "312"});
  const auto lay = patterns({"231", "321"});
  for (std::size_t n = 1; n <= 10; ++n) {
    std::vector<Permutation> u, l;
    for_each_unimodal(n, [&](const Permutation& p) { u.push_back(p); });
    for_each_layered(n, [&](const Permutation& p) { l.push_back(p); });
    std::sort(u.begin(), u.end());
    std::sort(l.begin(), l.end());
    ASSERT_EQ(u, collect_avoiders(n, uni)) << n;
    ASSERT_EQ(l, collect_avoiders(n, lay)) << n;
  }
}

TEST(Enumerate, Compositions) {
  std::vector<std::vector<unsigned>> seen;
  for_each_composition(3, [&](const Composition& c) { seen.emplace_back(c.parts().begin(), c.parts().end()); });
  EXPECT_EQ(seen, (std::vector<std::vector<unsigned>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
  std::size_t c = 0;
  for_each_composition(11, [&](const Composition&) { ++c; });
  EXPECT_EQ(c, 1024u);
}

TEST(Enumerate, CountChainExamples) {
  EXPECT_EQ(count_chain(3, parse_chain("(312 : 123)")).count, 1);
  EXPECT_EQ(count_chain(6, parse_chain("(312 : 231)")).count, 70);
  EXPECT_EQ(count_chain(5, parse_chain("(213,312 : 132)")).count, 6);
  const CountResult r = count_chain(6, parse_chain("(312 : 132)"), {.ending_in_one = true});
  EXPECT_TRUE(r.restricted_to_ending_in_one);
  EXPECT_EQ(r.count, 7);
  EXPECT_EQ(r.n, 6u);
  EXPECT_EQ(format_chain(r.chain), "(312 : 132)");
}

TEST(Enumerate, CountChainCapsFullEnumeration) {
  // Slot 1 is empty, so counting has to walk S_n.
  EXPECT_THROW(count_chain(11, parse_chain("(_ : 123)")), CapExceeded);
  CountOptions o;
  o.max_full_n = 6;
  EXPECT_THROW(count_chain(7, parse_chain("(_ : 123)"), o), CapExceeded);
  // Pruned by slot 1, so no cap applies.
  EXPECT_NO_THROW(count_chain(12, parse_chain("(312 : 321)")));
}

TEST(EnumerateProperty, CountChainMatchesOracle) {
  struct Case {
    const char* text;
    std::vector<oracle::Slot> slots;
  };
  const std::vector<Case> cases = {
      {"(312 : 132)", {oracle::slot({"312"}), oracle::slot({"132"})}},
      {"(213,312 : ~213)", {oracle::slot({"213", "312"}), oracle::slot({"~213"})}},
      {"(_ : 123)", {oracle::slot({}), oracle::slot({"123"})}},
      {"(231,1432 : 231)", {oracle::slot({"231", "1432"}), oracle::slot({"231"})}},
      {"(~123 : _ : 21)", {oracle::slot({"~123"}), oracle::slot({}), oracle::slot({"21"})}},
      {"(231,321 : 132 : 231)", {oracle::slot({"231", "321"}), oracle::slot({"132"}), oracle::slot({"231"})}},
  };
  for (const Case& c : cases) {
    const Chain chain = parse_chain(c.text);
    for (int n = 0; n <= 7; ++n) {
      for (bool end1 : {false, true}) {
        CountOptions o;
        o.ending_in_one = end1;
        ASSERT_EQ(count_chain(static_cast<std::size_t>(n), chain, o).count, oracle::count_chain(n, c.slots, end1))
            << c.text << " n=" << n << " end1=" << end1;
      }
    }
  }
}

TEST(EnumerateProperty, SourcesAndWorkerCountsAgree) {
  const char* chains[] = {"(213,312 : 123)", "(213,312 : 321)", "(231,321 : 132 : 231)", "(231,321 : _ : _ : 312)",
                          "(213,312 : ~213)", "(231,321 : 123)"};
  for (const char* text : chains) {
    const Chain c = parse_chain(text);
    for (std::size_t n = 0; n <= 10; ++n) {
      CountOptions generic;
      CountOptions structured;
      structured.source = CountSource::structured;
      CountOptions parallel;
      parallel.jobs = 8;
      const BigInt a = count_chain(n, c, generic).count;
      ASSERT_EQ(a, count_chain(n, c, structured).count) << text << " n=" << n;
      ASSERT_EQ(a, count_chain(n, c, parallel).count) << text << " n=" << n;
    }
  }
}

TEST(Enumerate, ChainAvoidersAreWhatCountChainCounts) {
  const Chain c = parse_chain("(312 : 231)");
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t seen = 0;
    std::set<Permutation> distinct;
    for_each_chain_avoider(n, c, [&](const Permutation& p) {
      ASSERT_TRUE(avoids_chain(p, c));
      distinct.insert(p);
      ++seen;
    });
    EXPECT_EQ(seen, distinct.size());
    EXPECT_EQ(BigInt(seen), count_chain(n, c).count);
  }
}

TEST(Enumerate, CountCompositions) {
  PartConstraint twelve;
  twelve.first_allowed = PartSet::of({1, 2});
  twelve.rest_allowed = PartSet::of({1, 2});
  EXPECT_EQ(count_compositions(3, twelve), 3);
  EXPECT_EQ(count_compositions(0, twelve), 1);
  for (int n = 1; n <= 30; ++n) {
    ASSERT_EQ(count_compositions(static_cast<std::size_t>(n), twelve), BigInt(oracle::fibonacci(n + 1))) << n;
  }

  PartConstraint k15;
  k15.rest_allowed = PartSet::divisors_of(15);
  const BigInt c68 = count_compositions(68, k15);
  const BigInt rhs = 1 + count_compositions(67, k15) + count_compositions(65, k15) + count_compositions(63, k15) +
                     count_compositions(53, k15);
  EXPECT_EQ(c68, rhs);

  PartConstraint all;
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_EQ(count_compositions(n, all), BigInt(1) << (n - 1));
}

TEST(EnumerateProperty, CountCompositionsMatchesExplicitEnumeration) {
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<unsigned> first, rest;
    for (unsigned d = 1; d <= 6; ++d) {
      if (oracle::random_int(0, 1)) first.push_back(d);
      if (oracle::random_int(0, 1)) rest.push_back(d);
    }
    PartConstraint pc;
    pc.first_allowed = PartSet::of(first);
    pc.rest_allowed = PartSet::of(rest);
    for (std::size_t n = 1; n <= 12; ++n) {
      std::uint64_t expected = 0;
      for_each_composition(n, [&](const Composition& c) {
        const auto parts = c.parts();
        if (std::find(first.begin(), first.end(), parts[0]) == first.end()) return;
        for (std::size_t i = 1; i < parts.size(); ++i) {
          if (std::find(rest.begin(), rest.end(), parts[i]) == rest.end()) return;
        }
        ++expected;
      });
      ASSERT_EQ(count_compositions(n, pc), BigInt(expected));
    }
  }
}

TEST(Enumerate, PartSetAlgebra) {
  const PartSet d6 = PartSet::divisors_of(6);
  EXPECT_EQ(std::vector<unsigned>(d6.parts().begin(), d6.parts().end()), (std::vector<unsigned>{1, 2, 3, 6}));
  const PartSet u = d6.unite(PartSet::divisors_of(5));
  EXPECT_EQ(std::vector<unsigned>(u.parts().begin(), u.parts().end()), (std::vector<unsigned>{1, 2, 3, 5, 6}));
  const PartSet i = d6.intersect(PartSet::divisors_of(4));
  EXPECT_EQ(std::vector<unsigned>(i.parts().begin(), i.parts().end()), (std::vector<unsigned>{1, 2}));
  EXPECT_TRUE(PartSet::all().contains(1000));
  EXPECT_TRUE(PartSet::all().intersect(d6).contains(3));
  EXPECT_FALSE(PartSet::all().intersect(d6).is_all());
  EXPECT_TRUE(PartSet::all().unite(d6).is_all());
}
