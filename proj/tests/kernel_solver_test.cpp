#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "randlp/generator.hpp"
#include "randlp/kernel_solver.hpp"
#include "randlp/semantics.hpp"
#include "test_util.hpp"

using namespace randlp;
using randlp::test::n2;
using randlp::test::set_of;

TEST(AnswerSetN2, Examples) {
  const auto p = n2(2, {{0, 1}});
  EXPECT_TRUE(is_answer_set_n2(p, set_of(2, {0})));
  EXPECT_FALSE(is_answer_set_n2(p, set_of(2, {1})));
  EXPECT_FALSE(is_answer_set_n2(p, set_of(2, {})));
  EXPECT_FALSE(is_answer_set_n2(p, set_of(2, {0, 1})));
}

TEST(AnswerSetN2, RefusesOtherPrograms) {
  const Program positive(2, {Rule(Atom{0}, {Atom{1}}, {})});
  EXPECT_THROW(is_answer_set_n2(positive, AtomSet(2)), InvalidArgument);
  EXPECT_THROW(is_answer_set_n2(Program(2, {}), AtomSet(2)), InvalidArgument);
  EXPECT_THROW(enumerate_answer_sets(positive), InvalidArgument);
  EXPECT_THROW(enumerate_answer_sets(Program(2, {})), InvalidArgument);
}

TEST(AnswerSetN2, AgreesWithGeneralChecker) {
  for (std::size_t n = 2; n <= 12; n += 2) {
    for (auto [c1, c2] : {std::pair{1.5, 0.0}, std::pair{1.0, 1.0}}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto p = generate(LinearModelParams(n, c1, c2), Seed{seed});
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
          const auto s = AtomSet::from_mask(n, m);
          ASSERT_EQ(is_answer_set_n2(p, s), is_answer_set_general(p, s))
              << "n=" << n << " seed=" << seed << " mask=" << m;
        }
      }
    }
  }
}

TEST(Enumerate, Examples) {
  const auto two_cycle = n2(2, {{0, 1}, {1, 0}});
  auto c = enumerate_answer_sets(two_cycle);
  EXPECT_EQ(c.sets, (std::vector<AtomSet>{set_of(2, {0}), set_of(2, {1})}));
  EXPECT_EQ(c.size_histogram.at(1), 2u);
  EXPECT_FALSE(c.truncated);

  EXPECT_EQ(enumerate_answer_sets(n2(2, {{0, 1}})).sets, std::vector<AtomSet>{set_of(2, {0})});
  EXPECT_EQ(count_answer_sets(two_cycle), 2u);
  EXPECT_EQ(count_answer_sets(n2(1, {{0, 0}})), 0u);
  EXPECT_FALSE(has_answer_set(n2(1, {{0, 0}})));

  const auto three = n2(3, {{0, 1}, {1, 0}, {2, 0}});
  EXPECT_EQ(enumerate_brute_force(three).sets,
            (std::vector<AtomSet>{set_of(3, {0}), set_of(3, {1, 2})}));
  EXPECT_EQ(enumerate_answer_sets(three).sets, enumerate_brute_force(three).sets);
}

TEST(Enumerate, LimitTruncates) {
  const auto two_cycle = n2(2, {{0, 1}, {1, 0}});
  auto one = enumerate_answer_sets(two_cycle, 1);
  EXPECT_EQ(one.count, 1u);
  EXPECT_TRUE(one.truncated);
  EXPECT_TRUE(enumerate_answer_sets(two_cycle, 0).truncated);
  EXPECT_FALSE(enumerate_answer_sets(two_cycle, 2).truncated);
  EXPECT_FALSE(enumerate_answer_sets(n2(1, {{0, 0}}), 0).truncated);
}

TEST(BruteForce, CapAndEmpty) {
  EXPECT_THROW(enumerate_brute_force(Program(3, {})), InvalidArgument);
  try {
    enumerate_brute_force(n2(21, {{0, 1}}));
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.n(), 21u);
    EXPECT_EQ(e.cap(), 20u);
  }
  EXPECT_NO_THROW(enumerate_brute_force(n2(4, {{0, 1}}), 4));
  EXPECT_THROW(enumerate_brute_force(n2(4, {{0, 1}}), 3), CapExceeded);
}

TEST(Enumerate, MatchesBruteForceAtSixteen) {
  for (auto [c1, c2] : {std::pair{2.0, 0.0}, std::pair{5.0, 0.0}, std::pair{3.0, 2.0}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto p = generate(LinearModelParams(16, c1, c2), Seed{seed});
      EXPECT_EQ(enumerate_answer_sets(p).sets, enumerate_brute_force(p).sets)
          << "c1=" << c1 << " c2=" << c2 << " seed=" << seed;
    }
  }
}

TEST(Enumerate, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = generate(LinearModelParams(60, 2.0, 0.5), Seed{seed});
    const auto c = enumerate_answer_sets(p);
    const auto again = enumerate_answer_sets(p);
    EXPECT_EQ(c.sets, again.sets);
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
      EXPECT_GT(c.sets[i].size(), 0u);
      EXPECT_LT(c.sets[i].size(), 60u);
      EXPECT_TRUE(is_answer_set_general(p, c.sets[i]));
      if (i > 0) {
        EXPECT_LT(c.sets[i - 1], c.sets[i]);
      }
      for (std::size_t j = 0; j < c.sets.size(); ++j) {
        if (i != j) {
          EXPECT_FALSE(c.sets[i].is_subset_of(c.sets[j]));
        }
      }
    }
    EXPECT_EQ(count_answer_sets(p), c.count);
    EXPECT_EQ(has_answer_set(p), c.count > 0);
  }
}

// An odd cycle of rules has no kernel; an even one has two.
TEST(Enumerate, OddCycleHasNoAnswerSet) {
  EXPECT_EQ(count_answer_sets(n2(3, {{0, 1}, {1, 2}, {2, 0}})), 0u);
  EXPECT_EQ(count_answer_sets(n2(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), 2u);
}

TEST(Enumerate, LargeSparseProgramsStayFast) {
  std::size_t consistent = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = generate(LinearModelParams(1000, 4.0, 4.0), Seed{seed});
    KernelSolver solver(p);
    solver.solve([&](const AtomSet& s) {
      EXPECT_TRUE(is_answer_set_n2(p, s));
      ++consistent;
      return false;
    });
  }
  EXPECT_LE(consistent, 20u);
}
