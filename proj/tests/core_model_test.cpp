#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "randlp/atom_set.hpp"
#include "randlp/program.hpp"
#include "randlp/semantics.hpp"
#include "test_util.hpp"

using namespace randlp;
using randlp::test::at;
using randlp::test::n2;
using randlp::test::set_of;

namespace {

const Rule a_not_b = Rule::negative(at(0), at(1));

std::vector<AtomSet> all_answer_sets(const Program& p) {
  std::vector<AtomSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.universe()); ++m) {
    auto s = AtomSet::from_mask(p.universe(), m);
    if (is_answer_set_general(p, s)) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(AtomSet, BasicOperations) {
  AtomSet s(130);
  EXPECT_TRUE(s.empty());
  s.insert(at(0));
  s.insert(at(64));
  s.insert(at(129));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(at(64)));
  s.erase(at(64));
  EXPECT_FALSE(s.contains(at(64)));
  EXPECT_EQ(s.members(), (std::vector<Atom>{at(0), at(129)}));
  EXPECT_TRUE(s.is_subset_of(AtomSet::full(130)));
  EXPECT_EQ(AtomSet::full(130).size(), 130u);
  EXPECT_THROW(s.insert(at(130)), InvalidArgument);
  EXPECT_EQ(s.restrict_to(100), set_of(100, {0}));
}

TEST(AtomSet, OrdersByBitsetValue) {
  EXPECT_LT(AtomSet::from_mask(3, 0b001), AtomSet::from_mask(3, 0b010));
  EXPECT_LT(AtomSet::from_mask(3, 0b011), AtomSet::from_mask(3, 0b100));
  AtomSet lo(70);
  AtomSet hi(70);
  lo.insert(at(63));
  hi.insert(at(64));
  EXPECT_LT(lo, hi);
}

TEST(Rule, RejectsDuplicateBodyAtoms) {
  EXPECT_THROW(Rule(at(0), {at(1)}, {at(1)}), InvalidArgument);
  EXPECT_THROW(Rule(at(0), {}, {at(2), at(2)}), InvalidArgument);
  EXPECT_NO_THROW(Rule(at(0), {}, {at(0)}));
}

TEST(Rule, Classification) {
  EXPECT_TRUE(a_not_b.is_pure());
  EXPECT_TRUE(Rule::negative(at(0), at(0)).is_contradiction());
  EXPECT_FALSE(Rule(at(0), {at(1)}, {}).is_two_literal());
}

TEST(Program, CanonicalAndValidated) {
  const Program p(2, {Rule::negative(at(1), at(0)), a_not_b, a_not_b});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.rules().front(), a_not_b);
  EXPECT_TRUE(p.is_n2());
  EXPECT_TRUE(p.is_negative());
  EXPECT_FALSE(p.is_positive());
  EXPECT_THROW(Program(1, {a_not_b}), InvalidArgument);
  EXPECT_THROW(Program(2, {a_not_b}, {"a"}), InvalidArgument);
  EXPECT_EQ(Program(2, {a_not_b}, {"x", "y"}), Program(2, {a_not_b}));
}

TEST(Satisfies, Examples) {
  EXPECT_TRUE(satisfies(a_not_b, set_of(2, {0})));
  EXPECT_FALSE(satisfies(a_not_b, set_of(2, {})));
  EXPECT_TRUE(satisfies(a_not_b, set_of(2, {1})));
  EXPECT_THROW(satisfies(a_not_b, set_of(1, {})), InvalidArgument);
}

TEST(Reduct, Examples) {
  const Program p(2, {a_not_b});
  EXPECT_TRUE(reduct(p, set_of(2, {1})).empty());
  EXPECT_EQ(reduct(p, set_of(2, {0})), Program(2, {Rule(at(0), {}, {})}));

  const auto q = n2(2, {{0, 0}, {1, 0}});
  EXPECT_EQ(reduct(q, set_of(2, {})), Program(2, {Rule(at(0), {}, {}), Rule(at(1), {}, {})}));
  EXPECT_THROW(reduct(q, set_of(3, {})), InvalidArgument);
}

TEST(Reduct, EmptyAndFullInterpretations) {
  SplitMix64 rng(Seed{11});
  for (int i = 0; i < 50; ++i) {
    const auto p = randlp::test::random_normal(6, 8, 3, 0.5, rng);
    std::vector<Rule> stripped;
    std::vector<Rule> kept;
    for (const auto& r : p.rules()) {
      stripped.emplace_back(r.head(), r.pos_body(), std::vector<Atom>{});
      if (r.neg_body().empty()) kept.push_back(r);
    }
    EXPECT_EQ(reduct(p, AtomSet(6)), Program(6, stripped));
    EXPECT_EQ(reduct(p, AtomSet::full(6)), Program(6, kept));
  }
}

TEST(LeastModel, Examples) {
  EXPECT_EQ(least_model(Program(2, {Rule(at(0), {}, {}), Rule(at(1), {at(0)}, {})})),
            set_of(2, {0, 1}));
  EXPECT_EQ(least_model(Program(3, {})), AtomSet(3));
  EXPECT_EQ(least_model(Program(2, {Rule(at(0), {at(1)}, {}), Rule(at(1), {at(0)}, {})})),
            AtomSet(2));
  EXPECT_THROW(least_model(Program(2, {a_not_b})), InvalidArgument);
}

TEST(LeastModel, MonotoneInRules) {
  SplitMix64 rng(Seed{3});
  for (int i = 0; i < 200; ++i) {
    const auto p = randlp::test::random_normal(8, 10, 3, 0.0, rng);
    const auto base = least_model(p);
    auto rules = p.rules();
    const auto extra = randlp::test::random_normal(8, 1, 3, 0.0, rng).rules();
    rules.insert(rules.end(), extra.begin(), extra.end());
    EXPECT_TRUE(base.is_subset_of(least_model(Program(8, rules))));
  }
}

TEST(AnswerSetGeneral, Examples) {
  EXPECT_TRUE(is_answer_set_general(Program(2, {a_not_b}), set_of(2, {0})));
  const auto contra = n2(1, {{0, 0}});
  EXPECT_FALSE(is_answer_set_general(contra, set_of(1, {0})));
  EXPECT_FALSE(is_answer_set_general(contra, set_of(1, {})));
  EXPECT_TRUE(is_answer_set_general(Program(3, {}), AtomSet(3)));
  EXPECT_THROW(is_answer_set_general(Program(3, {}), AtomSet(2)), InvalidArgument);
}

TEST(AnswerSetGeneral, AnswerSetsAreIncomparable) {
  SplitMix64 rng(Seed{5});
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int i = 0; i < 8; ++i) {
      const auto p = randlp::test::random_normal(n, n + 2, 3, 0.6, rng);
      const auto sets = all_answer_sets(p);
      for (std::size_t x = 0; x < sets.size(); ++x)
        for (std::size_t y = 0; y < sets.size(); ++y)
          if (x != y) {
            EXPECT_FALSE(sets[x].is_subset_of(sets[y]));
          }
      checked += sets.size();
    }
  }
  EXPECT_GT(checked, 20u);
}
