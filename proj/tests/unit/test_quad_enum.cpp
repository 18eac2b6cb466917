#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "foursq/errors.hpp"
#include "foursq/quad_enum.hpp"

namespace foursq {
namespace {

using Tuple = std::array<Int, 4>;

std::vector<Tuple> coords_of(const std::vector<Representation>& reps) {
  std::vector<Tuple> out;
  for (const auto& r : reps) out.push_back(r.coords());
  return out;
}

TEST(Enumerate, TrivialAndSmall) {
  EXPECT_EQ(coords_of(enumerate_four_squares(0)), (std::vector<Tuple>{{0, 0, 0, 0}}));
  const std::vector<Tuple> three{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};
  EXPECT_EQ(coords_of(enumerate_four_squares(3)), three);
}

TEST(Enumerate, CountsMatchOracle) {
  EXPECT_EQ(count_four_squares(71), 36u);
  EXPECT_EQ(count_four_squares(50), 72u);
  const std::vector<std::uint64_t> r4{1, 8, 24, 32, 24, 48, 96, 64, 24, 104, 144};
  for (Int n = 0; n <= 10; ++n) EXPECT_EQ(count_four_squares(n, kAllInteger), r4[n]) << n;
}

TEST(Enumerate, LexicographicOverNaturals) {
  const auto reps = coords_of(enumerate_four_squares(130));
  EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
  EXPECT_EQ(std::set<Tuple>(reps.begin(), reps.end()).size(), reps.size());
}

TEST(Enumerate, IntegerOrderPositiveBeforeNegative) {
  const auto reps = coords_of(enumerate_four_squares(1, kAllInteger));
  ASSERT_EQ(reps.size(), 8u);
  EXPECT_EQ(reps.front(), (Tuple{0, 0, 0, 1}));
  EXPECT_EQ(reps[1], (Tuple{0, 0, 0, -1}));
  EXPECT_EQ(reps.back(), (Tuple{-1, 0, 0, 0}));
}

TEST(Enumerate, VisitorStopsEarly) {
  int seen = 0;
  const bool stopped = for_each_representation(50, kAllNatural, [&](const Representation&) {
    return ++seen == 3;
  });
  EXPECT_TRUE(stopped);
  EXPECT_EQ(seen, 3);
  EXPECT_THROW(enumerate_four_squares(kMaxN + 1), OverflowError);
}

TEST(Find, OneThreeFiveAt43) {
  const auto f = find_constrained(43, parse_constraint("x+3y+5z ~ square [N]"));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->rep.coords(), (Tuple{1, 5, 4, 1}));
  EXPECT_EQ(f->witness.t, 6);
}

TEST(Find, ZeroGivesOrigin) {
  const auto f = find_constrained(0, parse_constraint("x+3y+5z ~ square [N]"));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->rep.coords(), (Tuple{0, 0, 0, 0}));
  EXPECT_EQ(f->witness.t, 0);
}

TEST(Find, AbsenceVisitsEveryRepresentation) {
  const auto spec = parse_constraint("x+7y ~ square [N]");
  SearchStats stats;
  EXPECT_FALSE(find_constrained(47, spec, {.prune = false}, &stats));
  EXPECT_EQ(stats.visited, count_four_squares(47));
  EXPECT_FALSE(find_constrained(47, spec));
}

TEST(Find, PruningPreservesFirstWitness) {
  for (const char* text : {"x+3y+5z ~ square [N]", "x-y ~ cube [N]", "x+y ~ 2*cube [Z]",
                           "legs(x+4y+4z, 9x+3y+3z) [N; y>0]", "(x+z)*(y+w) ~ square [Z]",
                           "x+24y ~ square [N; z<=w]"}) {
    const auto spec = parse_constraint(text);
    for (Int n = 0; n <= 150; ++n) {
      const auto a = find_constrained(n, spec, {.prune = true});
      const auto b = find_constrained(n, spec, {.prune = false});
      ASSERT_EQ(a.has_value(), b.has_value()) << text << " n=" << n;
      if (a) {
        ASSERT_EQ(a->rep, b->rep) << text << " n=" << n;
      }
      ASSERT_EQ(count_constrained(n, spec, DedupRule::ordered(), {.prune = true}),
                count_constrained(n, spec, DedupRule::ordered(), {.prune = false}))
          << text << " n=" << n;
    }
  }
}

TEST(Count, SequencesMatchOracle) {
  const auto one_three_five = parse_constraint("x+3y+5z ~ square [N]");
  const std::vector<std::uint64_t> a{1, 2, 2, 2, 2, 1, 1, 1, 1, 3, 3, 2, 2, 2, 4, 2, 2, 5, 5, 3};
  for (Int n = 0; n < 20; ++n) EXPECT_EQ(count_constrained(n, one_three_five), a[n]) << n;
  EXPECT_EQ(count_constrained(43, one_three_five), 1u);

  const auto x24 = parse_constraint("x+24y ~ square [N]");
  const auto zw = DedupRule::canonical_by("z<=w");
  const std::vector<std::uint64_t> b{1, 2, 3, 2, 2, 3, 3, 2, 1, 3, 4, 2, 1, 2, 2, 2, 2, 3, 5, 2};
  for (Int n = 0; n < 20; ++n) EXPECT_EQ(count_constrained(n, x24, zw), b[n]) << n;

  EXPECT_EQ(count_constrained(47, parse_constraint("x+7y ~ square [N]")), 0u);
}

TEST(Count, TrivialTargetCountsEverything) {
  const auto all = parse_constraint("0 ~ zero [N]");
  for (Int n : {0, 3, 50, 71, 130}) EXPECT_EQ(count_constrained(n, all), count_four_squares(n)) << n;
  const auto allz = parse_constraint("0 ~ zero [Z]");
  EXPECT_EQ(count_constrained(10, allz), count_four_squares(10, kAllInteger));
}

TEST(Count, UnorderedQuotientsPermutations) {
  const auto all = parse_constraint("0 ~ zero [N]");
  EXPECT_EQ(count_constrained(50, all, DedupRule::unordered()), 5u);
  const auto sym = parse_constraint("x+y+z+w ~ square [N]");
  for (Int n = 0; n <= 200; ++n) {
    std::set<Tuple> classes;
    for_each_constrained(n, sym, [&](const Found& f) {
      Tuple t = f.rep.coords();
      std::sort(t.begin(), t.end());
      classes.insert(t);
      return false;
    });
    EXPECT_EQ(count_constrained(n, sym, DedupRule::unordered()), classes.size()) << n;
  }
}

TEST(DedupRule, ParseAndText) {
  EXPECT_EQ(DedupRule::parse("ordered"), DedupRule::ordered());
  EXPECT_EQ(DedupRule::parse("unordered"), DedupRule::unordered());
  const auto c = DedupRule::parse("canonical:z<=w");
  EXPECT_EQ(c.kind, DedupRule::Kind::SideConditionCanonical);
  EXPECT_EQ(DedupRule::parse(c.to_string()), c);
  EXPECT_THROW(DedupRule::parse("sorted"), std::invalid_argument);
}

}  // namespace
}  // namespace foursq
