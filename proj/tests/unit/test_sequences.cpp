#include <gtest/gtest.h>

#include <sstream>

#include "foursq/errors.hpp"
#include "foursq/sequences.hpp"

namespace foursq {
namespace {

TEST(Bfile, Format) {
  std::ostringstream out;
  EXPECT_EQ(emit_bfile({{0, 1}, {1, 4}}, out), 8u);
  EXPECT_EQ(out.str(), "0 1\n1 4\n");
  std::ostringstream empty;
  EXPECT_EQ(emit_bfile({}, empty), 0u);
  EXPECT_EQ(empty.str(), "");
  std::ostringstream gap;
  EXPECT_THROW(emit_bfile({{0, 1}, {2, 3}}, gap), NonContiguousRows);
  EXPECT_THROW(emit_bfile({{1, 1}, {0, 3}}, gap), NonContiguousRows);
}

TEST(Generate, OneThreeFiveOpening) {
  const SequenceDef def{parse_constraint("x+3y+5z ~ square [N]"), DedupRule::ordered(), 0};
  const auto rows = generate(def, 0, 20);
  const std::vector<std::uint64_t> a{1, 2, 2, 2, 2, 1, 1, 1, 1, 3, 3, 2, 2, 2, 4, 2, 2, 5, 5, 3};
  ASSERT_EQ(rows.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(rows[i].first, static_cast<Int>(i));
    EXPECT_EQ(rows[i].second, a[i]);
  }
}

TEST(Generate, OffsetAndWorkers) {
  const SequenceDef def{parse_constraint("x+7y ~ square [N]"), DedupRule::ordered(), 5};
  const auto one = generate(def, 0, 400, 1);
  EXPECT_EQ(one.front().first, 5);
  EXPECT_EQ(one.size(), 395u);
  EXPECT_EQ(one[47 - 5].second, 0u);
  EXPECT_EQ(generate(def, 0, 400, 3), one);
  EXPECT_TRUE(generate(def, 10, 10).empty());
}

TEST(Catalog, ParsesFromTheRight) {
  const auto entries = parse_catalog(
      "# comment\n"
      "\n"
      "A1 x+24y ~ square [N] canonical:z<=w 0 unverified\n"
      "A2 xy+2zw ~ square | xy-2zw ~ square [N] ordered 0\n"
      "A3 legs(x+4y+4z, 9x+3y+3z) [N; y>0] ordered 1 verified\n");
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].spec_text, "x+24y ~ square [N]");
  EXPECT_EQ(entries[0].dedup, DedupRule::canonical_by("z<=w"));
  EXPECT_FALSE(entries[0].verified);
  EXPECT_EQ(entries[1].def().spec.alternatives.size(), 2u);
  EXPECT_FALSE(entries[1].verified);
  EXPECT_EQ(entries[2].offset, 1);
  EXPECT_TRUE(entries[2].verified);
  EXPECT_EQ(&find_entry(entries, "A2"), &entries[1]);
  EXPECT_THROW(find_entry(entries, "A9"), std::invalid_argument);
}

TEST(Catalog, ErrorsCarryLineNumbers) {
  try {
    parse_catalog("# header\nA1 x+ ~ square ordered 0\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_catalog("A1 x ~ square ordered zero\n"), SyntaxError);
  EXPECT_THROW(parse_catalog("A1 x ~ square sorted 0\n"), SyntaxError);
  EXPECT_THROW(parse_catalog("A1 ordered 0\n"), SyntaxError);
}

TEST(Catalog, ShippedFileLoads) {
  const auto entries = load_catalog(default_catalog_path());
  EXPECT_GE(entries.size(), 8u);
  const auto& e = find_entry(entries, "A271518");
  const auto rows = generate(e.def(), 0, 44);
  EXPECT_EQ(rows.back(), (SequenceRow{43, 1}));
}

}  // namespace
}  // namespace foursq
