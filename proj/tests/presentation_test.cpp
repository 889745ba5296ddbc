#include "codepres/presentation.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "testutil.hpp"

namespace codepres {
namespace {

using test::random_code;

std::vector<Record> records_of(const std::vector<std::string>& bits) {
  std::vector<Record> rs;
  for (const auto& b : bits) rs.push_back(Record{parse_word(b), std::nullopt});
  return rs;
}

CharacterSet sample_code() {
  return build_code(5, UniverseMode::listed,
                    records_of({"00000", "01100", "00110", "11000", "11001",
                                "11011"}));
}

std::vector<std::string> member_strings(const Equizone& e) {
  std::vector<std::string> out;
  for (const Word& w : e.members) out.push_back(w.str());
  return out;
}

TEST(EquizonePartition, SampleCodeZonedHeavySplit) {
  const auto classes = equizone_partition(sample_code(), SplitScheme::type1);
  ASSERT_EQ(classes.size(), 4u);

  EXPECT_EQ(classes[0].zone.str(), "000");
  EXPECT_EQ(member_strings(classes[0]), (std::vector<std::string>{"00000"}));
  EXPECT_EQ(classes[0].decinumers, (std::vector<std::uint64_t>{0}));

  EXPECT_EQ(classes[1].zone.str(), "001");
  EXPECT_EQ(member_strings(classes[1]), (std::vector<std::string>{"00110"}));
  EXPECT_EQ(classes[1].decinumers, (std::vector<std::uint64_t>{2}));

  EXPECT_EQ(classes[2].zone.str(), "011");
  EXPECT_EQ(member_strings(classes[2]), (std::vector<std::string>{"01100"}));
  EXPECT_EQ(classes[2].decinumers, (std::vector<std::uint64_t>{0}));

  EXPECT_EQ(classes[3].zone.str(), "110");
  EXPECT_EQ(member_strings(classes[3]),
            (std::vector<std::string>{"11000", "11001", "11011"}));
  EXPECT_EQ(classes[3].decinumers, (std::vector<std::uint64_t>{0, 1, 3}));
  EXPECT_EQ(decinumer_set(classes[3]), (std::vector<std::uint64_t>{0, 1, 3}));
}

TEST(EquizonePartition, SampleCodeNumericHeavySplit) {
  const auto classes = equizone_partition(sample_code(), SplitScheme::type2);
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0].zone.str(), "00");
  EXPECT_EQ(member_strings(classes[0]),
            (std::vector<std::string>{"00000", "00110"}));
  EXPECT_EQ(classes[0].decinumers, (std::vector<std::uint64_t>{0, 6}));
  EXPECT_EQ(classes[1].zone.str(), "01");
  EXPECT_EQ(classes[1].decinumers, (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(classes[2].zone.str(), "11");
  EXPECT_EQ(classes[2].decinumers, (std::vector<std::uint64_t>{0, 1, 3}));
}

TEST(EquizonePartition, ParityMismatch) {
  try {
    equizone_partition(sample_code(), SplitScheme::even);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parity_mismatch);
  }
}

TEST(ZonedAndNumerSets, SampleCode) {
  const auto zones = zoned_set(sample_code(), SplitScheme::type1);
  std::vector<std::string> zone_strings;
  for (const Word& z : zones) zone_strings.push_back(z.str());
  EXPECT_EQ(zone_strings,
            (std::vector<std::string>{"000", "001", "011", "110"}));

  const auto numerics = numer_set(sample_code(), SplitScheme::type1);
  std::vector<std::string> numer_strings;
  for (const Word& m : numerics) numer_strings.push_back(m.str());
  EXPECT_EQ(numer_strings,
            (std::vector<std::string>{"00", "01", "10", "11"}));
}

TEST(Present, SampleCodeEntries) {
  const Presentation p = present(sample_code(), SplitScheme::type1);
  EXPECT_EQ(p.degree(), 4u);
  EXPECT_EQ(p.split, 3u);
  ASSERT_EQ(p.entries.size(), 4u);
  EXPECT_EQ(decinumer_set(p.entries[0]), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(decinumer_set(p.entries[1]), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(decinumer_set(p.entries[2]), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(decinumer_set(p.entries[3]),
            (std::vector<std::uint64_t>{0, 1, 3}));
  EXPECT_EQ(p.zoned_set.size(), 4u);
}

TEST(Present, SingleWordCode) {
  const CharacterSet c =
      build_code(4, UniverseMode::listed, records_of({"1100"}));
  const Presentation p = present(c, SplitScheme::even);
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_EQ(p.entries[0].zone.str(), "11");
  EXPECT_EQ(decinumer_set(p.entries[0]), (std::vector<std::uint64_t>{0}));
}

TEST(Reconstruct, RoundTripsSampleCode) {
  const CharacterSet c = sample_code();
  for (SplitScheme scheme : valid_schemes(c.blocklength())) {
    std::vector<Word> expected = c.words();
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(reconstruct(present(c, scheme)), expected);
  }
}

TEST(Reconstruct, EmptyFullUniverseCode) {
  const CharacterSet c = build_code(4, UniverseMode::full, {});
  EXPECT_EQ(reconstruct(present(c, SplitScheme::even)), std::vector<Word>{});
}

TEST(Reconstruct, RejectsOverflowingDecinumer) {
  Presentation p = present(sample_code(), SplitScheme::type1);
  p.entries[0].assigned_decinumers = {4};  // numeric width is 2
  try {
    reconstruct(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::decinumer_overflow);
  }
}

TEST(FullUniverse, PartitionCoversTheWholeSpace) {
  const CharacterSet ebcdic = test::build_ebcdic_code();
  const auto classes = equizone_partition(ebcdic, SplitScheme::even);
  ASSERT_EQ(classes.size(), 16u);

  const auto expected = test::ebcdic_expected_sets();
  std::size_t total_members = 0, total_assigned = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(decimal_value(classes[i].zone), i);
    EXPECT_EQ(classes[i].members.size(), 16u);
    EXPECT_EQ(classes[i].decinumers.size(), 16u);
    EXPECT_EQ(classes[i].assigned_decinumers, expected[i]);
    total_members += classes[i].members.size();
    total_assigned += classes[i].assigned_decinumers.size();
  }
  EXPECT_EQ(total_members, 256u);
  EXPECT_EQ(total_assigned, 140u);

  const Presentation p = present(ebcdic, SplitScheme::even);
  EXPECT_EQ(p.degree(), 16u);
  EXPECT_EQ(p.zoned_set.size(), 16u);   // the 4-bit hexad set
  EXPECT_EQ(p.numer_set.size(), 16u);
  std::vector<Word> expected_words = ebcdic.words();
  std::sort(expected_words.begin(), expected_words.end());
  EXPECT_EQ(reconstruct(p), expected_words);
  EXPECT_EQ(expected_words.size(), 140u);
}

TEST(FullUniverse, EmptyCodeStillPartitions) {
  const CharacterSet c = build_code(4, UniverseMode::full, {});
  const auto classes = equizone_partition(c, SplitScheme::even);
  ASSERT_EQ(classes.size(), 4u);
  for (const Equizone& e : classes) {
    EXPECT_EQ(e.members.size(), 4u);
    EXPECT_TRUE(e.assigned_decinumers.empty());
  }
}

TEST(AllPresentations, CountFollowsParity) {
  EXPECT_EQ(all_presentations(sample_code()).size(), 2u);
  EXPECT_EQ(all_presentations(test::build_ebcdic_code()).size(), 1u);

  const auto two = all_presentations(sample_code());
  EXPECT_EQ(two[0].scheme, SplitScheme::type1);
  EXPECT_EQ(two[1].scheme, SplitScheme::type2);
  EXPECT_NE(two[0].scheme, two[1].scheme);

  const CharacterSet tiny =
      build_code(1, UniverseMode::listed, records_of({"1"}));
  try {
    all_presentations(tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_split);
  }
}

// Partition laws on randomized codes: classes are non-empty, disjoint,
// zone-consistent, ordered by zone value, and cover the code exactly.
void assert_partition_laws(const CharacterSet& c, SplitScheme scheme) {
  const auto classes = equizone_partition(c, scheme);
  const std::size_t s = split_point(c.blocklength(), scheme);
  const std::size_t numeric_width = c.blocklength() - s;

  std::vector<Word> covered;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Equizone& e = classes[i];
    ASSERT_FALSE(e.members.empty());
    ASSERT_EQ(e.zone.size(), s);
    ASSERT_EQ(e.decinumers.size(), e.members.size());
    ASSERT_TRUE(std::is_sorted(e.decinumers.begin(), e.decinumers.end()));
    ASSERT_TRUE(std::includes(e.decinumers.begin(), e.decinumers.end(),
                              e.assigned_decinumers.begin(),
                              e.assigned_decinumers.end()));
    if (i > 0) {
      ASSERT_LT(classes[i - 1].zone, e.zone);
    }
    for (const Word& m : e.members) {
      auto [zoned, numeric] = split_word(m, scheme);
      ASSERT_EQ(zoned, e.zone);  // membership == zero zoned difference
      ASSERT_EQ(decimal_value(word_diff(zoned, e.zone)), 0u);
      covered.push_back(m);
    }
    for (std::uint64_t g : e.decinumers)
      ASSERT_LT(g, std::uint64_t{1} << numeric_width);
  }

  std::vector<Word> space;
  if (c.universe() == UniverseMode::full) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << c.blocklength()); ++v)
      space.push_back(Word::from_value(v, c.blocklength()));
  } else {
    space = c.words();
  }
  std::sort(space.begin(), space.end());
  std::sort(covered.begin(), covered.end());
  ASSERT_EQ(covered, space);  // disjoint and exhaustive

  ASSERT_LE(classes.size(), std::size_t{1} << s);
  if (c.universe() == UniverseMode::listed) {
    ASSERT_LE(classes.size(), c.order());
    // Same classes as the text-level grouping oracle.
    std::vector<std::string> words;
    for (const Word& w : c.words()) words.push_back(w.str());
    const auto oracle = test::text_partition(
        words, scheme == SplitScheme::even  ? 'e'
               : scheme == SplitScheme::type1 ? '1'
                                              : '2');
    ASSERT_EQ(classes.size(), oracle.size());
    std::size_t i = 0;
    for (const auto& [zone_bits, members] : oracle) {
      ASSERT_EQ(classes[i].zone.str(), zone_bits);
      ASSERT_EQ(member_strings(classes[i]), members);
      ++i;
    }
  }
}

TEST(EquizonePartition, LawsOnRandomCodes) {
  std::mt19937 rng(4711);
  for (int trial = 0; trial < 300; ++trial) {
    test::RandomCodeOptions opt;
    opt.allow_full = trial % 3 == 0;
    opt.max_blocklength = opt.allow_full ? 8 : 10;
    const CharacterSet c = random_code(rng, opt);
    for (SplitScheme scheme : valid_schemes(c.blocklength()))
      assert_partition_laws(c, scheme);
  }
}

TEST(EquizonePartition, LawsOnAllThreeBitCodes) {
  // Every non-empty subset of the 8-word space, both odd-length splits.
  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    std::vector<Record> records;
    for (std::uint64_t v = 0; v < 8; ++v)
      if (mask & (std::uint64_t{1} << v))
        records.push_back(Record{Word::from_value(v, 3), std::nullopt});
    const CharacterSet c =
        build_code(3, UniverseMode::listed, std::move(records));
    for (SplitScheme scheme : valid_schemes(3)) {
      assert_partition_laws(c, scheme);
      std::vector<Word> expected = c.words();
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(reconstruct(present(c, scheme)), expected);
    }
  }
}

TEST(Reconstruct, RoundTripsRandomCodes) {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 500; ++trial) {
    test::RandomCodeOptions opt;
    opt.allow_full = trial % 5 == 0;
    opt.max_blocklength = opt.allow_full ? 8 : 10;
    const CharacterSet c = random_code(rng, opt);
    std::vector<Word> expected = c.words();
    std::sort(expected.begin(), expected.end());
    for (SplitScheme scheme : valid_schemes(c.blocklength()))
      ASSERT_EQ(reconstruct(present(c, scheme)), expected);
  }
}

TEST(Present, SubsetsPresentWithinParentDegree) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    test::RandomCodeOptions opt;
    opt.max_order = 20;
    const CharacterSet c = random_code(rng, opt);
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < c.order(); ++i)
      if (rng() & 1) indices.push_back(i);
    if (indices.empty()) indices.push_back(rng() % c.order());
    const CharacterSet sub = subset(c, indices);
    for (SplitScheme scheme : valid_schemes(c.blocklength())) {
      const Presentation parent = present(c, scheme);
      const Presentation child = present(sub, scheme);
      ASSERT_LE(child.degree(), parent.degree());
      ASSERT_LE(child.zoned_set.size(),
                std::size_t{1} << split_point(c.blocklength(), scheme));
    }
  }
}

TEST(PresentationCount, RandomCodesFollowParity) {
  std::mt19937 rng(616);
  for (int trial = 0; trial < 200; ++trial) {
    const CharacterSet c = random_code(rng);
    const auto ps = all_presentations(c);
    ASSERT_EQ(ps.size(), c.blocklength() % 2 == 0 ? 1u : 2u);
    if (ps.size() == 2) {
      ASSERT_NE(ps[0].scheme, ps[1].scheme);
    }
  }
}

}  // namespace
}  // namespace codepres
