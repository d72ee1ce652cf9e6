#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "cpeak/oracle.hpp"

namespace cpeak {
namespace {

// Independent of the library: peaks by direct comparison on a string word.
std::set<std::string> brute_force_class(int n, const std::set<int>& target) {
  std::string word;
  for (int v = 1; v <= n; ++v) word += static_cast<char>('0' + v);
  std::set<std::string> out;
  do {
    std::set<int> peaks;
    for (int i = 1; i + 1 < n; ++i) {
      if (word[i - 1] < word[i] && word[i] > word[i + 1]) peaks.insert(word[i] - '0');
    }
    if (peaks == target) out.insert(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::set<std::string> as_words(const std::vector<Permutation>& perms) {
  std::set<std::string> out;
  for (const auto& p : perms) out.insert(format_permutation(p));
  return out;
}

TEST(OracleCount, Examples) {
  EXPECT_EQ(oracle_count(PeakSet(5, {4, 5})), 12);
  EXPECT_EQ(oracle_count(PeakSet(4, {3, 4})), 0);
  EXPECT_EQ(oracle_count(PeakSet(8, {6, 7, 8})), 2880);
}

TEST(OracleCount, ScaleLimitIsAnError) {
  EXPECT_THROW(oracle_count(PeakSet(10, {})), ScaleError);
  OracleOptions wide;
  wide.limit = 40;
  EXPECT_THROW(oracle_count(PeakSet(13, {}), wide), ScaleError);  // hard cap
}

TEST(EnumerateClass, PublishedListing) {
  const std::set<std::string> expected = {"14253", "14352", "24153", "34152", "24351", "34251",
                                          "15243", "15342", "25143", "35142", "25341", "35241"};
  EXPECT_EQ(as_words(enumerate_class(PeakSet(5, {4, 5}))), expected);
}

TEST(EnumerateClass, SmallClassesMatchBruteForce) {
  EXPECT_EQ(brute_force_class(3, {}), (std::set<std::string>{"123", "213", "312", "321"}));
  EXPECT_EQ(brute_force_class(3, {3}), (std::set<std::string>{"132", "231"}));
  EXPECT_EQ(as_words(enumerate_class(PeakSet(3, {}))), brute_force_class(3, {}));
  EXPECT_EQ(as_words(enumerate_class(PeakSet(3, {3}))), brute_force_class(3, {3}));
  EXPECT_EQ(as_words(enumerate_class(PeakSet(7, {3, 5, 7}))), brute_force_class(7, {3, 5, 7}));
}

TEST(EnumerateClass, LexicographicAndConsistent) {
  for (int n = 3; n <= 7; ++n) {
    const CountTable table = oracle_table(n);
    for (const auto& [key, count] : table.entries()) {
      const PeakSet s(n, from_mask(key));
      const auto perms = enumerate_class(s);
      ASSERT_EQ(BigInt(perms.size()), count);
      ASSERT_TRUE(std::is_sorted(perms.begin(), perms.end()));
      for (const auto& p : perms) ASSERT_EQ(circular_peak_set(p), s);
    }
  }
  EXPECT_TRUE(enumerate_class(PeakSet(4, {3, 4})).empty());
}

TEST(OracleTable, Examples) {
  const CountTable t3 = oracle_table(3);
  EXPECT_EQ(t3.size(), 2u);
  EXPECT_EQ(t3.at(std::vector<int>{}), 4);
  EXPECT_EQ(t3.at(std::vector<int>{3}), 2);

  const CountTable t5 = oracle_table(5);
  EXPECT_EQ(t5.size(), 6u);
  EXPECT_EQ(t5.total(), 120);

  EXPECT_EQ(oracle_table(6).at(std::vector<int>{4, 6}), 72);
}

TEST(OracleTable, TotalsAndFeasibility) {
  for (int n = 3; n <= 9; ++n) {
    const CountTable t = oracle_table(n);
    EXPECT_EQ(t.total(), factorial(n)) << "n=" << n;
    for (SetMask key = 0; key < (SetMask{1} << n); ++key) {
      const auto s = from_mask(key << 1);
      ASSERT_EQ(is_feasible(s, n), t.at(key << 1) > 0) << "n=" << n << " S=" << format_set(s);
    }
  }
}

TEST(OracleTable, ThreadedMatchesSingleThreaded) {
  OracleOptions threaded;
  threaded.threads = 4;
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(oracle_table(n, threaded), oracle_table(n));
}

TEST(OracleTable, AgreesWithPointCounts) {
  const CountTable t = oracle_table(6);
  for (const auto& [key, count] : t.entries()) EXPECT_EQ(oracle_count(PeakSet(6, from_mask(key))), count);
}

}  // namespace
}  // namespace cpeak
