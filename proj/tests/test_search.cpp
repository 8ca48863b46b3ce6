#include <gtest/gtest.h>

#include <set>

#include "lcdkit.hpp"

using namespace lcdkit;

namespace {

std::vector<std::string> summary(const SearchReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.results)
    out.push_back(std::to_string(e.distance->value) + ":" + std::to_string(e.trial) + ":" + render(e.code));
  return out;
}

}  // namespace

TEST(Search, ExhaustiveHammingReachesFour) {
  auto r = search(hamming(2, 3), {0, 1u << 20, SearchStrategy::exhaustive, 5, 1});
  EXPECT_EQ(r.ell, 3u);
  EXPECT_EQ(r.trials, 168u * 8u);  // |GL(3,2)| * 2^3
  ASSERT_EQ(r.results.size(), 5u);
  EXPECT_EQ(r.results[0].distance->value, 4u);
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& e = r.results[i];
    EXPECT_TRUE(is_lcd(e.code));
    EXPECT_EQ(e.code.length(), 10u);
    EXPECT_EQ(min_distance(e.code).value, e.distance->value);
    if (i) {
      EXPECT_GE(r.results[i - 1].distance->value, e.distance->value);
      if (r.results[i - 1].distance->value == e.distance->value) {
        EXPECT_TRUE(lex_less(r.results[i - 1].code.generator(), e.code.generator()));
      }
    }
  }
}

TEST(Search, BudgetZero) {
  auto r = search(hamming(2, 3), {1, 0, SearchStrategy::random, 3, 1});
  EXPECT_TRUE(r.results.empty());
  auto x = search(hamming(2, 3), {1, 0, SearchStrategy::exhaustive, 3, 1});
  EXPECT_TRUE(x.results.empty());
}

TEST(Search, DeterministicAcrossWorkers) {
  auto base = simplex(3, 3);
  SearchConfig cfg{12345, 3000, SearchStrategy::random, 4, 1};
  auto a = summary(search(base, cfg));
  cfg.workers = 3;
  auto b = summary(search(base, cfg));
  cfg.workers = 1;
  auto c = summary(search(base, cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  cfg.seed = 54321;
  EXPECT_NE(summary(search(base, cfg)), a);
}

TEST(Search, ChunkBoundaryDoesNotLoseBest) {
  // keep_best larger than any single chunk's useful results
  auto r = search(hamming(2, 3), {7, 2000, SearchStrategy::random, 20, 2});
  ASSERT_EQ(r.results.size(), 20u);
  for (std::size_t i = 1; i < r.results.size(); ++i)
    EXPECT_FALSE(r.results[i].code.generator() == r.results[i - 1].code.generator());
}

TEST(Search, Errors) {
  LinearCode lcd(GfMatrix::identity(Field(2), 3), InnerProduct::euclidean);
  EXPECT_THROW(search(lcd, {}), MathError);
  try {
    search(hamming(2, 5), {0, 10, SearchStrategy::exhaustive, 1, 1});
    FAIL();
  } catch (const GuardError& e) {
    EXPECT_NE(std::string(e.what()).find("random strategy"), std::string::npos);
  }
}

TEST(Search, SpaceSize) {
  EXPECT_EQ(embedding_space_size(2, 4, 3, 1u << 24), 168u * 8u);
  EXPECT_EQ(embedding_space_size(3, 2, 2, 1u << 24), 48u);
  EXPECT_FALSE(embedding_space_size(2, 26, 5, 1u << 24).has_value());
}

TEST(Search, DistinctFingerprintsAmongBinary19) {
  auto fixture = parse_matrix_file(std::string(LCDKIT_FIXTURE_DIR) + "/H4_prime_binary.txt");
  auto base = puncture_tail(fixture, 4);
  std::set<std::string> digests;
  for (std::uint64_t seed : {1u, 2u}) {
    auto r = search(base, {seed, 600, SearchStrategy::random, 8, 1});
    for (const auto& e : r.results) {
      EXPECT_EQ(e.code.length(), 19u);
      if (e.distance->value == 4) digests.insert(fingerprint(e.code).digest());
    }
  }
  EXPECT_GE(digests.size(), 2u);
}
