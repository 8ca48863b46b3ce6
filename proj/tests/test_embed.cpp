#include <gtest/gtest.h>

#include <random>

#include "lcdkit.hpp"
#include "oracles.hpp"

using namespace lcdkit;

namespace {

GfMatrix tail_10_4_4() {
  // appended columns of the [10,4,4] example, against hamming743 below
  return GfMatrix::from_rows(Field(2), {{0, 0, 1}, {1, 1, 1}, {0, 1, 0}, {1, 0, 1}});
}

LinearCode hamming743() {
  return {GfMatrix::from_rows(Field(2), {{1, 0, 1, 0, 1, 0, 1},
                                         {0, 1, 1, 0, 1, 1, 0},
                                         {0, 0, 0, 1, 1, 1, 1},
                                         {1, 0, 0, 0, 1, 1, 0}}),
          InnerProduct::euclidean};
}

LinearCode random_code(std::mt19937_64& rng, unsigned q, std::size_t n, std::size_t k) {
  const auto ip = q == 4 && rng() % 2 ? InnerProduct::hermitian : InnerProduct::euclidean;
  return {oracle::random_full_rank(rng, Field(q), k, n), ip};
}

void expect_embedding(const LinearCode& base, const EmbeddingResult& e) {
  const std::size_t ell = hull_dimension(base);
  EXPECT_EQ(e.code.length(), base.length() + ell);
  EXPECT_EQ(e.code.dimension(), base.dimension());
  EXPECT_TRUE(is_lcd(e.code));
  EXPECT_TRUE(same_code(puncture_tail(e.code, ell), base));
}

}  // namespace

TEST(Embed, Trivial) {
  auto t = trivial_embedding(hamming743());
  EXPECT_EQ(t.length(), 18u);
  EXPECT_TRUE(is_lcd(t));
  auto s = trivial_embedding(simplex(3, 2));
  EXPECT_EQ(s.length(), 14u);
  EXPECT_TRUE(is_lcd(s));
  LinearCode lcd(GfMatrix::identity(Field(2), 2), InnerProduct::euclidean);
  EXPECT_EQ(trivial_embedding(lcd).length(), 6u);
  auto h4 = trivial_embedding(simplex(4, 2));
  EXPECT_EQ(h4.length(), 12u);
  EXPECT_TRUE(is_lcd(h4));
  std::mt19937_64 rng(40);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (int t2 = 0; t2 < 10; ++t2) {
      auto c = random_code(rng, q, 3 + rng() % 5, 1 + rng() % 3);
      auto e = trivial_embedding(c);
      EXPECT_TRUE(is_lcd(e));
      EXPECT_TRUE(same_code(puncture_tail(e, e.length() - c.length()), c));
    }
  }
}

TEST(Embed, Canonical) {
  auto h = hamming743();
  auto e = canonical_shortest_embedding(h);
  expect_embedding(h, e);
  EXPECT_EQ(e.code.length(), 10u);
  EXPECT_EQ(min_distance(e.code).value, 3u);
  LinearCode lcd(GfMatrix::from_rows(Field(3), {{1, 0, 1}, {0, 1, 0}}), InnerProduct::euclidean);
  ASSERT_TRUE(is_lcd(lcd));
  auto l = canonical_shortest_embedding(lcd);
  EXPECT_EQ(l.code.generator(), lcd.generator());
  EXPECT_EQ(l.spec.decomposition.ell, 0u);
  EXPECT_EQ(l.spec.d_block.rows(), 0u);
  auto s = canonical_shortest_embedding(simplex(3, 2));
  EXPECT_EQ(s.code.length(), 6u);
  EXPECT_EQ(rank(gram(s.code)), 2u);
}

TEST(Embed, Blocks10_4_4) {
  auto base = hamming743();
  auto h = hull_decomposition(base);
  // the first three rows already span the hull, so the decomposition keeps G
  EXPECT_EQ(h.assembled, base.generator());
  LinearCode displayed(hstack(base.generator(), tail_10_4_4()), InnerProduct::euclidean);
  auto spec = extract_blocks(displayed, base);
  EXPECT_EQ(spec.d_block, block(tail_10_4_4(), 0, 3, 0, 3));
  EXPECT_EQ(spec.c_block, GfMatrix::from_rows(Field(2), {{1, 0, 1}}));
  auto e = shortest_embedding(base, spec.d_block, spec.c_block);
  expect_embedding(base, e);
  EXPECT_EQ(e.code.generator(), displayed.generator());
  EXPECT_EQ(min_distance(e.code).value, 4u);
}

TEST(Embed, ShortestMatchesCanonicalAtIdentity) {
  auto s = simplex(3, 3);
  auto a = canonical_shortest_embedding(s);
  auto b = shortest_embedding(s, GfMatrix::identity(Field(3), 3), GfMatrix(Field(3), 0, 3));
  EXPECT_EQ(a.code.generator(), b.code.generator());
}

TEST(Embed, Errors) {
  auto base = hamming743();
  try {
    shortest_embedding(base, GfMatrix(Field(2), 3, 3), GfMatrix(Field(2), 1, 3));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "D must be invertible");
  }
  EXPECT_THROW(shortest_embedding(base, GfMatrix::identity(Field(2), 2), GfMatrix(Field(2), 2, 2)), DimensionError);
  EXPECT_THROW(shortest_embedding(base, GfMatrix::identity(Field(2), 3), GfMatrix(Field(2), 2, 3)), DimensionError);
  EXPECT_THROW(extract_blocks(base, base), MathError);
  LinearCode other(hstack(GfMatrix::identity(Field(2), 4), GfMatrix::from_rows(Field(2), {{1, 1, 1, 1, 0, 0},
                                                                                          {1, 0, 1, 1, 1, 0},
                                                                                          {0, 1, 0, 1, 1, 1},
                                                                                          {1, 1, 0, 0, 1, 0}})),
                   InnerProduct::euclidean);
  try {
    extract_blocks(other, base);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "not an embedding of the given base");
  }
}

TEST(Embed, RandomTriplesRoundTrip) {
  std::mt19937_64 rng(41);
  int with_hull = 0;
  for (int t = 0; t < 300; ++t) {
    const unsigned q = std::array{2u, 3u, 4u}[rng() % 3];
    const std::size_t n = 2 + rng() % 9;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(5, n);
    auto base = random_code(rng, q, n, k);
    const std::size_t ell = hull_dimension(base);
    if (ell == 0) continue;
    ++with_hull;
    const Field f = base.field();
    auto d = oracle::random_invertible(rng, f, ell);
    auto c = oracle::random_matrix(rng, f, k - ell, ell);
    auto e = shortest_embedding(base, d, c);
    expect_embedding(base, e);
    auto spec = extract_blocks(e.code, base);
    EXPECT_EQ(spec.d_block, d);
    EXPECT_EQ(spec.c_block, c);
    // normal form: D^{-1} on the hull rows gives D = I with the same code
    GfMatrix g = e.code.generator();
    GfMatrix hull_part = matmul(inverse(d), block(g, 0, ell, 0, g.cols()));
    GfMatrix g2 = vstack(hull_part, block(g, ell, k, 0, g.cols()));
    LinearCode e2(g2, base.inner_product());
    EXPECT_TRUE(same_code(e2, e.code));
    EXPECT_EQ(block(g2, 0, ell, n, n + ell), GfMatrix::identity(f, ell));
    auto spec2 = extract_blocks(e2, base);
    EXPECT_TRUE(same_code(shortest_embedding(base, spec2.d_block, spec2.c_block).code, e.code));
  }
  EXPECT_GT(with_hull, 50);
}

TEST(Embed, SchurChain) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const unsigned q = std::array{2u, 3u, 4u}[rng() % 3];
    auto base = random_code(rng, q, 4 + rng() % 6, 2 + rng() % 3);
    auto h = hull_decomposition(base);
    if (h.ell == 0 || h.ell == base.dimension()) continue;
    auto d = oracle::random_invertible(rng, base.field(), h.ell);
    auto c = oracle::random_matrix(rng, base.field(), base.dimension() - h.ell, h.ell);
    auto e = shortest_embedding(base, h, d, c);
    const auto dd = determinant(matmul(d, base.adjoint(d)));
    const auto aa = determinant(matmul(h.complement_rows, base.adjoint(h.complement_rows)));
    if (dd && aa) { EXPECT_NE(determinant(gram(e.code)), 0); }
  }
}

TEST(Certify, Examples) {
  // [4,2] binary with a one-dimensional hull
  LinearCode c(GfMatrix::from_rows(Field(2), {{1, 1, 0, 0}, {0, 0, 1, 0}}), InnerProduct::euclidean);
  ASSERT_EQ(hull_dimension(c), 1u);
  auto cert = certify_minimality(c);
  EXPECT_TRUE(cert.certified());
  ASSERT_EQ(cert.levels.size(), 1u);
  EXPECT_EQ(cert.levels[0].blocks_checked, 1u);

  // self-dual [4,2]: the four single-column appends all stay singular
  LinearCode sd(GfMatrix::from_rows(Field(2), {{1, 1, 0, 0}, {0, 0, 1, 1}}), InnerProduct::euclidean);
  auto sc = certify_minimality(sd);
  ASSERT_EQ(sc.levels.size(), 2u);
  EXPECT_EQ(sc.levels[1].blocks_checked, 4u);
  EXPECT_TRUE(sc.certified());

  LinearCode lcd(GfMatrix::identity(Field(3), 2), InnerProduct::euclidean);
  auto v = certify_minimality(lcd);
  EXPECT_TRUE(v.levels.empty());
  EXPECT_TRUE(v.certified());

  auto s = certify_minimality(simplex(3, 2));
  ASSERT_EQ(s.levels.size(), 2u);
  EXPECT_EQ(s.levels[1].blocks_checked, 9u);
  EXPECT_TRUE(s.certified());

  try {
    certify_minimality(hamming(2, 5));
    FAIL();
  } catch (const GuardError& e) {
    EXPECT_NE(std::string(e.what()).find("analytically"), std::string::npos);
  }
}

TEST(Embed, FixtureRoundTrip) {
  for (auto [name, ell] : {std::pair{"remark_10_4_4", 3u}, {"H4_prime_binary", 4u}, {"H5_prime_binary", 5u},
                           {"H33_prime_ternary", 3u}, {"H34_prime_ternary", 4u}, {"C3_1", 4u}, {"C3_2", 4u},
                           {"C3_3", 4u}, {"C3_4", 5u}, {"C4_1", 1u}}) {
    SCOPED_TRACE(name);
    auto fixture = parse_matrix_file(std::string(LCDKIT_FIXTURE_DIR) + "/" + name + ".txt");
    auto base = puncture_tail(fixture, ell);
    auto spec = extract_blocks(fixture, base);
    EXPECT_TRUE(is_invertible(spec.d_block));
    auto again = shortest_embedding(base, spec.d_block, spec.c_block);
    EXPECT_TRUE(same_code(again.code, fixture));
  }
}
