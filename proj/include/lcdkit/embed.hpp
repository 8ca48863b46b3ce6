#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdkit/code.hpp"
#include "lcdkit/distance.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/matrix.hpp"

namespace lcdkit {

/// The appended blocks of a shortest LCD embedding,
///
///     [ hull_rows  | D ]
///     [ complement | C ]
///
/// with D an invertible ell x ell matrix and C a (k - ell) x ell matrix.
struct EmbeddingSpec {
  HullDecomposition decomposition;
  GfMatrix d_block;
  GfMatrix c_block;
};

struct EmbeddingResult {
  EmbeddingSpec spec;
  LinearCode code;
  std::optional<DistanceReport> distance;  // filled by search
  std::uint64_t trials_used = 0;
  std::uint64_t trial = 0;  // index of the search trial that produced this code
};

inline GfMatrix zero_matrix(const Field& f, std::size_t r, std::size_t c) { return {f, r, c}; }

inline GfMatrix assemble(const HullDecomposition& h, const GfMatrix& d, const GfMatrix& c) {
  return hstack(h.assembled, vstack(d, c));
}

/// [G | G | I_k] in characteristic 2, [G | G | G | I_k] over GF(3); in
/// general p copies of G over a field of characteristic p, so that the copies
/// cancel in G~ G~^* and only I_k remains.
inline LinearCode trivial_embedding(const LinearCode& c) {
  const Field f = c.field();
  const unsigned copies = f.order() == 4 ? 2 : f.order();
  GfMatrix g = c.generator();
  for (unsigned i = 1; i < copies; ++i) g = hstack(g, c.generator());
  g = hstack(g, GfMatrix::identity(f, c.dimension()));
  return {std::move(g), c.inner_product()};
}

/// Appends D and C to the code's hull decomposition. Throws MathError when D
/// is singular.
inline EmbeddingResult shortest_embedding(const LinearCode& base, const HullDecomposition& h, GfMatrix d_block,
                                          GfMatrix c_block) {
  const std::size_t ell = h.ell;
  const std::size_t k = base.dimension();
  if (d_block.rows() != ell || d_block.cols() != ell)
    throw DimensionError("D must be " + std::to_string(ell) + "x" + std::to_string(ell));
  if (c_block.rows() != k - ell || c_block.cols() != ell)
    throw DimensionError("C must be " + std::to_string(k - ell) + "x" + std::to_string(ell));
  if (!is_invertible(d_block)) throw MathError("D must be invertible");
  LinearCode code(assemble(h, d_block, c_block), base.inner_product());
  if (!is_lcd(code)) throw std::logic_error("assembled embedding is not LCD");
  return {EmbeddingSpec{h, std::move(d_block), std::move(c_block)}, std::move(code), std::nullopt, 0, 0};
}

inline EmbeddingResult shortest_embedding(const LinearCode& base, GfMatrix d_block, GfMatrix c_block) {
  return shortest_embedding(base, hull_decomposition(base), std::move(d_block), std::move(c_block));
}

/// D = I_ell over the hull rows and C = 0 over the complement. An LCD input
/// comes back unchanged with empty blocks.
inline EmbeddingResult canonical_shortest_embedding(const LinearCode& base) {
  auto h = hull_decomposition(base);
  if (h.ell == 0) {
    const Field f = base.field();
    return {EmbeddingSpec{std::move(h), zero_matrix(f, 0, 0), zero_matrix(f, base.dimension(), 0)}, base,
            std::nullopt, 0, 0};
  }
  const Field f = base.field();
  const std::size_t ell = h.ell;
  return shortest_embedding(base, h, GfMatrix::identity(f, ell), zero_matrix(f, base.dimension() - ell, ell));
}

/// Recovers (D, C) from a shortest embedding of `base`, expressed against
/// base's own hull decomposition.
inline EmbeddingSpec extract_blocks(const LinearCode& embedded, const LinearCode& base) {
  auto h = hull_decomposition(base);
  const std::size_t n = base.length();
  const std::size_t k = base.dimension();
  const std::size_t ell = h.ell;
  if (!(embedded.field() == base.field()) || embedded.length() != n + ell || embedded.dimension() != k)
    throw MathError("not an embedding of the given base");
  const GfMatrix left = block(embedded.generator(), 0, k, 0, n);
  const GfMatrix right = block(embedded.generator(), 0, k, n, n + ell);
  auto r = rref(left);
  if (r.rank != k) throw MathError("not an embedding of the given base");
  // M with M * left == assembled, solved on the pivot columns of left.
  const GfMatrix m = matmul(select_cols(h.assembled, r.pivot_cols), inverse(select_cols(left, r.pivot_cols)));
  if (!(matmul(m, left) == h.assembled)) throw MathError("not an embedding of the given base");
  const GfMatrix tail = matmul(m, right);
  GfMatrix d = block(tail, 0, ell, 0, ell);
  GfMatrix c = block(tail, ell, k, 0, ell);
  if (!is_invertible(d)) throw std::logic_error("extracted D is singular");
  return {std::move(h), std::move(d), std::move(c)};
}

struct MinimalityLevel {
  std::size_t appended = 0;  // m
  std::uint64_t blocks_checked = 0;
  std::optional<GfMatrix> lcd_block;  // a k x m block that made the code LCD, if any
};

struct MinimalityCertificate {
  std::size_t ell = 0;
  std::vector<MinimalityLevel> levels;  // one per m < ell

  bool certified() const {
    for (const auto& l : levels)
      if (l.lcd_block) return false;
    return true;
  }
};

/// Exhaustive q^{k m} per-level search limit.
inline constexpr std::uint64_t kMinimalityLimit = std::uint64_t{1} << 20;

/// For each m < ell, appends every k x m block X and checks that
/// rank(G G^* + X X^*) < k, i.e. no shorter extension is LCD.
inline MinimalityCertificate certify_minimality(const LinearCode& c) {
  const Field f = c.field();
  const std::size_t k = c.dimension();
  MinimalityCertificate cert;
  cert.ell = hull_dimension(c);
  for (std::size_t m = 0; m < cert.ell; ++m)
    if (!detail::bounded_pow(f.order(), k * m, kMinimalityLimit))
      throw GuardError("minimality certified analytically only (shortest length is n + ell)");
  const GfMatrix g = gram(c);
  for (std::size_t m = 0; m < cert.ell; ++m) {
    MinimalityLevel level{m, 0, std::nullopt};
    const std::uint64_t total = *detail::bounded_pow(f.order(), k * m, kMinimalityLimit);
    GfMatrix x(f, k, m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t t = k * m; t-- > 0;) {
        x(t / m, t % m) = static_cast<Field::value_type>(v % f.order());
        v /= f.order();
      }
      ++level.blocks_checked;
      const GfMatrix xx = matmul(x, c.adjoint(x));
      if (rank(add(g, xx)) == k) {
        level.lcd_block = x;
        break;
      }
    }
    cert.levels.push_back(std::move(level));
  }
  return cert;
}

}  // namespace lcdkit
