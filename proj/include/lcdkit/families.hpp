#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcdkit/code.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/matrix.hpp"

namespace lcdkit {

namespace detail {

inline void require_family_field(unsigned q) {
  if (q != 2 && q != 3 && q != 4) throw InputError("family constructors support q in {2, 3, 4}, got " + std::to_string(q));
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// All vectors of F^len in lexicographic order (first coordinate most significant).
inline std::vector<std::vector<std::uint8_t>> all_vectors(unsigned q, std::size_t len) {
  const std::size_t count = ipow(q, len);
  std::vector<std::vector<std::uint8_t>> out(count, std::vector<std::uint8_t>(len));
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t x = i;
    for (std::size_t t = len; t-- > 0;) {
      out[i][t] = static_cast<std::uint8_t>(x % q);
      x /= q;
    }
  }
  return out;
}

inline Field::value_type power(const Field& f, Field::value_type x, unsigned e) {
  Field::value_type r = 1;
  while (e--) r = f.mul(r, x);
  return r;
}

}  // namespace detail

/// q-ary simplex code: one column per projective point of F_q^r, normalized
/// so the first nonzero coordinate is 1, in lexicographic order.
inline LinearCode simplex(unsigned q, unsigned r) {
  detail::require_family_field(q);
  if (r < 2) throw InputError("simplex requires r >= 2");
  const Field f(q);
  std::vector<std::vector<std::uint8_t>> points;
  for (auto& v : detail::all_vectors(q, r)) {
    auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (it != v.end() && *it == 1) points.push_back(std::move(v));
  }
  GfMatrix g(f, r, points.size());
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) g(i, j) = points[j][i];
  return {std::move(g), default_inner_product(f)};
}

/// Hamming code H_{q,r}: the dual of simplex(q, r) under the field's default
/// inner product.
inline LinearCode hamming(unsigned q, unsigned r) { return dual(simplex(q, r)); }

/// Largest supported GRM length.
inline constexpr std::size_t kGrmMaxLength = std::size_t{1} << 14;

/// Generalized Reed-Muller code R_q(r, m): evaluations of the monomials
/// x^e with every e_i <= q-1 and sum(e) <= r at all q^m points. Points and
/// exponent vectors are both in lexicographic order.
///
/// The Euclidean inner product is the default on every field, GF(4)
/// included: the duality R_q(r,m)^perp = R_q(m(q-1)-r-1, m) is Euclidean.
inline LinearCode grm(unsigned q, unsigned r, unsigned m, InnerProduct ip = InnerProduct::euclidean) {
  detail::require_family_field(q);
  if (m == 0) throw InputError("grm requires m >= 1");
  if (r > m * (q - 1)) throw InputError("grm requires 0 <= r <= m(q-1)");
  if (detail::ipow(q, m) > kGrmMaxLength) throw GuardError("grm length q^m exceeds 2^14");
  const Field f(q);
  const auto points = detail::all_vectors(q, m);
  std::vector<std::vector<std::uint8_t>> exponents;
  for (auto& e : detail::all_vectors(q, m)) {
    unsigned deg = 0;
    for (auto x : e) deg += x;
    if (deg <= r) exponents.push_back(std::move(e));
  }
  GfMatrix g(f, exponents.size(), points.size());
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      Field::value_type v = 1;
      for (std::size_t t = 0; t < m; ++t) v = f.mul(v, detail::power(f, points[j][t], exponents[i][t]));
      g(i, j) = v;
    }
  return {std::move(g), ip};
}

}  // namespace lcdkit
