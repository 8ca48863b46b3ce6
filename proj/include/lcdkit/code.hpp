#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lcdkit/error.hpp"
#include "lcdkit/field.hpp"
#include "lcdkit/matrix.hpp"

namespace lcdkit {

enum class InnerProduct { euclidean, hermitian };

/// Hermitian over GF(4), Euclidean elsewhere.
inline InnerProduct default_inner_product(const Field& f) {
  return f.order() == 4 ? InnerProduct::hermitian : InnerProduct::euclidean;
}

inline const char* to_string(InnerProduct ip) { return ip == InnerProduct::hermitian ? "hermitian" : "euclidean"; }

/// An [n, k] linear code given by a full-row-rank k x n generator matrix.
class LinearCode {
 public:
  LinearCode(GfMatrix gen, InnerProduct ip) : gen_(std::move(gen)), ip_(ip) {
    if (ip_ == InnerProduct::hermitian && gen_.field().order() != 4)
      throw InputError("hermitian inner product requires GF(4), got " + gen_.field().name());
    if (gen_.rows() > gen_.cols())
      throw InputError("generator has more rows (" + std::to_string(gen_.rows()) + ") than columns (" +
                       std::to_string(gen_.cols()) + ")");
    if (rank(gen_) != gen_.rows()) throw InputError("generator not full rank (use rref tool)");
  }

  Field field() const { return gen_.field(); }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const GfMatrix& generator() const { return gen_; }
  InnerProduct inner_product() const { return ip_; }

  /// Adjoint used by this code's inner product: G^T or sigma(G)^T.
  GfMatrix adjoint(const GfMatrix& m) const { return ip_ == InnerProduct::hermitian ? star(m) : transpose(m); }

 private:
  GfMatrix gen_;
  InnerProduct ip_;
};

inline LinearCode new_code(GfMatrix gen, InnerProduct ip) { return {std::move(gen), ip}; }

inline LinearCode new_code(GfMatrix gen) {
  const auto ip = default_inner_product(gen.field());
  return {std::move(gen), ip};
}

inline Field::value_type inner(const Field& f, InnerProduct ip, std::span<const Field::value_type> u,
                               std::span<const Field::value_type> v) {
  if (u.size() != v.size()) throw DimensionError("inner product of vectors with different lengths");
  Field::value_type s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    s = f.add(s, f.mul(u[i], ip == InnerProduct::hermitian ? f.conj(v[i]) : v[i]));
  return s;
}

/// G G^* (k x k).
inline GfMatrix gram(const LinearCode& c) { return matmul(c.generator(), c.adjoint(c.generator())); }

/// k - rank(G G^*).
inline std::size_t hull_dimension(const LinearCode& c) { return c.dimension() - rank(gram(c)); }

inline bool is_lcd(const LinearCode& c) { return rank(gram(c)) == c.dimension(); }

/// Same field, length and codeword set.
inline bool same_code(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field()) || a.length() != b.length() || a.dimension() != b.dimension()) return false;
  return rank(vstack(a.generator(), b.generator())) == a.dimension();
}

/// Every row of `sub` lies in the row space of `code`.
inline bool row_space_contains(const GfMatrix& code, const GfMatrix& sub) {
  return rank(vstack(code, sub)) == rank(code);
}

/// Dual under the code's own inner product; an [n, n-k] code.
inline LinearCode dual(const LinearCode& c) {
  return {left_kernel(c.adjoint(c.generator())), c.inner_product()};
}

/// Deletes the given columns. When that drops rank the generator is row
/// reduced and the smaller-dimensional code is returned.
inline LinearCode puncture(const LinearCode& c, const std::set<std::size_t>& coords) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < c.length(); ++j)
    if (!coords.contains(j)) keep.push_back(j);
  for (std::size_t j : coords)
    if (j >= c.length()) throw InputError("puncture coordinate " + std::to_string(j) + " out of range");
  GfMatrix g = select_cols(c.generator(), keep);
  auto r = rref(g);
  if (r.rank == g.rows()) return {std::move(g), c.inner_product()};
  return {block(r.rref, 0, r.rank, 0, g.cols()), c.inner_product()};
}

/// Punctures the trailing `count` coordinates.
inline LinearCode puncture_tail(const LinearCode& c, std::size_t count) {
  if (count > c.length()) throw InputError("cannot puncture more coordinates than the code length");
  std::set<std::size_t> cols;
  for (std::size_t j = c.length() - count; j < c.length(); ++j) cols.insert(j);
  return puncture(c, cols);
}

/// Generator split as [hull basis; complement A].
struct HullDecomposition {
  std::size_t ell = 0;
  GfMatrix hull_rows;
  GfMatrix complement_rows;
  GfMatrix assembled;
};

/// Hull rows are x G for x in the left kernel of G G^* (x G G^* = 0 means x G
/// is orthogonal to the whole code). The complement is the set of rows of G
/// at the non-pivot positions of that kernel basis, which together with the
/// kernel spans all of F^k.
inline HullDecomposition hull_decomposition(const LinearCode& c) {
  const GfMatrix& g = c.generator();
  GfMatrix kernel = left_kernel(gram(c));
  std::vector<bool> pivot(c.dimension(), false);
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    auto row = kernel.row(i);
    auto it = std::find_if(row.begin(), row.end(), [](auto v) { return v != 0; });
    pivot[static_cast<std::size_t>(it - row.begin())] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < c.dimension(); ++i)
    if (!pivot[i]) rest.push_back(i);

  HullDecomposition h{kernel.rows(), matmul(kernel, g), select_rows(g, rest), GfMatrix(c.field(), 0, 0)};
  h.assembled = vstack(h.hull_rows, h.complement_rows);
  return h;
}

}  // namespace lcdkit
