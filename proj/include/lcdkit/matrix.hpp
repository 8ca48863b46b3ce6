#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcdkit/error.hpp"
#include "lcdkit/field.hpp"

namespace lcdkit {

/// Dense row-major matrix over a supported field. Empty shapes are allowed.
class GfMatrix {
 public:
  using value_type = Field::value_type;

  GfMatrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  GfMatrix(Field f, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
      throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    for (value_type v : data_)
      if (v >= f.order()) throw InputError("entry out of range for " + f.name());
  }

  static GfMatrix from_rows(Field f, std::initializer_list<std::initializer_list<unsigned>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<value_type> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged row list");
      for (unsigned v : row) {
        if (v >= f.order()) throw InputError("entry out of range for " + f.name());
        data.push_back(static_cast<value_type>(v));
      }
    }
    return {f, r, c, std::move(data)};
  }

  static GfMatrix identity(Field f, std::size_t n) {
    GfMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  const std::vector<value_type>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
  }

  friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

struct RrefResult {
  GfMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  GfMatrix transform;  // transform * input == rref
};

namespace detail {

inline void require_same_field(const GfMatrix& a, const GfMatrix& b) {
  if (!(a.field() == b.field())) throw DimensionError("field mismatch");
}

// dst += s * src, elementwise.
inline void axpy(const Field& f, std::span<Field::value_type> dst, Field::value_type s,
                 std::span<const Field::value_type> src) {
  if (s == 0) return;
  const auto* m = f.mul_row(s);
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j]) dst[j] = f.add(dst[j], m[src[j]]);
}

inline void scale(const Field& f, std::span<Field::value_type> row, Field::value_type s) {
  const auto* m = f.mul_row(s);
  for (auto& v : row) v = m[v];
}

struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  Field::value_type det = 1;  // meaningful for square inputs only
};

// In-place Gauss-Jordan elimination. Pivot: leftmost nonzero column, topmost
// nonzero row at or below the current row, scaled to 1. Row operations are
// mirrored into `transform` when given.
inline Elimination eliminate(GfMatrix& m, GfMatrix* transform) {
  const Field f = m.field();
  Elimination out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      if (transform) transform->swap_rows(p, r);
      out.det = f.neg(out.det);
    }
    const auto pivot = m(r, c);
    out.det = f.mul(out.det, pivot);
    if (pivot != 1) {
      const auto s = f.inv(pivot);
      scale(f, m.row(r), s);
      if (transform) scale(f, transform->row(r), s);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const auto s = f.neg(m(i, c));
      axpy(f, m.row(i), s, m.row(r));
      if (transform) axpy(f, transform->row(i), s, transform->row(r));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace detail

inline GfMatrix matmul(const GfMatrix& a, const GfMatrix& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.rows())
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const Field f = a.field();
  GfMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) detail::axpy(f, out.row(i), a(i, t), b.row(t));
  return out;
}

inline GfMatrix transpose(const GfMatrix& m) {
  GfMatrix out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

/// Entrywise conjugation (identity on prime fields, x -> x^2 on GF(4)).
inline GfMatrix conjugate(const GfMatrix& m) {
  if (m.field().is_prime()) return m;
  const Field f = m.field();
  std::vector<Field::value_type> data(m.entries());
  for (auto& v : data) v = f.conj(v);
  return {f, m.rows(), m.cols(), std::move(data)};
}

/// G* : transpose over prime fields, conjugate transpose over GF(4).
inline GfMatrix star(const GfMatrix& m) { return transpose(conjugate(m)); }

inline GfMatrix add(const GfMatrix& a, const GfMatrix& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shape mismatch");
  const Field f = a.field();
  std::vector<Field::value_type> data(a.entries().size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = f.add(a.entries()[i], b.entries()[i]);
  return {f, a.rows(), a.cols(), std::move(data)};
}

inline GfMatrix sub(const GfMatrix& a, const GfMatrix& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sub: shape mismatch");
  const Field f = a.field();
  std::vector<Field::value_type> data(a.entries().size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = f.sub(a.entries()[i], b.entries()[i]);
  return {f, a.rows(), a.cols(), std::move(data)};
}

inline GfMatrix hstack(const GfMatrix& a, const GfMatrix& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  GfMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), out.row(i).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return out;
}

inline GfMatrix vstack(const GfMatrix& a, const GfMatrix& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  std::vector<Field::value_type> data(a.entries());
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return {a.field(), a.rows() + b.rows(), a.cols(), std::move(data)};
}

inline GfMatrix select_rows(const GfMatrix& m, std::span<const std::size_t> idx) {
  GfMatrix out(m.field(), idx.size(), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= m.rows()) throw DimensionError("row index out of range");
    std::copy(m.row(idx[i]).begin(), m.row(idx[i]).end(), out.row(i).begin());
  }
  return out;
}

inline GfMatrix select_cols(const GfMatrix& m, std::span<const std::size_t> idx) {
  GfMatrix out(m.field(), m.rows(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= m.cols()) throw DimensionError("column index out of range");
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, idx[j]);
  }
  return out;
}

/// Rows [begin, end) and columns [cbegin, cend).
inline GfMatrix block(const GfMatrix& m, std::size_t begin, std::size_t end, std::size_t cbegin,
                      std::size_t cend) {
  if (begin > end || end > m.rows() || cbegin > cend || cend > m.cols())
    throw DimensionError("block out of range");
  GfMatrix out(m.field(), end - begin, cend - cbegin);
  for (std::size_t i = begin; i < end; ++i)
    std::copy(m.row(i).begin() + static_cast<std::ptrdiff_t>(cbegin),
              m.row(i).begin() + static_cast<std::ptrdiff_t>(cend), out.row(i - begin).begin());
  return out;
}

inline RrefResult rref(const GfMatrix& m) {
  RrefResult res{m, 0, {}, GfMatrix::identity(m.field(), m.rows())};
  auto e = detail::eliminate(res.rref, &res.transform);
  res.rank = e.rank;
  res.pivot_cols = std::move(e.pivot_cols);
#ifdef LCDKIT_CHECK_INVARIANTS
  if (!(matmul(res.transform, m) == res.rref)) throw std::logic_error("rref: transform * input != rref");
  {
    GfMatrix t = res.transform;
    if (detail::eliminate(t, nullptr).rank != m.rows()) throw std::logic_error("rref: transform singular");
  }
#endif
  return res;
}

inline std::size_t rank(const GfMatrix& m) {
  GfMatrix work = m;
  return detail::eliminate(work, nullptr).rank;
}

inline Field::value_type determinant(const GfMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  GfMatrix work = m;
  auto e = detail::eliminate(work, nullptr);
  return e.rank == m.rows() ? e.det : 0;
}

inline GfMatrix inverse(const GfMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  GfMatrix work = m;
  GfMatrix t = GfMatrix::identity(m.field(), m.rows());
  if (detail::eliminate(work, &t).rank != m.rows()) throw MathError("singular matrix");
  return t;
}

inline bool is_invertible(const GfMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// Basis (in reduced echelon form) of { x : x * m = 0 }.
inline GfMatrix left_kernel(const GfMatrix& m) {
  auto r = rref(m);
  GfMatrix k = block(r.transform, r.rank, m.rows(), 0, m.rows());
  detail::eliminate(k, nullptr);
  return k;
}

/// det(a) * det(d - c a^{-1} b), the block determinant of [[a, b], [c, d]].
inline Field::value_type schur_det(const GfMatrix& a, const GfMatrix& b, const GfMatrix& c, const GfMatrix& d) {
  detail::require_same_field(a, b);
  detail::require_same_field(a, c);
  detail::require_same_field(a, d);
  const std::size_t n = a.rows();
  const std::size_t m = d.rows();
  if (a.cols() != n || d.cols() != m || b.rows() != n || b.cols() != m || c.rows() != m || c.cols() != n)
    throw DimensionError("schur_det: blocks are not conformal");
  GfMatrix ainv(a.field(), 0, 0);
  try {
    ainv = inverse(a);
  } catch (const MathError&) {
    throw MathError("Schur pivot singular");
  }
  const Field f = a.field();
  return f.mul(determinant(a), determinant(sub(d, matmul(matmul(c, ainv), b))));
}

/// Row-major lexicographic order on equally shaped matrices.
inline bool lex_less(const GfMatrix& a, const GfMatrix& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                      b.entries().end());
}

}  // namespace lcdkit
