#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcdkit/code.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/matrix.hpp"
#include "lcdkit/parallel.hpp"

namespace lcdkit {

enum class DistanceMethod { automatic, enumeration, low_weight };

inline const char* to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::enumeration: return "enum";
    case DistanceMethod::low_weight: return "lowweight";
    default: return "auto";
  }
}

/// Codeword counts by Hamming weight; counts[w] for w in [0, n].
struct WeightEnumerator {
  std::vector<std::uint64_t> counts;

  std::optional<std::size_t> min_nonzero_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
      if (counts[w]) return w;
    return std::nullopt;
  }

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

struct DistanceReport {
  DistanceMethod method = DistanceMethod::enumeration;  // engine that produced the value
  bool exact = false;
  std::size_t value = 0;  // the distance when exact, otherwise a bound with d > value
  std::vector<Field::value_type> witness;
};

struct DistanceOptions {
  DistanceMethod method = DistanceMethod::automatic;
  std::optional<std::size_t> max_weight;  // low-weight engine only
  unsigned workers = 1;
};

/// auto uses enumeration up to this many codewords.
inline constexpr std::uint64_t kAutoEnumerationLimit = std::uint64_t{1} << 24;
/// Explicitly requested enumeration refuses codes larger than this.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 32;
/// weight_enumerator / fingerprint guard.
inline constexpr std::uint64_t kWeightEnumeratorLimit = std::uint64_t{1} << 26;

namespace detail {

inline std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// --- packed codeword representations ------------------------------------

template <std::size_t W>
struct BinaryRep {
  using Word = std::array<std::uint64_t, W>;
  Word pack(std::span<const std::uint8_t> v) const {
    Word w{};
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) w[j / 64] |= std::uint64_t{1} << (j % 64);
    return w;
  }
  void add(Word& a, const Word& b) const {
    for (std::size_t i = 0; i < W; ++i) a[i] ^= b[i];
  }
  unsigned weight(const Word& a) const {
    unsigned s = 0;
    for (auto x : a) s += static_cast<unsigned>(std::popcount(x));
    return s;
  }
};

// Two bit planes: [x == 1] and [x == 2].
template <std::size_t W>
struct TernaryRep {
  using Word = std::array<std::uint64_t, 2 * W>;
  Word pack(std::span<const std::uint8_t> v) const {
    Word w{};
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 1) w[j / 64] |= std::uint64_t{1} << (j % 64);
      if (v[j] == 2) w[W + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return w;
  }
  void add(Word& a, const Word& b) const {
    for (std::size_t i = 0; i < W; ++i) {
      const std::uint64_t a1 = a[i], a2 = a[W + i], b1 = b[i], b2 = b[W + i];
      const std::uint64_t t = (a1 | b2) ^ (a2 | b1);
      a[i] = (a2 | b2) ^ t;
      a[W + i] = (a1 | b1) ^ t;
    }
  }
  unsigned weight(const Word& a) const {
    unsigned s = 0;
    for (std::size_t i = 0; i < W; ++i) s += static_cast<unsigned>(std::popcount(a[i] | a[W + i]));
    return s;
  }
};

// Coordinates in the basis (1, z): index bit 0 and bit 1.
template <std::size_t W>
struct QuaternaryRep {
  using Word = std::array<std::uint64_t, 2 * W>;
  Word pack(std::span<const std::uint8_t> v) const {
    Word w{};
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] & 1) w[j / 64] |= std::uint64_t{1} << (j % 64);
      if (v[j] & 2) w[W + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return w;
  }
  void add(Word& a, const Word& b) const {
    for (std::size_t i = 0; i < 2 * W; ++i) a[i] ^= b[i];
  }
  unsigned weight(const Word& a) const {
    unsigned s = 0;
    for (std::size_t i = 0; i < W; ++i) s += static_cast<unsigned>(std::popcount(a[i] | a[W + i]));
    return s;
  }
};

struct ByteRep {
  Field field;
  using Word = std::vector<std::uint8_t>;
  Word pack(std::span<const std::uint8_t> v) const { return {v.begin(), v.end()}; }
  void add(Word& a, const Word& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = field.add(a[i], b[i]);
  }
  unsigned weight(const Word& a) const {
    unsigned s = 0;
    for (auto x : a) s += x != 0;
    return s;
  }
};

template <class Fn>
decltype(auto) with_rep(const Field& f, std::size_t n, Fn&& fn) {
  const std::size_t words = (n + 63) / 64;
  if (words <= 4 && f.order() <= 4) {
    auto pick = [&]<template <std::size_t> class Rep>() -> decltype(auto) {
      switch (words) {
        case 0:
        case 1: return fn(Rep<1>{});
        case 2: return fn(Rep<2>{});
        case 3: return fn(Rep<3>{});
        default: return fn(Rep<4>{});
      }
    };
    if (f.order() == 2) return pick.template operator()<BinaryRep>();
    if (f.order() == 3) return pick.template operator()<TernaryRep>();
    return pick.template operator()<QuaternaryRep>();
  }
  return fn(ByteRep{f});
}

// Message space as mixed digits: radix q with rows g_i over prime fields,
// radix 2 with rows g_i and z g_i over GF(4). Codewords are visited in
// modular Gray order, so consecutive indices differ by one basis row.
struct DigitSystem {
  Field field;
  unsigned radix;
  std::vector<std::vector<std::uint8_t>> rows;
  std::uint64_t total;

  std::vector<std::uint8_t> digits_of(std::uint64_t index) const {
    std::vector<std::uint8_t> d(rows.size() + 1, 0);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      d[t] = static_cast<std::uint8_t>(index % radix);
      index /= radix;
    }
    return d;
  }

  std::vector<std::uint8_t> codeword_at(std::uint64_t index, std::size_t n) const {
    auto d = digits_of(index);
    std::vector<std::uint8_t> c(n, 0);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const auto g = static_cast<std::uint8_t>((d[t] + radix - d[t + 1]) % radix);
      detail::axpy(field, c, g, rows[t]);
    }
    return c;
  }
};

inline DigitSystem make_digits(const GfMatrix& gen, std::uint64_t limit) {
  const Field f = gen.field();
  DigitSystem ds{f, f.order() == 4 ? 2u : f.order(), {}, 0};
  for (std::size_t i = 0; i < gen.rows(); ++i) {
    auto r = gen.row(i);
    ds.rows.emplace_back(r.begin(), r.end());
    if (f.order() == 4) {
      std::vector<std::uint8_t> z(r.begin(), r.end());
      scale(f, z, 2);
      ds.rows.push_back(std::move(z));
    }
  }
  auto total = bounded_pow(ds.radix, ds.rows.size(), limit);
  if (!total) throw GuardError("code too large to enumerate");
  ds.total = *total;
  return ds;
}

// Visits the codewords with Gray index in [begin, end). visit(weight, index)
// returns false to stop.
template <class Rep, class Visit>
void walk(const Rep& rep, const DigitSystem& ds, const std::vector<typename Rep::Word>& basis, std::size_t n,
          std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  auto c = rep.pack(ds.codeword_at(begin, n));
  auto d = ds.digits_of(begin);
  if (!visit(rep.weight(c), begin)) return;
  const unsigned top = ds.radix - 1;
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    std::size_t j = 0;
    while (d[j] == top) d[j++] = 0;
    ++d[j];
    rep.add(c, basis[j]);
    if (!visit(rep.weight(c), i)) return;
  }
}

inline constexpr std::uint64_t kBlocks = 64;

struct BlockRange {
  std::uint64_t begin, end;
};

// Fixed partition of the nonzero indices [1, total); independent of workers.
inline std::vector<BlockRange> partition(std::uint64_t total) {
  std::vector<BlockRange> out;
  if (total <= 1) return out;
  const std::uint64_t span = total - 1;
  const std::uint64_t blocks = std::min(span, kBlocks);
  for (std::uint64_t b = 0; b < blocks; ++b) out.push_back({1 + span * b / blocks, 1 + span * (b + 1) / blocks});
  return out;
}

struct EnumerationOutcome {
  std::size_t min_weight = 0;
  std::vector<std::uint8_t> witness;
  bool abandoned = false;  // a codeword lighter than stop_below was found
};

// Minimum nonzero weight by full enumeration. With stop_below > 0 the walk is
// abandoned as soon as any codeword of weight < stop_below appears.
inline EnumerationOutcome enumerate_min_weight(const LinearCode& c, std::size_t stop_below, unsigned workers,
                                               std::uint64_t limit = kEnumerationLimit) {
  GfMatrix sys = rref(c.generator()).rref;
  DigitSystem ds = make_digits(sys, limit);
  const std::size_t n = c.length();
  auto blocks = partition(ds.total);

  struct BlockBest {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::uint64_t index = 0;
  };
  std::vector<BlockBest> best(blocks.size());
  std::atomic<bool> stop{false};

  with_rep(c.field(), n, [&](const auto& rep) {
    using Rep = std::decay_t<decltype(rep)>;
    std::vector<typename Rep::Word> basis;
    for (const auto& r : ds.rows) basis.push_back(rep.pack(r));
    parallel_for(blocks.size(), workers, [&](std::size_t b) {
      auto& out = best[b];
      walk(rep, ds, basis, n, blocks[b].begin, blocks[b].end, [&](unsigned w, std::uint64_t i) {
        if (w < out.weight) {
          out.weight = w;
          out.index = i;
        }
        if (w < stop_below) stop.store(true, std::memory_order_relaxed);
        return w > 1 && !stop.load(std::memory_order_relaxed);
      });
    });
  });

  EnumerationOutcome res;
  res.abandoned = stop.load();
  std::size_t pick = blocks.size();
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (pick == blocks.size() || best[b].weight < best[pick].weight) pick = b;
  if (pick == blocks.size()) return res;
  res.min_weight = best[pick].weight;
  res.witness = ds.codeword_at(best[pick].index, n);
  return res;
}

struct LowWeightOutcome {
  bool found = false;
  std::size_t weight = 0;
  std::vector<std::uint8_t> witness;
};

// Smallest w <= max_weight such that some w columns of a parity-check matrix
// are linearly dependent. Subsets are scanned in lexicographic order and the
// first dependent one is the witness support.
inline LowWeightOutcome low_weight_search(const LinearCode& c, std::size_t max_weight) {
  const Field f = c.field();
  const std::size_t n = c.length();
  const GfMatrix h = left_kernel(transpose(c.generator()));  // Euclidean parity check, (n-k) x n
  const std::size_t r = h.rows();
  std::vector<std::vector<std::uint8_t>> cols(n, std::vector<std::uint8_t>(r));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < r; ++i) cols[j][i] = h(i, j);

  struct Reduced {
    std::vector<std::uint8_t> v;
    std::size_t pivot;
  };
  std::vector<Reduced> basis;
  std::vector<std::size_t> chosen;
  std::vector<std::uint8_t> scratch(r);

  // Reduces scratch against basis; returns the first nonzero position or r.
  auto reduce = [&](std::size_t col) {
    std::copy(cols[col].begin(), cols[col].end(), scratch.begin());
    for (const auto& b : basis)
      if (scratch[b.pivot]) detail::axpy(f, scratch, f.neg(scratch[b.pivot]), b.v);
    std::size_t p = 0;
    while (p < r && scratch[p] == 0) ++p;
    return p;
  };

  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t target) -> bool {
    const std::size_t depth = chosen.size();
    for (std::size_t col = start; col + (target - depth) <= n; ++col) {
      const std::size_t p = reduce(col);
      if (depth + 1 == target) {
        if (p == r) {
          chosen.push_back(col);
          return true;
        }
        continue;
      }
      if (p == r) continue;  // dependent prefix, already covered by a smaller weight
      std::vector<std::uint8_t> v = scratch;
      detail::scale(f, v, f.inv(v[p]));
      basis.push_back({std::move(v), p});
      chosen.push_back(col);
      if (dfs(col + 1, target)) return true;
      chosen.pop_back();
      basis.pop_back();
    }
    return false;
  };

  LowWeightOutcome out;
  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    basis.clear();
    chosen.clear();
    if (!dfs(0, w)) continue;
    GfMatrix sub = select_cols(h, chosen);
    GfMatrix kernel = left_kernel(transpose(sub));
    out.found = true;
    out.weight = w;
    out.witness.assign(n, 0);
    for (std::size_t i = 0; i < chosen.size(); ++i) out.witness[chosen[i]] = kernel(0, i);
    return out;
  }
  return out;
}

}  // namespace detail

/// Minimum distance with the requested engine. auto enumerates when
/// q^k <= 2^24 and otherwise runs the low-weight search.
inline DistanceReport min_distance(const LinearCode& c, const DistanceOptions& opt = {}) {
  if (c.dimension() == 0) throw MathError("zero code has no minimum distance");
  DistanceMethod method = opt.method;
  if (method == DistanceMethod::automatic) {
    const std::uint64_t radix = c.field().order();
    method = detail::bounded_pow(radix, c.dimension(), kAutoEnumerationLimit) ? DistanceMethod::enumeration
                                                                             : DistanceMethod::low_weight;
  }
  DistanceReport rep;
  rep.method = method;
  if (method == DistanceMethod::enumeration) {
    auto e = detail::enumerate_min_weight(c, 0, opt.workers);
    rep.exact = true;
    rep.value = e.min_weight;
    rep.witness = std::move(e.witness);
    return rep;
  }
  const std::size_t singleton = c.length() - c.dimension() + 1;
  const std::size_t wmax = opt.max_weight.value_or(singleton);
  auto lw = detail::low_weight_search(c, wmax);
  if (lw.found) {
    rep.exact = true;
    rep.value = lw.weight;
    rep.witness = std::move(lw.witness);
  } else {
    rep.exact = false;
    rep.value = wmax;
  }
  return rep;
}

inline WeightEnumerator weight_enumerator(const LinearCode& c, unsigned workers = 1) {
  const std::size_t n = c.length();
  if (!detail::bounded_pow(c.field().order(), c.dimension(), kWeightEnumeratorLimit))
    throw GuardError("enumerator guard exceeded");
  GfMatrix sys = rref(c.generator()).rref;
  detail::DigitSystem ds = detail::make_digits(sys, kWeightEnumeratorLimit);
  auto blocks = detail::partition(ds.total);
  std::vector<std::vector<std::uint64_t>> partial(blocks.size(), std::vector<std::uint64_t>(n + 1, 0));
  detail::with_rep(c.field(), n, [&](const auto& rep) {
    using Rep = std::decay_t<decltype(rep)>;
    std::vector<typename Rep::Word> basis;
    for (const auto& r : ds.rows) basis.push_back(rep.pack(r));
    parallel_for(blocks.size(), workers, [&](std::size_t b) {
      auto& counts = partial[b];
      detail::walk(rep, ds, basis, n, blocks[b].begin, blocks[b].end, [&](unsigned w, std::uint64_t) {
        ++counts[w];
        return true;
      });
    });
  });
  WeightEnumerator we{std::vector<std::uint64_t>(n + 1, 0)};
  we.counts[0] = 1;
  for (const auto& p : partial)
    for (std::size_t w = 0; w <= n; ++w) we.counts[w] += p[w];
  return we;
}

}  // namespace lcdkit
