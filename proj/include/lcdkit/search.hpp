#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <limits>
#include <random>
#include <vector>

#include "lcdkit/code.hpp"
#include "lcdkit/distance.hpp"
#include "lcdkit/embed.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/matrix.hpp"
#include "lcdkit/parallel.hpp"

namespace lcdkit {

enum class SearchStrategy { random, exhaustive };

struct SearchConfig {
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;  // trial cap for both strategies
  SearchStrategy strategy = SearchStrategy::random;
  std::size_t keep_best = 1;
  unsigned workers = 1;
};

struct SearchReport {
  std::size_t ell = 0;
  std::uint64_t trials = 0;
  std::vector<EmbeddingResult> results;  // distance desc, generator lexicographic asc
};

/// Exhaustive search refuses (D, C) spaces larger than this.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;

/// |GL(ell, q)| * q^{(k - ell) ell}, or nullopt once it exceeds `limit`.
inline std::optional<std::uint64_t> embedding_space_size(unsigned q, std::size_t k, std::size_t ell,
                                                         std::uint64_t limit) {
  auto qe = detail::bounded_pow(q, ell, limit);
  if (!qe) return std::nullopt;
  std::uint64_t size = 1;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < ell; ++i) {
    const std::uint64_t factor = *qe - qi;
    if (size > limit / factor) return std::nullopt;
    size *= factor;
    qi *= q;
  }
  auto cs = detail::bounded_pow(q, (k - ell) * ell, limit);
  if (!cs || (*cs && size > limit / *cs)) return std::nullopt;
  return size * *cs;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream for one trial; depends only on (seed, trial).
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

inline Field::value_type uniform_element(std::mt19937_64& rng, unsigned q) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % q;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<Field::value_type>(x % q);
}

inline GfMatrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c) {
  GfMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform_element(rng, f.order());
  return m;
}

inline GfMatrix random_invertible(std::mt19937_64& rng, const Field& f, std::size_t n) {
  for (;;) {
    GfMatrix m = random_matrix(rng, f, n, n);
    if (is_invertible(m)) return m;
  }
}

// The matrix whose row-major entries are the base-q digits of idx, most
// significant first.
inline GfMatrix matrix_from_index(const Field& f, std::size_t r, std::size_t c, std::uint64_t idx) {
  GfMatrix m(f, r, c);
  for (std::size_t t = r * c; t-- > 0;) {
    m(t / c, t % c) = static_cast<Field::value_type>(idx % f.order());
    idx /= f.order();
  }
  return m;
}

inline bool ranks_before(const EmbeddingResult& a, const EmbeddingResult& b) {
  if (a.distance->value != b.distance->value) return a.distance->value > b.distance->value;
  return lex_less(a.code.generator(), b.code.generator());
}

// Keeps the best `keep` distinct results.
class BestList {
 public:
  explicit BestList(std::size_t keep) : keep_(keep) {}

  /// Distance a candidate must reach to possibly enter the list.
  std::size_t cutoff() const { return items_.size() < keep_ ? 0 : items_.back().distance->value; }

  void offer(EmbeddingResult r) {
    if (keep_ == 0) return;
    auto pos = std::lower_bound(items_.begin(), items_.end(), r, ranks_before);
    if (pos != items_.end() && pos->code.generator() == r.code.generator()) return;
    if (pos == items_.end() && items_.size() >= keep_) return;
    items_.insert(pos, std::move(r));
    if (items_.size() > keep_) items_.pop_back();
  }

  std::vector<EmbeddingResult>& items() { return items_; }

 private:
  std::size_t keep_;
  std::vector<EmbeddingResult> items_;
};

inline constexpr std::uint64_t kTrialsPerChunk = 512;

}  // namespace detail

/// Searches shortest LCD embeddings [hull | D ; A | C] of `base` for large
/// minimum distance. The hull basis is fixed and D ranges over GL(ell, q),
/// which reaches every shortest embedding (any one can be brought to D = I).
///
/// Trials are grouped into fixed chunks; each chunk keeps its own best list
/// and only abandons a candidate once it is provably below that list, so the
/// merged output depends on neither scheduling nor worker count.
inline SearchReport search(const LinearCode& base, const SearchConfig& cfg) {
  const Field f = base.field();
  const auto h = hull_decomposition(base);
  const std::size_t ell = h.ell;
  const std::size_t k = base.dimension();
  if (ell == 0) throw MathError("search requires a code with nontrivial hull (ell >= 1)");

  SearchReport report;
  report.ell = ell;

  std::vector<std::uint64_t> invertible_d;
  std::uint64_t c_count = 0;
  std::uint64_t trials = cfg.budget;
  if (cfg.strategy == SearchStrategy::exhaustive) {
    auto space = embedding_space_size(f.order(), k, ell, kExhaustiveLimit);
    if (!space) throw GuardError("exhaustive (D, C) space exceeds 2^24; use the random strategy");
    if (trials > 0) {
      const std::uint64_t d_total = *detail::bounded_pow(f.order(), ell * ell, kExhaustiveLimit * 8);
      for (std::uint64_t i = 0; i < d_total; ++i)
        if (is_invertible(detail::matrix_from_index(f, ell, ell, i))) invertible_d.push_back(i);
    }
    c_count = *detail::bounded_pow(f.order(), (k - ell) * ell, kExhaustiveLimit);
    trials = std::min(trials, *space);
  }
  report.trials = trials;

  const std::uint64_t chunks = (trials + detail::kTrialsPerChunk - 1) / detail::kTrialsPerChunk;
  std::vector<std::vector<EmbeddingResult>> chunk_results(chunks);
  const bool enumerate = detail::bounded_pow(f.order(), k, kAutoEnumerationLimit).has_value();

  parallel_for(chunks, cfg.workers, [&](std::size_t ci) {
    detail::BestList best(cfg.keep_best);
    const std::uint64_t begin = ci * detail::kTrialsPerChunk;
    const std::uint64_t end = std::min(trials, begin + detail::kTrialsPerChunk);
    for (std::uint64_t t = begin; t < end; ++t) {
      GfMatrix d(f, 0, 0), c(f, 0, 0);
      if (cfg.strategy == SearchStrategy::exhaustive) {
        d = detail::matrix_from_index(f, ell, ell, invertible_d[t / c_count]);
        c = detail::matrix_from_index(f, k - ell, ell, t % c_count);
      } else {
        auto rng = detail::trial_rng(cfg.seed, t);
        d = detail::random_invertible(rng, f, ell);
        c = detail::random_matrix(rng, f, k - ell, ell);
      }
      EmbeddingResult r = shortest_embedding(base, h, std::move(d), std::move(c));
      const std::size_t cutoff = best.cutoff();
      if (enumerate) {
        auto e = detail::enumerate_min_weight(r.code, cutoff, 1, kAutoEnumerationLimit);
        if (e.abandoned) continue;
        r.distance = DistanceReport{DistanceMethod::enumeration, true, e.min_weight, std::move(e.witness)};
      } else {
        r.distance = min_distance(r.code, {DistanceMethod::low_weight, std::nullopt, 1});
        if (r.distance->value < cutoff) continue;
      }
      r.trial = t;
      best.offer(std::move(r));
    }
    chunk_results[ci] = std::move(best.items());
  });

  detail::BestList merged(cfg.keep_best);
  for (auto& chunk : chunk_results)
    for (auto& r : chunk) merged.offer(std::move(r));
  report.results = std::move(merged.items());
  for (auto& r : report.results) r.trials_used = trials;
  return report;
}

}  // namespace lcdkit
