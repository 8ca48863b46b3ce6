#pragma once

// Expected parameters for the shipped fixture matrices and the checks that
// `lcdkit verify-paper` runs against them.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcdkit.hpp"

namespace lcdkit::fixtures {

struct Expected {
  const char* name;
  std::size_t n, k, d;
  std::size_t ell;       // hull dim of the fixture itself
  std::size_t base_ell;  // appended columns = hull dim of the punctured base; 0 if not an embedding
  std::size_t base_d;
  bool cross_check;  // distance by both engines
  std::optional<std::size_t> max_weight;  // forces the low-weight engine
  const char* base_fixture = nullptr;  // fixture whose row space the punctured base must equal
};

// remark/H*: embeddings of Hamming codes. C*: embeddings of known codes,
// recovered by puncturing the appended columns.
inline const std::vector<Expected>& table() {
  static const std::vector<Expected> t = {
      {"hamming_7_4_3", 7, 4, 3, 3, 0, 0, false, std::nullopt},
      {"remark_10_4_4", 10, 4, 4, 0, 3, 3, false, std::nullopt, "hamming_7_4_3"},
      {"H4_prime_binary", 19, 11, 4, 0, 4, 3, true, std::nullopt},
      {"H5_prime_binary", 36, 26, 4, 0, 5, 3, false, 4},
      {"H33_prime_ternary", 16, 10, 4, 0, 3, 3, false, std::nullopt},
      {"H34_prime_ternary", 44, 36, 4, 0, 4, 3, false, 4},
      {"C3_1", 23, 4, 14, 0, 4, 12, false, std::nullopt},
      {"C3_2", 23, 5, 12, 0, 4, 11, false, std::nullopt},
      {"C3_3", 24, 6, 12, 0, 4, 10, false, std::nullopt},
      {"C3_4", 25, 5, 14, 0, 5, 12, false, std::nullopt},
      {"C4_1", 21, 10, 8, 0, 1, 7, false, std::nullopt},
  };
  return t;
}

inline std::string path_for(const std::string& dir, const Expected& e) { return dir + "/" + e.name + ".txt"; }

struct Check {
  std::string what;
  bool ok;
};

struct Row {
  std::string name;
  std::string summary;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

namespace detail {

inline std::string dist_text(const DistanceReport& r) {
  return r.exact ? std::to_string(r.value) : ">" + std::to_string(r.value);
}

inline std::size_t distance_or_zero(const LinearCode& c, const DistanceOptions& opt) {
  auto r = min_distance(c, opt);
  return r.exact ? r.value : 0;
}

}  // namespace detail

inline DistanceOptions options_for(const Expected& e, DistanceMethod m, unsigned workers) {
  if (e.max_weight) return {DistanceMethod::low_weight, e.max_weight, workers};
  return {m, std::nullopt, workers};
}

/// Runs every check for one fixture. Exceptions surface as failed checks.
inline Row verify(const std::string& dir, const Expected& e, unsigned workers) {
  Row row{e.name, {}, {}};
  std::ostringstream s;
  try {
    const LinearCode c = parse_matrix_file(path_for(dir, e));
    s << '[' << c.length() << ',' << c.dimension() << ']';
    row.checks.push_back({"n,k", c.length() == e.n && c.dimension() == e.k});

    const std::size_t own_ell = hull_dimension(c);
    s << " lcd=" << (own_ell == 0 ? "true" : "false");
    if (own_ell) s << " ell=" << own_ell;
    row.checks.push_back({"ell", own_ell == e.ell});

    auto d = min_distance(c, options_for(e, DistanceMethod::automatic, workers));
    s << " d=" << detail::dist_text(d);
    row.checks.push_back({"d", d.exact && d.value == e.d});
    if (e.cross_check) {
      auto en = min_distance(c, {DistanceMethod::enumeration, std::nullopt, workers});
      auto lw = min_distance(c, {DistanceMethod::low_weight, std::nullopt, workers});
      s << " d_enum=" << detail::dist_text(en) << " d_lowweight=" << detail::dist_text(lw);
      row.checks.push_back({"d_enum", en.exact && en.value == e.d});
      row.checks.push_back({"d_lowweight", lw.exact && lw.value == e.d});
    }

    if (e.base_ell == 0) {
      row.summary = s.str();
      return row;
    }
    const LinearCode base = puncture_tail(c, e.base_ell);
    const std::size_t ell = hull_dimension(base);
    s << " base=[" << base.length() << ',' << base.dimension() << "] base_ell=" << ell;
    row.checks.push_back({"base n,k", base.length() == e.n - e.base_ell && base.dimension() == e.k});
    row.checks.push_back({"base_ell", ell == e.base_ell});

    const std::size_t bd = detail::distance_or_zero(base, options_for(e, DistanceMethod::automatic, workers));
    s << " base_d=" << bd;
    row.checks.push_back({"base_d", bd == e.base_d});
    if (e.base_fixture) {
      const bool same = same_code(base, parse_matrix_file(dir + "/" + e.base_fixture + ".txt"));
      s << " base_code=" << e.base_fixture << ':' << (same ? "same" : "different");
      row.checks.push_back({"base code", same});
    }
  } catch (const std::exception& ex) {
    s << " error: " << ex.what();
    row.checks.push_back({"load", false});
  }
  row.summary = s.str();
  return row;
}

}  // namespace lcdkit::fixtures
