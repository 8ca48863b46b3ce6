#pragma once

// Plain-text matrix files:
//
//   # comment lines start with '#'
//   q n k ip            field order, columns, rows, E or H
//   k lines of n whitespace-separated symbols
//
// Symbols: digits for prime fields, `0 1 w v` (0, 1, z, z^2) for GF(4).

#include <cctype>
#include <fstream>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lcdkit/code.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/matrix.hpp"

namespace lcdkit {

struct MatrixFile {
  GfMatrix matrix;
  InnerProduct ip;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

inline bool parse_count(const std::string& s, std::size_t& out) {
  if (s.empty() || s.size() > 9) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

}  // namespace detail

/// Reads a matrix file without imposing any rank condition.
inline MatrixFile read_matrix(std::istream& in, const std::string& source = "<input>") {
  auto fail = [&](std::size_t line, std::size_t col, const std::string& msg) -> InputError {
    return InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  };
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::vector<detail::Token>>> content;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = detail::tokenize(line);
    if (toks.empty() || toks.front().text.front() == '#') continue;
    content.emplace_back(lineno, std::move(toks));
  }
  if (content.empty()) throw fail(lineno + 1, 1, "missing header \"q n k ip\"");

  const auto& [hline, header] = content.front();
  if (header.size() != 4) throw fail(hline, 1, "header must be \"q n k ip\"");
  std::size_t q = 0, n = 0, k = 0;
  if (!detail::parse_count(header[0].text, q)) throw fail(hline, header[0].col, "bad field order");
  if (!detail::parse_count(header[1].text, n)) throw fail(hline, header[1].col, "bad length");
  if (!detail::parse_count(header[2].text, k)) throw fail(hline, header[2].col, "bad dimension");
  if (!Field::supported(static_cast<unsigned>(q)))
    throw fail(hline, header[0].col, "unsupported field order " + header[0].text);
  InnerProduct ip;
  if (header[3].text == "E") {
    ip = InnerProduct::euclidean;
  } else if (header[3].text == "H") {
    if (q != 4) throw fail(hline, header[3].col, "inner product H requires q = 4");
    ip = InnerProduct::hermitian;
  } else {
    throw fail(hline, header[3].col, "inner product must be E or H");
  }

  const Field f(static_cast<unsigned>(q));
  if (content.size() - 1 != k)
    throw fail(content.back().first, 1,
               "expected " + std::to_string(k) + " rows, found " + std::to_string(content.size() - 1));
  GfMatrix m(f, k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [ln, toks] = content[i + 1];
    if (toks.size() != n)
      throw fail(ln, 1, "expected " + std::to_string(n) + " symbols, found " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < n; ++j) {
      auto v = f.parse_symbol(toks[j].text);
      if (!v) throw fail(ln, toks[j].col, "symbol '" + toks[j].text + "' is not in " + f.name());
      m(i, j) = *v;
    }
  }
  return {std::move(m), ip};
}

inline MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_matrix(in, path);
}

/// Reads a generator matrix file into a code (full row rank required).
inline LinearCode parse_matrix(std::istream& in, const std::string& source = "<input>") {
  auto mf = read_matrix(in, source);
  try {
    return {std::move(mf.matrix), mf.ip};
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline LinearCode parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_matrix(in, path);
}

inline std::string render(const GfMatrix& m, InnerProduct ip, const std::string& comment = {}) {
  const Field f = m.field();
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << f.order() << ' ' << m.cols() << ' ' << m.rows() << ' ' << (ip == InnerProduct::hermitian ? 'H' : 'E')
      << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << f.symbol(m(i, j));
    out << '\n';
  }
  return out.str();
}

inline std::string render(const LinearCode& c, const std::string& comment = {}) {
  return render(c.generator(), c.inner_product(), comment);
}

inline std::string render_vector(const Field& f, std::span<const Field::value_type> v) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? " " : "") + f.symbol(v[j]);
  return s;
}

}  // namespace lcdkit
