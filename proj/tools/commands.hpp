#pragma once

// Subcommands of the lcdkit tool. run() takes the argument vector without the
// program name and writes to the given streams, so tests can drive it
// in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcdkit.hpp"
#include "paper_fixtures.hpp"

#ifndef LCDKIT_FIXTURE_DIR
#define LCDKIT_FIXTURE_DIR "fixtures"
#endif

namespace lcdkit::cli {

enum Exit : int { ok = 0, verify_failed = 1, input_error = 2, guard_error = 3, math_error = 4 };

namespace detail {

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("cannot write " + path);
}

inline std::set<std::size_t> parse_cols(const std::string& spec, std::size_t n) {
  std::set<std::size_t> cols;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    try {
      std::size_t a = std::stoul(item.substr(0, dash));
      std::size_t b = dash == std::string::npos ? a : std::stoul(item.substr(dash + 1));
      if (a > b || b >= n) throw InputError("column range '" + item + "' outside [0, " + std::to_string(n) + ")");
      for (std::size_t j = a; j <= b; ++j) cols.insert(j);
    } catch (const std::logic_error&) {
      throw InputError("bad column list '" + spec + "'");
    }
  }
  return cols;
}

inline void print_header(std::ostream& out, const LinearCode& c) {
  out << "field: " << c.field().name() << '\n'
      << "n: " << c.length() << '\n'
      << "k: " << c.dimension() << '\n'
      << "ip: " << to_string(c.inner_product()) << '\n';
}

inline std::string distance_line(const DistanceReport& r) {
  if (r.exact) return std::to_string(r.value) + " (exact)";
  return "> " + std::to_string(r.value) + " (no codeword of weight <= " + std::to_string(r.value) + ")";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hulls, LCD checks and shortest LCD embeddings of linear codes over small finite fields"};
  app.require_subcommand(1);
  const unsigned workers = default_workers();

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "generator matrix file")->required(); };

  auto* hull = app.add_subcommand("hull", "hull dimension and a hull basis");
  add_file(hull);
  auto* lcd = app.add_subcommand("lcd-check", "whether the code is LCD");
  add_file(lcd);

  auto* mind = app.add_subcommand("mindist", "minimum distance");
  add_file(mind);
  std::string method = "auto";
  std::optional<std::size_t> max_weight;
  mind->add_option("--method", method, "auto | enum | lowweight")
      ->check(CLI::IsMember({"auto", "enum", "lowweight"}));
  mind->add_option("--max-weight", max_weight, "largest weight tried by the low-weight engine");

  auto* wt = app.add_subcommand("wtenum", "weight enumerator");
  add_file(wt);

  auto* punc = app.add_subcommand("puncture", "delete columns; prints the punctured generator");
  add_file(punc);
  std::string cols;
  punc->add_option("--cols", cols, "comma-separated columns or ranges, 0-based (e.g. 7-9)")->required();

  auto* rref_cmd = app.add_subcommand("rref", "row-reduce a matrix file and drop zero rows");
  add_file(rref_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "generator of the dual code");
  add_file(dual_cmd);

  auto* gen = app.add_subcommand("gen", "generate a family code");
  std::string family;
  unsigned q = 2, r = 0, m = 0;
  gen->add_option("family", family, "hamming | simplex | grm")
      ->required()
      ->check(CLI::IsMember({"hamming", "simplex", "grm"}));
  gen->add_option("--q", q, "field order (2, 3 or 4)")->required();
  gen->add_option("--r", r, "redundancy / order")->required();
  gen->add_option("--m", m, "number of variables (grm)");

  auto* emb = app.add_subcommand("embed", "build an LCD embedding");
  add_file(emb);
  std::string mode = "canonical", d_file, c_file, output;
  emb->add_option("--mode", mode, "canonical | blocks | trivial")
      ->check(CLI::IsMember({"canonical", "blocks", "trivial"}));
  emb->add_option("--d", d_file, "D block file (blocks mode)");
  emb->add_option("--c", c_file, "C block file (blocks mode)");
  emb->add_option("-o,--output", output, "output matrix file")->required();

  auto* srch = app.add_subcommand("search", "search shortest embeddings for large minimum distance");
  add_file(srch);
  SearchConfig cfg;
  std::string strategy = "random", out_dir;
  srch->add_option("--seed", cfg.seed);
  srch->add_option("--budget", cfg.budget);
  srch->add_option("--keep", cfg.keep_best);
  srch->add_option("--strategy", strategy)->check(CLI::IsMember({"random", "exhaustive"}));
  srch->add_option("--out-dir", out_dir, "write the best matrices here");

  auto* cert = app.add_subcommand("certify", "exhaustively confirm no shorter LCD embedding exists");
  add_file(cert);

  auto* verify = app.add_subcommand("verify-paper", "check every shipped fixture");
  std::string dir = LCDKIT_FIXTURE_DIR;
  verify->add_option("--dir", dir, "fixture directory");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*hull) {
      const LinearCode c = parse_matrix_file(file);
      const auto h = hull_decomposition(c);
      detail::print_header(out, c);
      out << "ell: " << h.ell << '\n';
      for (std::size_t i = 0; i < h.hull_rows.rows(); ++i)
        out << "hull_row: " << render_vector(c.field(), h.hull_rows.row(i)) << '\n';
      return ok;
    }
    if (*lcd) {
      const LinearCode c = parse_matrix_file(file);
      const std::size_t ell = hull_dimension(c);
      out << "lcd: " << (ell == 0 ? "true" : "false") << '\n' << "ell: " << ell << '\n';
      return ok;
    }
    if (*mind) {
      const LinearCode c = parse_matrix_file(file);
      DistanceOptions opt{DistanceMethod::automatic, max_weight, workers};
      if (method == "enum") opt.method = DistanceMethod::enumeration;
      if (method == "lowweight") opt.method = DistanceMethod::low_weight;
      const auto rep = min_distance(c, opt);
      out << "method: " << to_string(rep.method) << '\n' << "d: " << detail::distance_line(rep) << '\n';
      if (rep.exact) out << "witness: " << render_vector(c.field(), rep.witness) << '\n';
      return ok;
    }
    if (*wt) {
      const LinearCode c = parse_matrix_file(file);
      const auto e = weight_enumerator(c, workers);
      for (std::size_t w = 0; w < e.counts.size(); ++w)
        if (e.counts[w]) out << "A" << w << ": " << e.counts[w] << '\n';
      if (auto d = e.min_nonzero_weight()) out << "d: " << *d << '\n';
      out << "digest: " << fingerprint(c, workers).digest() << '\n';
      return ok;
    }
    if (*punc) {
      const LinearCode c = parse_matrix_file(file);
      out << render(puncture(c, detail::parse_cols(cols, c.length())));
      return ok;
    }
    if (*rref_cmd) {
      const auto mf = read_matrix_file(file);
      const auto red = rref(mf.matrix);
      out << render(block(red.rref, 0, red.rank, 0, mf.matrix.cols()), mf.ip);
      return ok;
    }
    if (*dual_cmd) {
      out << render(dual(parse_matrix_file(file)));
      return ok;
    }
    if (*gen) {
      if (family == "hamming") out << render(hamming(q, r));
      if (family == "simplex") out << render(simplex(q, r));
      if (family == "grm") out << render(grm(q, r, m));
      return ok;
    }
    if (*emb) {
      const LinearCode c = parse_matrix_file(file);
      std::size_t ell = 0;
      LinearCode result = c;
      if (mode == "trivial") {
        result = trivial_embedding(c);
      } else if (mode == "canonical") {
        auto e = canonical_shortest_embedding(c);
        ell = e.spec.decomposition.ell;
        result = e.code;
      } else {
        if (d_file.empty() || c_file.empty()) throw InputError("blocks mode needs --d and --c");
        auto e = shortest_embedding(c, read_matrix_file(d_file).matrix, read_matrix_file(c_file).matrix);
        ell = e.spec.decomposition.ell;
        result = e.code;
      }
      detail::write_file(output, render(result));
      out << "mode: " << mode << '\n'
          << "ell: " << ell << '\n'
          << "length: " << result.length() << '\n'
          << "lcd: " << (is_lcd(result) ? "true" : "false") << '\n'
          << "output: " << output << '\n';
      return ok;
    }
    if (*srch) {
      const LinearCode c = parse_matrix_file(file);
      cfg.strategy = strategy == "exhaustive" ? SearchStrategy::exhaustive : SearchStrategy::random;
      cfg.workers = workers;
      const auto rep = search(c, cfg);
      out << "ell: " << rep.ell << '\n'
          << "length: " << c.length() + rep.ell << '\n'
          << "trials: " << rep.trials << '\n'
          << "results: " << rep.results.size() << '\n';
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < rep.results.size(); ++i) {
        const auto& res = rep.results[i];
        std::string digest = "-";
        try {
          digest = fingerprint(res.code, workers).digest();
        } catch (const GuardError&) {
        }
        out << "rank " << i + 1 << ": d=" << detail::distance_line(*res.distance) << " digest=" << digest
            << " trial=" << res.trial << '\n';
        if (!out_dir.empty()) {
          std::ostringstream name;
          name << out_dir << "/best_" << std::setw(3) << std::setfill('0') << i + 1 << ".txt";
          detail::write_file(name.str(), render(res.code, "d=" + std::to_string(res.distance->value)));
        }
      }
      return ok;
    }
    if (*cert) {
      const LinearCode c = parse_matrix_file(file);
      const auto cr = certify_minimality(c);
      out << "ell: " << cr.ell << '\n';
      for (const auto& level : cr.levels) {
        out << "m=" << level.appended << ": blocks=" << level.blocks_checked
            << " lcd_completion=" << (level.lcd_block ? "found" : "none") << '\n';
      }
      out << "certified: " << (cr.certified() ? "true" : "false") << '\n'
          << "shortest_length: " << c.length() + cr.ell << '\n';
      return cr.certified() ? ok : verify_failed;
    }
    if (*verify) {
      std::vector<std::string> failing;
      for (const auto& e : fixtures::table()) {
        const auto row = fixtures::verify(dir, e, workers);
        out << row.name << ' ' << row.summary << ' ';
        if (row.passed()) {
          out << "PASS\n";
          continue;
        }
        out << "FAIL (";
        bool first = true;
        for (const auto& ch : row.checks)
          if (!ch.ok) {
            out << (first ? "" : ", ") << ch.what;
            first = false;
          }
        out << ")\n";
        failing.push_back(row.name);
      }
      if (failing.empty()) {
        out << "all fixtures pass\n";
        return ok;
      }
      out << "failing:";
      for (const auto& f : failing) out << ' ' << f;
      out << '\n';
      return verify_failed;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return guard_error;
  } catch (const MathError& e) {
    err << "math: " << e.what() << '\n';
    return math_error;
  }
  return ok;
}

}  // namespace lcdkit::cli
