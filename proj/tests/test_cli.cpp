#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = lcdkit::cli::run(std::move(args), o, e);
  return {code, o.str(), e.str()};
}

std::filesystem::path tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "lcdkit_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = tmp(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string fixture(const std::string& name) { return std::string(LCDKIT_FIXTURE_DIR) + "/" + name + ".txt"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, GenAndHull) {
  auto g = run({"gen", "hamming", "--q", "2", "--r", "3"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.out.substr(0, 8), "2 7 4 E\n");
  auto f = write("h7.txt", g.out);
  auto h = run({"hull", f});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("ell: 3\n"), std::string::npos);
}

TEST(Cli, GenFamilies) {
  auto s = run({"gen", "simplex", "--q", "4", "--r", "2"});
  EXPECT_EQ(s.out.substr(0, 8), "4 5 2 H\n");
  auto r = run({"gen", "grm", "--q", "2", "--r", "0", "--m", "3"});
  EXPECT_EQ(r.out, "2 8 1 E\n1 1 1 1 1 1 1 1\n");
  EXPECT_EQ(run({"gen", "simplex", "--q", "5", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"gen", "grm", "--q", "2", "--r", "1", "--m", "20"}).code, 3);
}

TEST(Cli, LcdCheck) {
  auto f = write("s32.txt", run({"gen", "simplex", "--q", "3", "--r", "2"}).out);
  auto r = run({"lcd-check", f});
  EXPECT_NE(r.out.find("lcd: false\n"), std::string::npos);
  EXPECT_NE(run({"lcd-check", fixture("C4_1")}).out.find("lcd: true\n"), std::string::npos);
}

TEST(Cli, Mindist) {
  auto r = run({"mindist", "--method", "lowweight", "--max-weight", "4", fixture("H34_prime_ternary")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d: 4 (exact)\n"), std::string::npos);
  EXPECT_NE(r.out.find("method: lowweight\n"), std::string::npos);
  EXPECT_NE(r.out.find("witness: "), std::string::npos);
  auto b = run({"mindist", "--method", "lowweight", "--max-weight", "3", fixture("H4_prime_binary")});
  EXPECT_NE(b.out.find("d: > 3"), std::string::npos);
  EXPECT_EQ(run({"mindist", "--method", "bogus", fixture("C3_1")}).code, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"hull", "/nonexistent.txt"}).code, 2);
  auto bad = write("bad.txt", "3 2 1 E\n1 w\n");
  auto r = run({"hull", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":2:3:"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, EmbedModes) {
  auto h7 = write("h7e.txt", slurp(fixture("hamming_7_4_3")));
  auto out = tmp("emb.txt").string();
  auto c = run({"embed", h7, "--mode", "canonical", "-o", out});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("length: 10\n"), std::string::npos);
  EXPECT_NE(c.out.find("lcd: true\n"), std::string::npos);

  // the displayed appended columns, in the basis of our hull decomposition
  auto base = lcdkit::parse_matrix_file(h7);
  auto remark = lcdkit::parse_matrix_file(fixture("remark_10_4_4"));
  auto spec = lcdkit::extract_blocks(remark, base);
  auto d = write("d.txt", lcdkit::render(spec.d_block, lcdkit::InnerProduct::euclidean));
  auto cb = write("c.txt", lcdkit::render(spec.c_block, lcdkit::InnerProduct::euclidean));
  auto b = run({"embed", h7, "--mode", "blocks", "--d", d, "--c", cb, "-o", out});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(run({"mindist", out}).out.find("d: 4 (exact)"), std::string::npos);

  auto sing = write("dz.txt", "2 3 3 E\n0 0 0\n0 0 0\n0 0 0\n");
  auto s = run({"embed", h7, "--mode", "blocks", "--d", sing, "--c", cb, "-o", out});
  EXPECT_EQ(s.code, 4);
  EXPECT_NE(s.err.find("D must be invertible"), std::string::npos);

  auto lcd = write("lcd.txt", "3 3 2 E\n1 0 1\n0 1 0\n");
  EXPECT_EQ(run({"embed", lcd, "-o", out}).code, 0);
  EXPECT_EQ(slurp(out), slurp(lcd));

  auto t = run({"embed", h7, "--mode", "trivial", "-o", out});
  EXPECT_NE(t.out.find("length: 18\n"), std::string::npos);
}

TEST(Cli, SearchDeterministic) {
  auto h7 = fixture("hamming_7_4_3");
  auto ex = run({"search", h7, "--strategy", "exhaustive", "--budget", "100000", "--keep", "2"});
  EXPECT_EQ(ex.code, 0);
  EXPECT_NE(ex.out.find("rank 1: d=4 (exact)"), std::string::npos);
  auto dir = tmp("search_out").string();
  auto a = run({"search", h7, "--seed", "9", "--budget", "700", "--keep", "3", "--out-dir", dir});
  auto b = run({"search", h7, "--seed", "9", "--budget", "700", "--keep", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(std::filesystem::exists(dir + "/best_003.txt"));
  auto z = run({"search", h7, "--budget", "0"});
  EXPECT_EQ(z.code, 0);
  EXPECT_NE(z.out.find("results: 0\n"), std::string::npos);
  auto h31 = write("h31.txt", run({"gen", "hamming", "--q", "2", "--r", "5"}).out);
  auto g = run({"search", h31, "--strategy", "exhaustive"});
  EXPECT_EQ(g.code, 3);
  EXPECT_EQ(run({"search", fixture("H5_prime_binary")}).code, 4);
}

TEST(Cli, CertifyPunctureDualWtenum) {
  auto s32 = write("s32c.txt", run({"gen", "simplex", "--q", "3", "--r", "2"}).out);
  auto c = run({"certify", s32});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("certified: true\n"), std::string::npos);
  EXPECT_NE(c.out.find("m=1: blocks=9 lcd_completion=none\n"), std::string::npos);

  auto p = run({"puncture", fixture("remark_10_4_4"), "--cols", "7-9"});
  EXPECT_EQ(p.out, slurp(fixture("hamming_7_4_3")).substr(slurp(fixture("hamming_7_4_3")).find('\n') + 1));

  auto d = run({"dual", s32});
  EXPECT_EQ(d.out.substr(0, 8), "3 4 2 E\n");
  auto w = run({"wtenum", s32});
  EXPECT_EQ(w.out.substr(0, 12), "A0: 1\nA3: 8\n");
  auto rr = run({"rref", write("dup.txt", "2 2 2 E\n1 1\n1 1\n")});
  EXPECT_EQ(rr.out, "2 2 1 E\n1 1\n");
}

TEST(Cli, Deterministic) {
  auto a = run({"hull", fixture("C3_3")});
  auto b = run({"hull", fixture("C3_3")});
  EXPECT_EQ(a.out, b.out);
}
