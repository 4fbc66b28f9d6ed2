#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "locturan/cli.hpp"
#include "locturan/generators.hpp"
#include "oracles/brute.hpp"

namespace locturan {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

TEST(CliWeights, Examples) {
  const Outcome tri = run({"weights"}, "Bw\n");
  EXPECT_EQ(tri.code, cli::kOk);
  EXPECT_EQ(tri.out, "vertex\tp\tc\n0\t2\t3\n1\t2\t3\n2\t2\t3\ncircumference\t3\n");
  const Outcome path = run({"weights"}, "Bg\n");
  EXPECT_EQ(path.out, "vertex\tp\tc\n0\t2\t2\n1\t2\t2\n2\t2\t2\ncircumference\t2\n");
  const Outcome empty = run({"weights"}, "");
  EXPECT_EQ(empty.code, cli::kOk);
  EXPECT_EQ(empty.out, "");
  EXPECT_EQ(run({"weights"}, "B!\n").code, cli::kInputError);
}

TEST(CliWeights, EdgeListFile) {
  const auto path = std::filesystem::temp_directory_path() / "locturan_cli_test_edges.txt";
  {
    std::ofstream f(path);
    f << "# triangle\nn 3\n0 1\n1 2\n0 2\n";
  }
  const Outcome r = run({"weights", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, run({"weights"}, "Bw\n").out);
  EXPECT_EQ(run({"weights", "/nonexistent/graph.g6"}).code, cli::kInputError);
}

TEST(CliCheck, Examples) {
  const std::string bowtie = oracle::encode_graph6(generate_pdbg({{3, 3}, {}, {}}));
  const Outcome r = run({"check", "--theorem", "1", "--s", "2"}, bowtie + "\n");
  EXPECT_EQ(r.code, cli::kOk);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1U);
  EXPECT_EQ(lines[0]["lhs"], 6);
  EXPECT_EQ(lines[0]["rhs_num"], 6);
  EXPECT_EQ(lines[0]["equality"], true);
  EXPECT_EQ(lines[0]["extremal"], true);

  const Outcome c4 = run({"check", "--theorem", "1", "--s", "3"}, "Cr\n");
  EXPECT_EQ(c4.code, cli::kOk);
  const auto c4j = json_lines(c4.out).at(0);
  EXPECT_EQ(c4j["equality"], false);
  EXPECT_EQ(c4j["extremal"], false);

  EXPECT_EQ(run({"check", "--theorem", "1", "--s", "2"}, "B!\n").code, cli::kInputError);
  EXPECT_EQ(run({"check", "--theorem", "3", "--s", "2"}, "Bw\n").code, cli::kInputError);
  EXPECT_EQ(run({"check", "--theorem", "1", "--s", "0"}, "Bw\n").code, cli::kInputError);
  EXPECT_EQ(run({"check", "--s", "2"}, "Bw\n").code, cli::kInputError);
}

TEST(CliCheck, OneLinePerGraph) {
  const Outcome r = run({"check", "--theorem", "2", "--s", "3"}, "Bw\nBg\nCr\n\n");
  EXPECT_EQ(r.code, cli::kOk);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 3U);
  EXPECT_EQ(lines[0]["graph6"], "Bw");
  EXPECT_EQ(lines[2]["graph6"], "Cr");
}

TEST(CliSweep, Examples) {
  const Outcome r = run({"sweep", "--n", "5", "--s", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["graphs_per_n"].back(), 34);

  const Outcome zero = run({"sweep", "--n", "0"});
  EXPECT_EQ(zero.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(zero.out)["violations"], 0);

  const Outcome nine = run({"sweep", "--n", "9"});
  EXPECT_EQ(nine.code, cli::kInputError);
  EXPECT_NE(nine.err.find("n <= 8"), std::string::npos);
}

TEST(CliGen, Examples) {
  const Outcome bt = run({"gen", "--pdbg", "3,3"});
  EXPECT_EQ(bt.code, cli::kOk);
  const Graph expected_bt = from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  EXPECT_EQ(bt.out, oracle::encode_graph6(expected_bt) + "\n");

  const Outcome kk = run({"gen", "--clique-forest", "2x4"});
  EXPECT_EQ(kk.code, cli::kOk);
  EXPECT_EQ(kk.out, oracle::encode_graph6(disjoint_union(complete_graph(4), complete_graph(4))) + "\n");

  EXPECT_EQ(run({"gen", "--pdbg", "2,3"}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "--pdbg", "5,4,4,3", "--self-check"}).code, cli::kOk);
  EXPECT_EQ(run({"gen", "--clique-forest", "3x2-5"}).code, cli::kInputError);  // needs --seed
  EXPECT_EQ(run({"gen", "--random-pdbg", "4,5", "--count", "3"}).code, cli::kInputError);
}

TEST(CliGen, SeededOutputIsReproducible) {
  const Outcome a = run({"gen", "--random-pdbg", "6,6", "--seed", "9", "--count", "5", "--self-check"});
  const Outcome b = run({"gen", "--random-pdbg", "6,6", "--seed", "9", "--count", "5"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  std::istringstream is(a.out);
  int lines = 0;
  for (std::string line; std::getline(is, line);) ++lines;
  EXPECT_EQ(lines, 5);

  const Outcome f = run({"gen", "--clique-forest", "3x2-5", "--seed", "4", "--count", "4", "--self-check"});
  EXPECT_EQ(f.code, cli::kOk);
}

TEST(CliPeel, Examples) {
  const Outcome k4 = run({"peel"}, "C~\n");
  EXPECT_EQ(k4.code, cli::kOk);
  auto last = json_lines(k4.out).back();
  EXPECT_EQ(last["stages"], 1);
  EXPECT_EQ(last["verdict"], "pass");

  const Outcome empty = run({"peel"}, "?\n");
  EXPECT_EQ(empty.code, cli::kOk);
  EXPECT_EQ(json_lines(empty.out).back()["stages"], 0);

  const std::string bowtie = oracle::encode_graph6(generate_pdbg({{3, 3}, {}, {}}));
  const Outcome bt = run({"peel", "--trace"}, bowtie + "\n");
  EXPECT_EQ(bt.code, cli::kOk);
  const auto lines = json_lines(bt.out);
  ASSERT_EQ(lines.size(), 3U);  // two stages, then the verdict
  EXPECT_EQ(lines[0]["stage"], 0);
  EXPECT_EQ(lines[2]["verdict"], "pass");

  // The end of the tail lies on no cycle, so it cannot start the peel.
  const Graph tailed = from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(run({"peel", "--start", "4"}, oracle::encode_graph6(tailed) + "\n").code, cli::kInputError);
  EXPECT_EQ(run({"peel", "--start", "1"}, oracle::encode_graph6(tailed) + "\n").code, cli::kOk);
}

TEST(CliUsage, ErrorsAndHelp) {
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_EQ(run({"--dp-limit", "23", "weights"}, "Bw\n").code, cli::kInputError);
  EXPECT_EQ(run({"--dp-limit", "2", "weights"}, "Cr\n").code, cli::kInputError);
  EXPECT_EQ(run({"--dp-limit", "2", "weights"}, "Bw\n").code, cli::kOk);  // block graph shortcut
}

}  // namespace
}  // namespace locturan
