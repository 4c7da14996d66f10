#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "grig/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = grig::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("grig_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("graph") {
  const auto dot = run({"graph", "--omega", "012", "--level", "3", "--format", "dot"});
  CHECK(dot.code == 0);
  std::size_t vertices = 0;
  for (const auto& l : lines(dot.out)) vertices += l.find("--") == std::string::npos && l.back() == ';';
  CHECK(vertices == 16);

  const auto oracle = run({"graph", "--omega", "012", "--level", "5", "--oracle"});
  CHECK(oracle.code == 0);
  CHECK(lines(oracle.out).front() == "MATCH");

  CHECK(run({"graph", "--omega", "3"}).code == 2);
  CHECK(run({"graph", "--level", "0"}).code == 2);
  CHECK(run({"graph", "--format", "png"}).code == 2);
  CHECK(run({"graph", "--level", "2", "--format", "json"}).out.find("\"vertices\": 8") != std::string::npos);
}

TEST_CASE("language and complexity") {
  const auto lang = run({"language", "--omega", "012", "--n", "2"});
  CHECK(lang.code == 0);
  const auto ls = lines(lang.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "omega=012 n=2 count=6");
  CHECK(ls[1] == "T L0");

  const auto table = run({"complexity", "--omega", "012", "--max-n", "256"});
  CHECK(table.code == 0);
  const auto rows = lines(table.out);
  CHECK(rows.size() == 257);
  CHECK(rows[0] == "n\trho\t6n\tstatus");
  CHECK(rows[1] == "1\t4\t6\tpass");
  CHECK(table.out.find("fail") == std::string::npos);

  const auto degenerate = run({"complexity", "--omega", "0:1", "--max-n", "4"});
  CHECK(degenerate.code == 3);
  CHECK(degenerate.err.find("eventually constant") != std::string::npos);
  CHECK(run({"language", "--omega", "1", "--n", "3"}).code == 3);
}

TEST_CASE("word") {
  CHECK(lines(run({"word", "--omega", "012", "bcd"}).out).front() == "trivial");
  const auto order = run({"word", "--omega", "012", "ad", "--order"});
  CHECK(order.code == 0);
  CHECK(order.out.find("order 4\n") != std::string::npos);
  CHECK(run({"word", "ab", "--order", "--max-order", "8"}).out.find("order > 8") != std::string::npos);
  const auto embed = run({"word", "--omega", "012", "ab", "--embed-check"});
  CHECK(embed.code == 0);
  CHECK(embed.out.find("embedding consistent") != std::string::npos);
  CHECK(run({"word", "abe"}).code == 2);
  CHECK(run({"word"}).code == 2);
  CHECK(run({"word", "--omega", "0:1", "ab", "--embed-check"}).code == 3);
}

TEST_CASE("orbit, ball, embed, double") {
  const auto ray = run({"orbit", "--ray", "0010"});
  CHECK(ray.code == 0);
  CHECK(ray.out.find("index 13\n") != std::string::npos);
  CHECK(ray.out.find("in orbit") != std::string::npos);
  CHECK(run({"orbit", "--ray", "012"}).code == 2);
  CHECK(lines(run({"orbit", "--count", "4"}).out).back() == "3\t10(1)");

  const auto ball = run({"ball", "--radius", "4"});
  CHECK(lines(ball.out).back() == "4\t40");
  CHECK(run({"ball", "--radius", "13"}).code == 2);

  const auto embed = run({"embed", "ad"});
  CHECK(embed.code == 0);
  CHECK(embed.out.rfind("element: a * d\n", 0) == 0);

  CHECK(run({"double", "--max-n", "64"}).code == 0);
  CHECK(run({"double", "--commutator", "aba"}).out.find("holds") != std::string::npos);
  CHECK(run({"double", "--commutator", "ab"}).code == 2);
}

TEST_CASE("verify") {
  const auto quick = run({"verify", "--omega", "012", "--quick"});
  CHECK(quick.code == 0);
  CHECK(quick.out.find("\"passed\": true") != std::string::npos);
  CHECK(run({"verify", "--omega", "2:01"}).code == 0);

  const auto first = run({"verify", "--seed", "7", "--quick", "--format", "tsv"});
  const auto second = run({"verify", "--seed", "7", "--quick", "--format", "tsv"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(run({"verify", "--seed", "7", "--quick"}).out == run({"verify", "--seed", "7", "--quick"}).out);
  CHECK(run({"verify", "--omega", "0:1"}).code == 0);
}

TEST_CASE("export reproduces the golden files") {
  const auto dir = scratch_dir("export");
  const auto res = run({"export", "--omega", "012", "--max-level", "6", "--dir", dir.string()});
  CHECK(res.code == 0);
  for (int n = 1; n <= 6; ++n) {
    const std::string name = "omega012_level" + std::to_string(n) + ".dot";
    CHECK(slurp(dir / name) == slurp(std::filesystem::path(GRIG_GOLDEN_DIR) / name));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("output file and usage") {
  const auto dir = scratch_dir("output");
  std::filesystem::create_directories(dir);
  const auto path = dir / "lang.txt";
  CHECK(run({"language", "--n", "1", "-o", path.string()}).code == 0);
  CHECK(lines(slurp(path)).front() == "omega=012 n=1 count=4");
  std::filesystem::remove_all(dir);

  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
}
