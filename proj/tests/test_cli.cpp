#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(METDIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("metdim_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("solve") {
  TempDir tmp;
  const auto path3 = tmp.write("path.txt", "3 2\n0 1\n1 2\n");
  const auto c3 = tmp.write("c3.txt", "3 3\n0 1\n1 2\n2 0\n");
  const auto star = tmp.write("star.txt", "4 3\n0 1\n0 2\n0 3\n");

  SUBCASE("auto picks the di-tree solver") {
    const auto r = run("solve -i " + path3);
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["algorithm"] == "ditree");
    CHECK(j["class"] == "DiTree");
    CHECK(j["basis"] == nlohmann::json::array({0}));
    CHECK(j["metric_dimension"] == 1);
    CHECK(j["verified"] == true);
    CHECK(j["mode"] == "strong");
    CHECK(j.contains("wall_ms"));
  }
  SUBCASE("auto picks the unicyclic solver") {
    const auto j = nlohmann::json::parse(run("solve -i " + c3).out);
    CHECK(j["algorithm"] == "unicyclic");
    CHECK(j["metric_dimension"] == 1);
  }
  SUBCASE("weak exact") {
    const auto shared = tmp.write("shared.txt", "3 2\n0 2\n1 2\n");
    const auto r = run("solve -i " + shared + " --algorithm exact --mode weak");
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["metric_dimension"] == 1);
  }
  SUBCASE("modwidth and stdin") {
    const auto r = run("solve --algorithm modwidth < " + star);
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["metric_dimension"] == 3);
  }
  SUBCASE("report to a file") {
    const auto out = (tmp.path / "report.json").string();
    CHECK(run("solve -i " + path3 + " -o " + out).status == 0);
    std::ifstream in(out);
    CHECK(nlohmann::json::parse(in)["verified"] == true);
  }
  SUBCASE("errors") {
    CHECK(run("solve -i " + c3 + " --algorithm ditree").status == 3);
    CHECK(run("solve -i " + path3 + " --algorithm unicyclic").status == 3);
    CHECK(run("solve -i " + tmp.write("bad.txt", "2 1\n0 5\n")).status == 2);
    CHECK(run("solve -i " + (tmp.path / "missing.txt").string()).status == 2);
    CHECK(run("solve -i " + path3 + " --algorithm magic").status == 2);
    CHECK(run("solve -i " + path3 + " --algorithm exact --cap 40").status == 2);
    CHECK(run("frobnicate").status == 2);
  }
}

TEST_CASE("verify") {
  TempDir tmp;
  const auto path3 = tmp.write("path.txt", "3 2\n0 1\n1 2\n");
  const auto star = tmp.write("star.txt", "4 3\n0 1\n0 2\n0 3\n");
  const auto b0 = tmp.write("b0.txt", "0\n");
  const auto b1 = tmp.write("b1.txt", "1\n");
  const auto bad = tmp.write("bad.txt", "7\n");

  auto ok = run("verify -i " + path3 + " -b " + b0);
  CHECK(ok.status == 0);
  CHECK(ok.out == "PASS\n");
  auto pair = run("verify -i " + star + " -b " + b0);
  CHECK(pair.status == 1);
  CHECK(pair.out == "FAIL: vertices 1 and 2 have the same distance vector\n");
  auto unreachable = run("verify -i " + path3 + " -b " + b1);
  CHECK(unreachable.status == 1);
  CHECK(unreachable.out == "FAIL: vertex 0 is unreachable from the set\n");
  CHECK(run("verify -i " + path3 + " -b " + b1 + " --mode weak").status == 0);
  CHECK(run("verify -i " + path3 + " -b " + bad).status == 2);
}

TEST_CASE("gen") {
  const auto a = run("gen --class ditree --n 20 --digon-prob 0.4 --seed 9");
  const auto b = run("gen --class ditree --n 20 --digon-prob 0.4 --seed 9");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.front() == '#');
  CHECK(run("gen --class ditree --n 20 --seed 10").out != a.out);
  CHECK(run("gen --class unicyclic --n 9 --cycle-len 5").status == 0);
  CHECK(run("gen --class unicyclic --n 3 --cycle-len 5").status == 2);
  CHECK(run("gen --class dag --n 6 --format dot").out.find("digraph") != std::string::npos);

  TempDir tmp;
  const auto gadget = (tmp.path / "k4.txt").string();
  const auto cubic = (tmp.path / "k4.cubic").string();
  REQUIRE(run("gen --class reduction --instance k4 -o " + gadget + " --instance-output " + cubic).status == 0);
  CHECK(run("solve -i " + gadget + " --algorithm ditree").status == 3);  // gadgets are not di-trees
  CHECK(run("gen --class reduction --instance " + cubic).status == 0);
}

TEST_CASE("bench") {
  const auto r = run("bench --suite ditree --sizes 50,100 --seeds 2");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("suite,n,seed,solve_ms,basis_size,verified\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : r.out) rows += c == '\n';
  CHECK(rows == 5);
  CHECK(r.out.find("false") == std::string::npos);
  CHECK(run("bench --suite unicyclic --sizes 2").status == 2);
}
