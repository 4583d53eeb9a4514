#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string &args) {
  std::string cmd = std::string(MULAMBDA_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("mulambda_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("analyze sym:3") {
  RunResult r = run_cli("analyze sym:3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("subgroups 6, classes 4") != std::string::npos);
  CHECK(r.out.find("property holds") != std::string::npos);
}

TEST_CASE("analyze cyclic:1") {
  RunResult r = run_cli("analyze cyclic:1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("classes 1") != std::string::npos);
}

TEST_CASE("analyze json schema") {
  RunResult r = run_cli("analyze psl2:4 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["spec"] == "psl2:4");
  CHECK(j["order"] == 60);
  CHECK(j["solvable"] == false);
  CHECK(j["derived_order"] == 60);
  CHECK(j["frattini_order"] == 1);
  CHECK(j["verdict"] == true);
  bool found = false;
  for (const auto &c : j["classes"]) {
    REQUIRE(c.contains("rep_order"));
    REQUIRE(c.contains("class_size"));
    REQUIRE(c.contains("mu"));
    REQUIRE(c.contains("lambda"));
    REQUIRE(c.contains("t"));
    REQUIRE(c.contains("pass"));
    if (c["rep_order"] == 1) {
      found = true;
      CHECK(c["mu"] == -60);
      CHECK(c["lambda"] == -1);
      CHECK(c["t"] == 60);
    }
  }
  CHECK(found);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify alt:5").exit_code == 0);
  CHECK(run_cli("verify cyclic:12").exit_code == 0);
  CHECK(run_cli("verify nonsense:5").exit_code == 2);
  CHECK(run_cli("verify sym:99").exit_code == 2); // element cap
}

TEST_CASE("family output and regime errors") {
  RunResult r = run_cli("family sz --q 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("-29120") != std::string::npos);
  CHECK(run_cli("family l2 --q 9").exit_code == 2);
  CHECK(run_cli("family l2 --q 7").exit_code == 2);
  RunResult rcsv = run_cli("family l2 --q 8 --format csv");
  CHECK(rcsv.exit_code == 0);
  CHECK(rcsv.out.find("family,label,h,order,mu,normalizer_order,lambda,condition") !=
        std::string::npos);
}

TEST_CASE("family cross-check") {
  RunResult r = run_cli("family l2 --q 4 --cross-check");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("match") != std::string::npos);
}

TEST_CASE("suite corpus") {
  TempDir tmp;
  auto corpus = tmp.path / "corpus.txt";
  {
    std::ofstream os(corpus);
    os << "# comment line\n";
    os << "sym:3\n";
    os << "cyclic:6 EXPECT pass\n";
    os << "alt:5 EXPECT pass\n";
  }
  RunResult r = run_cli("suite " + corpus.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3 specs, 3 expectations met") != std::string::npos);

  {
    std::ofstream os(corpus);
    os << "sym:3 EXPECT fail\n";
  }
  CHECK(run_cli("suite " + corpus.string()).exit_code == 1);

  {
    std::ofstream os(corpus, std::ios::trunc);
  }
  RunResult rempty = run_cli("suite " + corpus.string());
  CHECK(rempty.exit_code == 0);
  CHECK(rempty.out.find("0 specs") != std::string::npos);

  CHECK(run_cli("suite /does/not/exist").exit_code == 2);
}

TEST_CASE("warm cache output is byte-identical to cold") {
  TempDir tmp;
  std::string args = "analyze sym:4 --format json --cache-dir " + tmp.path.string();
  RunResult cold = run_cli(args);
  REQUIRE(cold.exit_code == 0);
  bool have_cache = false;
  for (auto &e : std::filesystem::directory_iterator(tmp.path)) {
    (void)e;
    have_cache = true;
  }
  CHECK(have_cache);
  RunResult warm = run_cli(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
}

TEST_CASE("verify u3:3 fails with the expected classes") {
  TempDir tmp;
  std::string cache = " --cache-dir " + tmp.path.string();
  RunResult r = run_cli("verify u3:3" + cache);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("property FAILS") != std::string::npos);
  CHECK(r.out.find("failing class rep orders: 2 6 8 24") != std::string::npos);
  // corpus expectation flips the exit code; warm cache makes this cheap
  auto corpus = tmp.path / "corpus.txt";
  {
    std::ofstream os(corpus);
    os << "u3:3 EXPECT fail\n";
  }
  RunResult rs = run_cli("suite " + corpus.string() + cache);
  CHECK(rs.exit_code == 0);
  CHECK(rs.out.find("1 specs, 1 expectations met") != std::string::npos);
}

TEST_CASE("family ree rejects cross-check") {
  CHECK(run_cli("family ree --q 27 --cross-check").exit_code == 2);
}

TEST_CASE("cache dir from environment") {
  TempDir tmp;
  std::string cmd = "MULAMBDA_CACHE_DIR=" + tmp.path.string() + " " +
                    std::string(MULAMBDA_CLI_PATH) + " analyze sym:3 >/dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  bool have_cache = false;
  for (auto &e : std::filesystem::directory_iterator(tmp.path)) {
    (void)e;
    have_cache = true;
  }
  CHECK(have_cache);
}
