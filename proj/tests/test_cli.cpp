#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cayley2/cayley_graph.hpp"
#include "cayley2/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cayley2::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Scratch directory next to the test binary, wiped per test case.
struct TempDir {
  fs::path path;
  TempDir() : path(fs::current_path() / "cli_scratch") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

const char* kSmallCert =
    "group: tw1xz4\n"
    "generators: 1,2,3,6,9,15\n"
    "order: 16\n"
    "degree: 6\n"
    "diameter: 2\n"
    "provenance: rds4 m=1\n"
    "methods: bfs,groupring\n"
    "claimed_degree: 6\n";

}  // namespace

TEST_CASE("build prints the full certificate and is byte-stable") {
  const auto r = run_cli({"build", "--construction", "rds4", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == kSmallCert);

  const auto again = run_cli({"build", "--construction", "rds4", "--m", "1"});
  CHECK(again.out == r.out);
}

TEST_CASE("build writes certificate and edge files that round-trip") {
  TempDir tmp;
  const auto cert_path = tmp.file("m1.cert");
  const auto edges_path = tmp.file("m1.edges");
  const auto r = run_cli({"build", "--construction", "rds4", "--m", "1", "--cert",
                          cert_path, "--edges", edges_path});
  CHECK(r.code == 0);
  CHECK(slurp(cert_path) == r.out);

  const auto edges = slurp(edges_path);
  CHECK(edges.substr(0, 4) == "0 1\n");
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 48);  // 16 * 6 / 2

  const auto cert = cayley2::read_certificate(cert_path);
  CHECK(cert.group == "tw1xz4");
  CHECK(cert.generators == std::vector<std::uint32_t>{1, 2, 3, 6, 9, 15});
  CHECK(cert.diameter == 2);
}

TEST_CASE("build surfaces construction refusals on stderr with exit 1") {
  const auto even = run_cli({"build", "--construction", "rds4", "--m", "2"});
  CHECK(even.code == 1);
  CHECK(even.out.empty());
  CHECK(even.err.find("double-cover") != std::string::npos);

  const auto literal = run_cli({"build", "--construction", "neofield", "--q", "3",
                                "--use-literal-paper-config"});
  CHECK(literal.code == 1);
  CHECK(literal.err.find("uncovered") != std::string::npos);
}

TEST_CASE("verify reports measured structure and sets the exit code") {
  const auto good =
      run_cli({"verify", "--group", "z7", "--set", "1,2,4", "--claim", "7,3,1"});
  CHECK(good.code == 0);
  CHECK(good.out.find("ok: yes") == 0);
  CHECK(good.out.find("measured_lambda: 1") != std::string::npos);

  const auto bad =
      run_cli({"verify", "--group", "z7", "--set", "1,2,3", "--claim", "7,3,1"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("ok: no") == 0);
  CHECK(bad.out.find("witness: element 1 measured 2 expected 1") != std::string::npos);
  CHECK(bad.out.find("witness: element 3 measured 0 expected 1") != std::string::npos);

  const auto typed = run_cli({"verify", "--group", "z4xz4", "--set", "3,6,8",
                              "--claim", "16,3,1", "--subgroup", "0,4,8,12",
                              "--subgroup", "0,1,2,3", "--subgroup", "0,5,10,15",
                              "--type", "neofield"});
  CHECK(typed.code == 0);
  CHECK(typed.out.find("ok: yes") == 0);
  CHECK(typed.out.find("deficiency") != std::string::npos);
}

TEST_CASE("search prints a deterministic table and can mirror it to a file") {
  TempDir tmp;
  const auto out_path = tmp.file("hits.tsv");
  const std::vector<std::string> args = {"search",  "--max-order", "4",
                                         "--k",     "1",           "--psi",
                                         "1",       "--theta",     "1",
                                         "--out",   out_path};
  const auto r = run_cli(args);
  CHECK(r.code == 0);
  CHECK(r.out.find("H\tpsi\tlambda_1\ts\tscore\n") == 0);
  CHECK(r.out.find("1/3") != std::string::npos);
  CHECK(slurp(out_path) == r.out);

  auto again = args;
  again.pop_back();
  again.pop_back();
  CHECK(run_cli(again).out == r.out);
}

TEST_CASE("bounds renders the table and folds in rechecked certificates") {
  const auto bare = run_cli({"bounds", "--d", "6:7"});
  CHECK(bare.code == 0);
  CHECK(bare.out ==
        "d\tk\tmoore\tac_upper\tdf_upper\tbest_order\tconstruction\n"
        "6\t2\t37\t25\t25\t-\t-\n"
        "7\t2\t50\t32\t-\t-\t-\n");

  TempDir tmp;
  fs::create_directories(tmp.path / "certs");
  run_cli({"build", "--construction", "rds4", "--m", "1", "--cert",
           (tmp.path / "certs" / "m1.cert").string()});
  const auto with = run_cli(
      {"bounds", "--d", "6:7", "--certs", (tmp.path / "certs").string()});
  CHECK(with.code == 0);
  CHECK(with.out.find("6\t2\t37\t25\t25\t16\trds4 m=1\n") != std::string::npos);

  // a certificate whose stated order lies about its group is rejected
  auto lying = slurp(tmp.path / "certs" / "m1.cert");
  lying.replace(lying.find("order: 16"), 9, "order: 17");
  std::ofstream(tmp.path / "certs" / "m1.cert", std::ios::binary) << lying;
  const auto r = run_cli(
      {"bounds", "--d", "6:7", "--certs", (tmp.path / "certs").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("does not match") != std::string::npos);
}

TEST_CASE("pad hits the exact degree, picking a base automatically if needed") {
  const auto r = run_cli(
      {"pad", "--construction", "rds4", "--m", "1", "--d", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("generators: 1,2,3,5,6,7,9,15\n") != std::string::npos);
  CHECK(r.out.find("degree: 8\n") != std::string::npos);
  CHECK(r.out.find("diameter: 2\n") != std::string::npos);

  const auto automatic = run_cli({"pad", "--d", "18"});
  CHECK(automatic.code == 0);
  CHECK(automatic.out.find("order: 100\n") != std::string::npos);
  CHECK(automatic.out.find("provenance: neofield q=3\n") != std::string::npos);

  const auto gap = run_cli({"pad", "--d", "16"});
  CHECK(gap.code == 1);
  CHECK(gap.err.find("no base construction fits") != std::string::npos);
}

TEST_CASE("export re-verifies a certificate and matches build's edge list") {
  TempDir tmp;
  const auto cert_path = tmp.file("g.cert");
  const auto direct = tmp.file("direct.edges");
  run_cli({"build", "--construction", "dpds", "--q", "3", "--cert", cert_path,
           "--edges", direct});
  const auto exported = tmp.file("again.edges");
  const auto r = run_cli({"export", "--cert", cert_path, "--edges", exported});
  CHECK(r.code == 0);
  CHECK(slurp(exported) == slurp(direct));

  const auto missing =
      run_cli({"export", "--cert", tmp.file("nope.cert"), "--edges", exported});
  CHECK(missing.code == 1);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("argument errors are reported without touching the math") {
  CHECK(run_cli({}).code != 0);
  CHECK(run_cli({"frobnicate"}).code != 0);

  const auto no_flags = run_cli({"build"});
  CHECK(no_flags.code != 0);
  CHECK_FALSE(no_flags.err.empty());

  const auto bad_family = run_cli({"build", "--construction", "heawood", "--m", "1"});
  CHECK(bad_family.code != 0);

  const auto bad_claim =
      run_cli({"verify", "--group", "z7", "--set", "1,2,4", "--claim", "7,3"});
  CHECK(bad_claim.code == 1);
  CHECK(bad_claim.err.find("v,k,lambda") != std::string::npos);

  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("build") != std::string::npos);
}
