#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "simident/graph_io.hpp"
#include "test_support.hpp"

// Exercises the installed command surface end to end: exit codes, file
// round-trips and byte-stable structured output.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("simident_cli_out_" + std::to_string(counter++));
  std::string cmd = std::string(SIMIDENT_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  fs::remove(out);
  return r;
}

fs::path fixture_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "simident_cli_fixtures";
    fs::remove_all(d);
    auto r = run_cli("fixtures example1 --out " + d.string());
    REQUIRE(r.exit_code == 0);
    return d;
  }();
  return dir;
}

std::string fx(const std::string& name) { return (fixture_dir() / name).string(); }

}  // namespace

TEST_CASE("fixtures write parseable assets") {
  for (const auto& name : {"fig1_g1.pdg", "fig1_g2.pdg", "fig2_g1.pdg", "fig2_g2.pdg"}) {
    CAPTURE(name);
    CHECK_NOTHROW(simident::load_graph_file(fx(name)));
  }
  CHECK(simident::load_graph_file(fx("fig1_g1.pdg")) == testsupport::fig1_g1());
  CHECK(simident::load_graph_file(fx("fig2_g2.pdg")) == testsupport::fig2_g2());
  CHECK(fs::file_size(fx("example1.dist")) > 1000);
}

TEST_CASE("identify reports the Example 1 verdict") {
  auto r = run_cli("identify --graphs " + fx("fig1_g1.pdg") + " " + fx("fig1_g2.pdg") +
                   " --x 3 --y 2");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("identifiable") != std::string::npos);
  CHECK(r.stdout_text.find("2a holds") != std::string::npos);
}

TEST_CASE("identify not-determined is still exit 0") {
  auto r = run_cli("identify --graphs " + fx("fig2_g1.pdg") + " " + fx("fig2_g2.pdg") +
                   " --x 2 --y 5");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("not-determined") != std::string::npos);
}

TEST_CASE("rm output re-parses to an equal graph") {
  fs::path out = fs::temp_directory_path() / "simident_rm_roundtrip.pdg";
  auto r = run_cli("rm --graph " + fx("fig2_g1.pdg") + " --x 4 --y 5 --output " + out.string());
  CHECK(r.exit_code == 0);
  auto g = simident::load_graph_file(out.string());
  CHECK(g == testsupport::make_graph({"1", "4", "5"}, {{"1", "5"}, {"4", "5"}}, {}));
  fs::remove(out);
}

TEST_CASE("equiv on the figure-2 RM graphs") {
  fs::path r1 = fs::temp_directory_path() / "simident_rm1.pdg";
  fs::path r2 = fs::temp_directory_path() / "simident_rm2.pdg";
  run_cli("rm --graph " + fx("fig2_g1.pdg") + " --x 4 --y 5 --output " + r1.string());
  run_cli("rm --graph " + fx("fig2_g2.pdg") + " --x 4 --y 5 --output " + r2.string());
  auto r = run_cli("equiv " + r1.string() + " " + r2.string());
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("equivalent") == 0);

  auto neq = run_cli("equiv " + fx("fig1_g1.pdg") + " " + fx("fig1_g2.pdg"));
  CHECK(neq.exit_code == 0);
  CHECK(neq.stdout_text.find("not equivalent") != std::string::npos);
  CHECK(neq.stdout_text.find("witness") != std::string::npos);
  fs::remove(r1);
  fs::remove(r2);
}

TEST_CASE("evaluate prints the exact marginal") {
  auto r = run_cli("evaluate --graphs " + fx("fig1_g1.pdg") + " " + fx("fig1_g2.pdg") +
                   " --distribution " + fx("example1.dist") + " --do 3=0 --y 2");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("1/8") != std::string::npos);
}

TEST_CASE("oracle verifies Example 1 and flags the negative control") {
  auto r = run_cli("oracle --graphs " + fx("fig1_g1.pdg") + " " + fx("fig1_g2.pdg") +
                   " --x 3 --y 2 --distribution " + fx("example1.dist") + " --do 3=5");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("all_agree: true") != std::string::npos);

  fs::path ab = fs::temp_directory_path() / "simident_ab.pdg";
  fs::path ba = fs::temp_directory_path() / "simident_ba.pdg";
  fs::path dist = fs::temp_directory_path() / "simident_corr.dist";
  std::ofstream(ab) << "nodes a b\na -> b\n";
  std::ofstream(ba) << "nodes a b\nb -> a\n";
  std::ofstream(dist) << "var a 2\nvar b 2\ndense:\n2/5 1/10 1/10 2/5\n";
  auto w = run_cli("oracle --graphs " + ab.string() + " " + ba.string() +
                   " --x a --y b --distribution " + dist.string() + " --do a=0");
  CHECK(w.exit_code == 0);
  CHECK(w.stdout_text.find("all_agree: false") != std::string::npos);
  CHECK(w.stdout_text.find("witness") != std::string::npos);

  // Search mode on the same pair finds a counterexample.
  auto s = run_cli("oracle --graphs " + ab.string() + " " + ba.string() +
                   " --x a --y b --trials 20 --seed 9 --arity 2");
  CHECK(s.exit_code == 0);
  CHECK(s.stdout_text.find("counterexample found") != std::string::npos);
  fs::remove(ab);
  fs::remove(ba);
  fs::remove(dist);
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
  CHECK(run_cli("identify --x 3 --y 2").exit_code == 2);  // missing --graphs
  CHECK(run_cli("identify --graphs /nonexistent.pdg --x 3 --y 2").exit_code == 2);
  // x names a node absent from the graphs.
  CHECK(run_cli("identify --graphs " + fx("fig1_g1.pdg") + " " + fx("fig1_g2.pdg") +
                " --x 99 --y 2")
            .exit_code == 2);
  CHECK(run_cli("evaluate --graphs " + fx("fig1_g1.pdg") + " --distribution " +
                fx("example1.dist") + " --do 9=0 --y 2")
            .exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);

  // Domain: evaluating a not-determined multi-graph query.
  fs::path ab = fs::temp_directory_path() / "simident_ab2.pdg";
  fs::path ba = fs::temp_directory_path() / "simident_ba2.pdg";
  fs::path dist = fs::temp_directory_path() / "simident_u.dist";
  std::ofstream(ab) << "nodes a b\na -> b\n";
  std::ofstream(ba) << "nodes a b\nb -> a\n";
  std::ofstream(dist) << "var a 2\nvar b 2\ndense:\n1/4 1/4 1/4 1/4\n";
  auto r = run_cli("evaluate --graphs " + ab.string() + " " + ba.string() + " --distribution " +
                   dist.string() + " --do a=0 --y b");
  CHECK(r.exit_code == 1);
  // Domain: a graph file that parses but is not an SA-MPDAG.
  fs::path bad = fs::temp_directory_path() / "simident_bad.pdg";
  std::ofstream(bad) << "nodes a b c\na -> b\nb -- c\n";
  CHECK(run_cli("extensions --graph " + bad.string()).exit_code == 1);
  fs::remove(ab);
  fs::remove(ba);
  fs::remove(dist);
  fs::remove(bad);
}

TEST_CASE("identical runs produce byte-identical structured output") {
  std::string cmd = "identify --graphs " + fx("fig1_g1.pdg") + " " + fx("fig1_g2.pdg") +
                    " --x 3 --y 2 --format json";
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
  CHECK(a.stdout_text.find("\"fnv1a64\"") != std::string::npos);
  CHECK(a.stdout_text.find("\"version\"") != std::string::npos);

  std::string search = "oracle --graphs " + fx("fig1_g1.pdg") + " " + fx("fig1_g2.pdg") +
                       " --x 1 --y 4 --trials 3 --seed 11 --format json";
  auto s1 = run_cli(search);
  auto s2 = run_cli(search);
  CHECK(s1.exit_code == 0);
  CHECK(s1.stdout_text == s2.stdout_text);
}
