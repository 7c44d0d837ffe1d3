#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "omega/omega.hpp"
#include "support.hpp"

using namespace omega;

namespace {

struct run_result {
  int code;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
run_result run_cli(const std::string& args) {
  std::string cmd = std::string(ANTICHAIN_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[512];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

struct temp_dir {
  std::string path;
  temp_dir() {
    char tmpl[] = "/tmp/antichain_cli_XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    path = tmpl;
  }
  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& text) const {
    std::string p = path + "/" + name;
    std::ofstream os(p);
    os << text;
    return p;
  }
};

nbw zeros_only() {
  return support::make_nbw(2, {"0", "1"}, 0, {0}, {{0, 0, 0}, {1, 0, 1}});
}

}  // namespace

TEST_CASE("cli universality verdicts") {
  temp_dir dir;
  auto yes = dir.file("u.aut", to_text(support::total_universal()));
  auto no = dir.file("n.aut", to_text(zeros_only()));

  auto r = run_cli("universal " + yes);
  CHECK(r.code == 0);
  CHECK(r.out == "UNIVERSAL\n");

  r = run_cli("universal " + no);
  CHECK(r.code == 1);
  CHECK(r.out == "NOT_UNIVERSAL\n");

  r = run_cli("--no-early-stop universal " + yes);
  CHECK(r.code == 0);
}

TEST_CASE("cli emptiness verdicts") {
  temp_dir dir;
  nbw mute = support::total_universal();
  mute.accepting = {};
  auto e = dir.file("e.aut", to_text(mute));
  auto ne = dir.file("ne.aut", to_text(support::total_universal()));

  auto r = run_cli("empty " + e);
  CHECK(r.code == 0);
  CHECK(r.out == "EMPTY\n");

  r = run_cli("empty " + ne);
  CHECK(r.code == 1);
  CHECK(r.out == "NONEMPTY\n");

  // Alternating input through the same subcommand.
  abw loop(1, {"0"});
  loop.succ(0, 0) = formula::state(0);
  loop.accepting = {0};
  auto al = dir.file("a.aut", to_text(loop));
  r = run_cli("empty " + al);
  CHECK(r.code == 1);
  CHECK(r.out == "NONEMPTY\n");
}

TEST_CASE("cli inclusion verdicts") {
  temp_dir dir;
  auto big = dir.file("big.aut", to_text(support::total_universal()));
  auto small = dir.file("small.aut", to_text(zeros_only()));

  auto r = run_cli("include " + small + " " + big);
  CHECK(r.code == 0);
  CHECK(r.out == "INCLUDED\n");

  r = run_cli("include " + big + " " + small);
  CHECK(r.code == 1);
  CHECK(r.out == "NOT_INCLUDED\n");
}

TEST_CASE("cli oracle cross-checks") {
  temp_dir dir;
  // Accepting density 1 keeps the explicit complement tiny.
  nbw a = random_nbw({3, 2.0, 1.0, 5});
  auto f = dir.file("a.aut", to_text(a));

  auto r = run_cli("--oracle universal " + f);
  CHECK((r.code == 0 || r.code == 1));
  CHECK(r.out.find("disagreement") == std::string::npos);

  r = run_cli("--oracle empty " + f);
  CHECK((r.code == 0 || r.code == 1));

  auto u = dir.file("u.aut", to_text(support::total_universal()));
  nbw b = random_nbw({2, 1.5, 1.0, 3});
  auto g = dir.file("b.aut", to_text(b));
  r = run_cli("--oracle include " + g + " " + u);
  CHECK(r.code == 0);

  // A wide rank domain pushes the oracle over its cap: exit 2, verdict
  // withheld.
  nbw wide = random_nbw({3, 2.0, 0.34, 1});
  auto w = dir.file("w.aut", to_text(wide));
  r = run_cli("--oracle universal " + w);
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli usage and parse failures exit 2") {
  temp_dir dir;
  auto r = run_cli("");
  CHECK(r.code == 2);
  r = run_cli("frobnicate");
  CHECK(r.code == 2);
  r = run_cli("universal " + dir.path + "/missing.aut");
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);

  auto bad = dir.file("bad.aut", "type: nbw\nalphabet: 0\nstates: 0\n");
  r = run_cli("universal " + bad);
  CHECK(r.code == 2);
  CHECK(r.out.find("line 3") != std::string::npos);

  r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("universal") != std::string::npos);
}

TEST_CASE("cli timeout exits 3") {
  temp_dir dir;
  auto f = dir.file("a.aut", to_text(random_nbw({30, 2.0, 0.5, 0})));
  auto r = run_cli("universal " + f + " --timeout 0");
  CHECK(r.code == 3);
  CHECK(r.out == "TIMEOUT\n");
}

TEST_CASE("cli generate writes reproducible instances") {
  nbw want = random_nbw({3, 2.0, 0.34, 7});
  auto r = run_cli("generate --size 3 --r 2.0 --f 0.34 --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out == to_text(want, {"random nbw: n=3 r=2 f=0.34 seed=7"}));

  temp_dir dir;
  std::string prefix = dir.path + "/g";
  r = run_cli("generate --size 4 --r 1.5 --f 0.5 --seed 10 --count 3 --out " +
              prefix);
  CHECK(r.code == 0);
  for (std::uint64_t seed = 10; seed < 13; ++seed) {
    auto v = parse_automaton_file(prefix + std::to_string(seed) + ".aut");
    REQUIRE(std::holds_alternative<nbw>(v));
    nbw got = std::get<nbw>(v);
    nbw expect = random_nbw({4, 1.5, 0.5, seed});
    CHECK(got.delta == expect.delta);
    CHECK(got.accepting == expect.accepting);
  }
}

TEST_CASE("cli bench writes an appendable csv") {
  temp_dir dir;
  std::string csv = dir.path + "/out.csv";
  std::string args = "bench --sizes 2,3 --r 1.0 --f 0.5 --samples 2 "
                     "--timeout 5 --out " + csv;

  auto r = run_cli(args);
  CHECK(r.code == 0);
  CHECK(r.out.find("n=2 r=1 f=0.5:") != std::string::npos);
  CHECK(r.out.find("n=3 r=1 f=0.5:") != std::string::npos);

  auto read = [&] {
    std::ifstream in(csv);
    std::string line, all;
    int lines = 0;
    while (std::getline(in, line)) {
      all += line + "\n";
      ++lines;
    }
    return std::pair<int, std::string>(lines, all);
  };
  auto [lines1, text1] = read();
  CHECK(lines1 == 5);  // header + 2 points x 2 samples
  CHECK(text1.rfind(csv_header() + "\n", 0) == 0);

  r = run_cli(args);
  CHECK(r.code == 0);
  auto [lines2, text2] = read();
  CHECK(lines2 == 9);  // appended without a second header
  CHECK(text2.find(csv_header(), 1) == std::string::npos);

  r = run_cli("bench --sizes 2 --r 9.0 --f 0.5 --samples 1 --timeout 5 "
              "--out " + csv);
  CHECK(r.code == 2);
  CHECK(r.out.find("bad grid point") != std::string::npos);
}
