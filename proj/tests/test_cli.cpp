#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperop/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPEROP_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("hyperop_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    write("d2.cx", "1 2 3\n");
    write("p3.cx", "1 2\n2 3\n");
    write("half.json", R"({"mode":"per-dim","p":[0.5,0.5,0.5]})");
    write("sparse.json", R"({"mode":"per-dim","p":[1,0.3,0.2]})");
  }
  ~Workdir() { fs::remove_all(dir); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("verify exit codes") {
  Workdir w;
  const auto ok = run("verify --suite identities --ambient " + w("d2.cx") + " --exhaustive");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("SUITE identities PASS") != std::string::npos);
  const auto red = run("verify --suite transforms");
  CHECK(red.code == 1);
  CHECK(red.out.find("SUITE transforms FAIL") != std::string::npos);
  CHECK(run("verify --suite nonsense").code == 2);
}

TEST_CASE("bad input exits with 2") {
  Workdir w;
  w.write("bad.cx", "1 2\nx 3\n");
  const auto r = run("gen-hyper --ambient " + w("bad.cx") + " --prob " + w("half.json") + " --seed 1");
  CHECK(r.code == 2);
  CHECK(r.out.find("position 2") != std::string::npos);
  CHECK(run("gen-hyper --ambient " + w("d2.cx") + " --prob " + w("half.json")).code == 2);
  CHECK(run("gen-hyper --ambient " + w("missing.cx") + " --prob " + w("half.json") + " --seed 1").code == 2);
  CHECK(run("push --ambient " + w("d2.cx") + " --prob " + w("half.json") + " --expr 'Delta.(' --exact").code == 2);
  CHECK(run("sparse --n 5 --r 2 --algorithm 1 --prob " + w("half.json") + " --seed 1").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("sampling is deterministic") {
  Workdir w;
  const std::string base = "gen-complex --ambient " + w("d2.cx") + " --prob " + w("half.json") + " --samples 50 --seed 17";
  const auto a = run(base + " --streams 1"), b = run(base + " --streams 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run(base + "8").out);
  CHECK(a.out.find("# sample 49") != std::string::npos);
  const auto s1 = run("stats --r 2 --c 0.5 --alpha 1 --n 10 20 --samples 30 --seed 2");
  CHECK(s1.out == run("stats --r 2 --c 0.5 --alpha 1 --n 10 20 --samples 30 --seed 2 --streams 2").out);
  CHECK(s1.out.rfind("n,p1,samples", 0) == 0);
}

TEST_CASE("files round-trip") {
  Workdir w;
  CHECK(run("gen-hyper --ambient " + w("p3.cx") + " --prob " + w("half.json") + " --seed 5 --out " + w("h.txt")).code == 0);
  const std::string text = hyperop::readTextFile(w("h.txt"));
  CHECK(text.rfind("# sample 0\n", 0) == 0);
  const auto L = hyperop::readComplexFile(w("p3.cx"));
  CHECK(hyperop::formatComplex(*L) == "1 2\n2 3\n");
  w.write("one.hg", text.substr(text.find('\n') + 1));
  const auto h = hyperop::readHypergraphFile(w("one.hg"), L);
  CHECK(hyperop::parseHypergraph(hyperop::formatHypergraph(h), L) == h);
  CHECK_FALSE(fs::exists(w("h.txt.tmp")));
}

TEST_CASE("figure files feed the powers command") {
  Workdir w;
  const auto f = run("figure1 --m 6 --out " + w("fig"));
  CHECK(f.code == 0);
  CHECK(f.out.find("H1.hg r=2 t=1") != std::string::npos);
  CHECK(f.out.find("H2.hg r=2 t=2") != std::string::npos);
  CHECK(f.out.find("H3.hg r=1 t=2") != std::string::npos);
  const auto p = run("powers --file " + w("fig/H3.hg"));
  CHECK(p.code == 0);
  CHECK(p.out == "r=1 t=2\n");
  CHECK(run("powers --file " + w("fig/H1.hg") + " --ambient " + w("fig/L.cx")).out == "r=2 t=1\n");
}

TEST_CASE("push and normalize") {
  Workdir w;
  const auto e = run("push --ambient " + w("d2.cx") + " --prob " + w("half.json") + " --model phyper --expr gamma --exact");
  CHECK(e.code == 0);
  CHECK(e.out.find("TV-to-closed-form 0\n") != std::string::npos);
  const auto d = run("push --ambient " + w("d2.cx") + " --prob " + w("half.json") + " --model phyper --expr Delta --exact");
  CHECK(d.out.find("marginal-error 0\n") != std::string::npos);
  CHECK(d.out.find("TV-to-closed-form 0.346") != std::string::npos);
  const auto mc = run("push --ambient " + w("d2.cx") + " --prob " + w("half.json") +
                      " --model pcomplex --expr 'Ext' --samples 200 --seed 4");
  CHECK(mc.code == 0);
  const auto n = run("normalize --expr '(Delta.gamma.Delta.gamma)^2' --check");
  CHECK(n.code == 0);
  CHECK(n.out.rfind("Delta.gamma.Delta.gamma\n", 0) == 0);
  CHECK(n.out.find("extensional PASS") != std::string::npos);
}

TEST_CASE("sparse generation") {
  Workdir w;
  const std::string base = "sparse --n 30 --r 2 --prob " + w("sparse.json") + " --seed 8";
  const auto a1 = run(base + " --algorithm 1"), a2 = run(base + " --algorithm 2");
  CHECK(a1.code == 0);
  CHECK(a2.code == 0);
  CHECK(a1.out == run(base + " --algorithm 1").out);
  CHECK(a1.out != a2.out);
  CHECK(run(base + " --algorithm 3").code == 2);
}
