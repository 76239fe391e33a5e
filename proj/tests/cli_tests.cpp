// End-to-end checks of the command-line tool: spawns the binary given as
// argv[1], captures stdout+stderr, and verifies exit codes, output shapes and
// byte-for-byte determinism.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int failures = 0;

void expect(bool cond, const std::string& msg) {
  if (!cond) {
    std::cerr << "FAIL: " << msg << "\n";
    ++failures;
  }
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& cli, const std::string& args) {
  const std::string cmd = "'" + cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "cannot spawn: " << cmd << "\n";
    std::exit(2);
  }
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  {
    auto r = run(cli, "tangent --system B2 --word aba --point a");
    expect(r.exit_code == 0, "tangent exits 0, got " + std::to_string(r.exit_code));
    auto j = nlohmann::json::parse(r.output);
    expect(j["agreement"] == true, "tangent agreement flag");
    expect(j["dimension"] == 3, "tangent dimension");
    expect(j["definition"]["weights"] == nlohmann::json::parse("[[1,0],[0,-1],[-2,-1]]"),
           "tangent weights at s_a(B)");
    expect(j["definition"]["weights"] == j["closed_form"]["weights"], "both computations shown");
  }

  {
    auto r = run(cli, "smooth --system B2 --word aba");
    expect(r.exit_code == 0, "smooth exits 0");
    auto j = nlohmann::json::parse(r.output);
    expect(j["type"] == "B2" && j["w"] == "aba" && j["l"] == 3, "smooth header fields");
    expect(j["rationally_smooth_everywhere"] == true, "smooth verdict");
    expect(j["points"].size() == 6, "smooth point count");
    expect(j["points"][0] == nlohmann::json::parse(R"({"u":"","dim":3,"rs":true,"kl":[1]})"),
           "smooth first point");
  }

  {
    auto r = run(cli, "galleries --system B2 --word aba");
    expect(r.exit_code == 0, "galleries exits 0");
    auto j = nlohmann::json::parse(r.output);
    expect(j["count"] == 8, "galleries count");
    expect(j["fiber_sizes"]["a"] == 2 && j["fiber_sizes"][""] == 2, "fiber sizes");
  }

  {
    auto r = run(cli, "galleries --system B2 --word aba --point a");
    auto j = nlohmann::json::parse(r.output);
    expect(j["count"] == 2, "fiber of a has two galleries");
    int canonical = 0;
    for (const auto& g : j["galleries"]) canonical += g.value("canonical", false) ? 1 : 0;
    expect(canonical == 1, "exactly one canonical gallery in the fiber");
  }

  {
    auto r = run(cli, "galleries --system B2 --word aa");
    expect(r.exit_code == 3, "non-reduced word exits 3, got " + std::to_string(r.exit_code));
    expect(r.output.find("NotReduced") != std::string::npos, "error names NotReduced");
  }

  {
    auto r = run(cli, "tangent --system B2 --word a --point b");
    expect(r.exit_code == 3, "point outside the variety exits 3");
    expect(r.output.find("NotInSchubert") != std::string::npos, "error names NotInSchubert");
  }

  {
    auto r = run(cli, "smooth --system B2 --word ba --parabolic a");
    expect(r.exit_code == 3, "parabolic smoothness verdict exits 3");
    expect(r.output.find("UnsupportedParabolic") != std::string::npos,
           "error names UnsupportedParabolic");
  }

  {
    auto r = run(cli, "roots --system B2");
    expect(r.exit_code == 0, "roots exits 0");
    auto j = nlohmann::json::parse(r.output);
    expect(j["positive_roots"] == nlohmann::json::parse("[[0,1],[1,0],[1,1],[2,1]]"),
           "B2 positive roots");
  }

  {
    auto r = run(cli, "roots --system '[[2,-2],[-1,2]]'");
    expect(r.exit_code == 0, "custom Cartan matrix accepted");
    auto j = nlohmann::json::parse(r.output);
    expect(j["positive_roots"].size() == 4, "custom matrix gives the B2 roots");
  }

  {
    auto r = run(cli, "roots --system '[[2,-2],[-2,2]]'");
    expect(r.exit_code == 3, "affine matrix exits 3");
    expect(r.output.find("NotFiniteType") != std::string::npos, "error names NotFiniteType");
  }

  {
    auto r = run(cli, "roots --system Q9");
    expect(r.exit_code == 2, "unknown preset is a usage error (exit 2)");
  }

  {
    auto r = run(cli, "tangent --system B2 --word aba --bogus-flag");
    expect(r.exit_code == 2, "unknown flag exits 2");
  }

  {
    auto a = run(cli, "graph --system B2 --word aba");
    expect(a.exit_code == 0, "graph exits 0");
    expect(a.output.rfind("graph bs_curves {", 0) == 0, "graph emits DOT");
    expect(a.output.find("phi(1,0)") != std::string::npos, "DOT has fold labels");
    auto b = run(cli, "graph --system B2 --word aba");
    expect(a.output == b.output, "graph output is byte-identical across runs");
  }

  {
    auto a = run(cli, "apartment --system B2 --word aba");
    expect(a.exit_code == 0, "apartment exits 0");
    expect(a.output.rfind("<svg", 0) == 0, "apartment emits SVG");
    auto b = run(cli, "apartment --system B2 --word aba");
    expect(a.output == b.output, "apartment output is byte-identical across runs");
  }

  {
    auto r = run(cli, "apartment --system A3");
    expect(r.exit_code == 3, "rank-3 apartment exits 3");
  }

  {
    const std::string path = "cli_tests_out.json";
    auto direct = run(cli, "tangent --system B2 --word aba --point a");
    auto filed = run(cli, "tangent --system B2 --word aba --point a --out " + path);
    expect(filed.exit_code == 0, "tangent --out exits 0");
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    expect(ss.str() == direct.output, "--out file matches stdout output");
    std::remove(path.c_str());
  }

  {
    auto r = run(cli, "graph --system B2 --word aba --format json");
    expect(r.exit_code == 2, "graph only renders DOT");
  }

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << failures << " failures\n";
  return 1;
}
