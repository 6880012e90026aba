#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// End-to-end checks of the installed command surface. The binary path comes
// from the build system.

#ifndef CLIQUEALPHA_BIN
#error "CLIQUEALPHA_BIN must point at the cliquealpha executable"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(CLIQUEALPHA_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_petersen() {
  auto p = std::filesystem::temp_directory_path() / "cliquealpha_petersen.col";
  std::ofstream f(p);
  f << "p edge 10 15\n";
  for (int i = 0; i < 5; ++i) {
    f << "e " << i + 1 << ' ' << (i + 1) % 5 + 1 << '\n';
    f << "e " << 5 + i + 1 << ' ' << 5 + (i + 2) % 5 + 1 << '\n';
    f << "e " << i + 1 << ' ' << i + 5 + 1 << '\n';
  }
  return p;
}

const std::string kHeader =
    "kind,n,m,s,t,d_avg,seed,bound_t1,bound_t2,bound_aks,alg_best,"
    "alg_best_size,exact_alpha,runtime_ms";

}  // namespace

TEST_CASE("analyze: petersen text and csv") {
  auto path = write_petersen();
  RunResult text = run("analyze " + path.string());
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("t: 0") != std::string::npos);
  CHECK(text.out.find("exact_alpha: 4") != std::string::npos);

  RunResult csv = run("analyze --csv " + path.string());
  CHECK(csv.exit_code == 0);
  // golden schema line
  CHECK(csv.out.rfind(kHeader + "\n", 0) == 0);
  CHECK(csv.out.find("file,10,15,3,0,3,") != std::string::npos);
}

TEST_CASE("analyze: k10 has 120 triangles and alpha 1") {
  auto p = std::filesystem::temp_directory_path() / "cliquealpha_k10.col";
  {
    std::ofstream f(p);
    f << "p edge 10 45\n";
    for (int u = 1; u <= 10; ++u)
      for (int v = u + 1; v <= 10; ++v) f << "e " << u << ' ' << v << '\n';
  }
  RunResult r = run("analyze " + p.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("t: 120") != std::string::npos);
  CHECK(r.out.find("exact_alpha: 1") != std::string::npos);
}

TEST_CASE("exit codes: usage 2, runtime 1") {
  auto path = write_petersen();
  CHECK(run("analyze --s 11 " + path.string()).exit_code == 2);  // s > n
  CHECK(run("analyze --nonsense " + path.string()).exit_code == 2);
  CHECK(run("analyze /nonexistent/file.col").exit_code == 1);
  CHECK(run("construct --kind lex_blowup --n 100 --t 5").exit_code == 2);  // missing --out
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("--version").exit_code == 0);
}

TEST_CASE("construct writes graph, sidecar, and is reproducible") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "cliquealpha_cli_construct";
  fs::create_directories(dir);
  auto out1 = dir / "a.col";
  auto out2 = dir / "b.col";
  std::string args = "construct --kind clique_plus_trianglefree --n 100 --t 120 --seed 5 --out ";
  CHECK(run(args + out1.string()).exit_code == 0);
  CHECK(run(args + out2.string()).exit_code == 0);

  auto slurp = [](const fs::path& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  CHECK(slurp(out1) == slurp(out2));
  std::string spec1 = slurp(fs::path(out1.string() + ".spec"));
  std::string spec2 = slurp(fs::path(out2.string() + ".spec"));
  CHECK(spec1 == spec2);
  CHECK(spec1.find("kind clique_plus_trianglefree") != std::string::npos);
  CHECK(spec1.find("a 10") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("sweep emits deterministic rows in grid order") {
  std::string args = "sweep --n 40 --s 3 --t 5,40,200 --seeds 2 --seed 9";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind(kHeader + "\n", 0) == 0);
  // two seeds per t value plus the header
  int lines = 0;
  for (char c : a.out)
    if (c == '\n') ++lines;
  CHECK(lines == 7);

  // parallel workers must not change the bytes
  RunResult par = run(args + " --jobs 4");
  CHECK(par.out == a.out);
}

TEST_CASE("sweep: exact alpha trends down in t on the construction family") {
  RunResult r = run("sweep --n 60 --s 3 --t 0,50,200,1000,5000 --seeds 3 --seed 2");
  REQUIRE(r.exit_code == 0);

  // mean exact_alpha per t value, rows in grid order (3 per t)
  std::vector<double> means;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // header
  double acc = 0;
  int k = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    // exact_alpha is the 13th field
    std::string field;
    std::istringstream ls(line);
    for (int i = 0; i < 13; ++i) std::getline(ls, field, ',');
    REQUIRE(!field.empty());
    acc += std::stod(field);
    if (++k == 3) {
      means.push_back(acc / 3.0);
      acc = 0;
      k = 0;
    }
  }
  REQUIRE(means.size() == 5);
  // triangle-free end far above the dense end, nonincreasing within noise
  CHECK(means.front() > means.back() + 5.0);
  for (size_t i = 1; i < means.size(); ++i) CHECK(means[i] <= means[i - 1] + 2.0);
}

TEST_CASE("constants table prints positive residuals") {
  RunResult r = run("constants --s-max 4 --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("s,c_prime_sup,c_prime,c,delta,", 0) == 0);
  CHECK(r.out.find("\n2,,,0.333333,") != std::string::npos);
  RunResult base_only = run("constants --s-max 2");
  CHECK(base_only.exit_code == 0);
  CHECK(base_only.out.find("0.333333") != std::string::npos);
}
