#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("pa_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run pa(const std::string& args, const std::string& env = "") {
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" PA_BINARY "\" " + args + " > \"" + out.string() +
                          "\" 2> \"" + err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string path(const std::string& name) { return (work_dir() / name).string(); }

struct Cleanup {
  fs::path dir = work_dir();
  ~Cleanup() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
} cleanup;

}  // namespace

TEST_CASE("generate writes the H-representation") {
  REQUIRE(pa("generate --n 2 --hrep " + path("out.ine")).status == 0);
  const std::string ine = slurp(path("out.ine"));
  std::istringstream in(ine);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == 4 + 13 + 1);
  CHECK(lines[0] == "H-representation");
  CHECK(lines[1] == "linearity 1 1");
  CHECK(lines[3] == "13 4 rational");
  CHECK(lines[4] == "-27 1 1 1");
  CHECK(lines.back() == "end");
}

TEST_CASE("generate writes the V-representation") {
  REQUIRE(pa("generate --n 1 --vrep " + path("v1.json")).status == 0);
  const Json v1 = Json::parse(slurp(path("v1.json")));
  REQUIRE(v1["vertices"].size() == 2);
  std::set<std::vector<std::string>> coords;
  for (const auto& r : v1["vertices"]) coords.insert(r["coordinates"].get<std::vector<std::string>>());
  CHECK(coords == std::set<std::vector<std::string>>{{"6", "3"}, {"3", "6"}});

  REQUIRE(pa("generate --n 3 --vrep " + path("v3.json")).status == 0);
  const Json v3 = Json::parse(slurp(path("v3.json")));
  REQUIRE(v3["vertices"].size() == 120);
  for (const auto& r : v3["vertices"]) CHECK(r["bracketing"].is_string());

  const Run both = pa("generate --n 2 --hrep - ");
  CHECK(both.status == 0);
  CHECK(both.out.rfind("H-representation\n", 0) == 0);
}

TEST_CASE("generate is byte-identical across runs") {
  REQUIRE(pa("generate --n 3 --hrep " + path("a.ine") + " --vrep " + path("a.json")).status == 0);
  REQUIRE(pa("generate --n 3 --hrep " + path("b.ine") + " --vrep " + path("b.json")).status == 0);
  CHECK(slurp(path("a.ine")) == slurp(path("b.ine")));
  CHECK(slurp(path("a.json")) == slurp(path("b.json")));
}

TEST_CASE("check") {
  const Run r3 = pa("check --n 3");
  REQUIRE(r3.status == 0);
  const Json j = Json::parse(r3.out);
  CHECK(j["ok"] == true);
  CHECK(j["f_vector"] == Json::array({120, 180, 62}));

  const auto start = std::chrono::steady_clock::now();
  const Run r4 = pa("check --n 4 --report " + path("r4.json"));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r4.status == 0);
  CHECK(seconds < 60.0);
  CHECK(Json::parse(slurp(path("r4.json")))["f_vector"] == Json::array({1680, 3360, 2020, 340}));

  const Run bad = pa("check --n 3 --perturb");
  CHECK(bad.status == 1);
  const Json jb = Json::parse(bad.out);
  CHECK(jb["ok"] == false);
  bool some_failure = false;
  for (const auto& c : jb["checks"]) some_failure = some_failure || !c["failures"].empty();
  CHECK(some_failure);
}

TEST_CASE("faces, graph, bracketing and export") {
  const Run f = pa("faces --n 3 --dim 2 --classify");
  REQUIRE(f.status == 0);
  const Json census = Json::parse(f.out)["census"];
  CHECK(census["pentagon"] == 24);
  CHECK(census["quad8"] == 24);
  CHECK(census["octagon"] == 6);
  CHECK(census["dodecagon"] == 8);
  CHECK(census["quad1"] == 0);
  CHECK(census["quad4"] == 0);

  REQUIRE(pa("graph --n 2 --dot " + path("g.dot")).status == 0);
  const std::string dot = slurp(path("g.dot"));
  std::size_t edges = 0;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 12);
  CHECK(dot.find("kind=sigma") != std::string::npos);
  CHECK(dot.find("kind=alpha") != std::string::npos);

  const Run b = pa("bracketing --n 3 --parse \"((2*3)*(0*1))\"");
  REQUIRE(b.status == 0);
  const Json rec = Json::parse(b.out);
  CHECK(rec["coordinates"].size() == 4);
  bool pentagon = false;
  for (const auto& t : rec["tight_facets"]) pentagon = pentagon || t["diagram"] == "pentagon";
  CHECK(pentagon);

  REQUIRE(pa("export --n 3 --off " + path("pa3.off")).status == 0);
  CHECK(slurp(path("pa3.off")).rfind("OFF\n120 62 180\n", 0) == 0);
}

TEST_CASE("usage and resource errors exit 2") {
  CHECK(pa("").status == 2);
  CHECK(pa("generate").status == 2);
  CHECK(pa("generate --n 0 --hrep -").status == 2);
  CHECK(pa("generate --n 2").status == 2);
  CHECK(pa("frobnicate --n 2").status == 2);
  CHECK(pa("export --n 2 --off " + path("x.off")).status == 2);
  CHECK(pa("faces --n 3 --dim 1 --classify").status == 2);
  CHECK(pa("generate --n 2 --hrep " + path("missing/dir/x.ine")).status == 2);

  const Run repeated = pa("bracketing --n 3 --parse \"((2*3)*(0*0))\"");
  CHECK(repeated.status == 2);
  CHECK(repeated.err.find("10") != std::string::npos);
  CHECK(pa("bracketing --n 3 --parse \"(2*3*0*1)\"").status == 2);
  CHECK(pa("bracketing --n 3 --parse \"((2*3)*(0*1)\"").status == 2);
  CHECK(pa("bracketing --n 3 --parse \"((2*3)*0)\"").status == 2);

  CHECK(pa("generate --n 7 --hrep -").status == 2);
  CHECK(pa("generate --n 7 --hrep " + path("n7.ine"), "PA_MAX_N=7").status == 0);
  CHECK(pa("generate --n 7 --hrep " + path("n7.ine") + " --max-n 7").status == 0);
}

TEST_CASE("help exits 0") { CHECK(pa("--help").status == 0); }
