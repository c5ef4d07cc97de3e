#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "oddset/cli.hpp"
#include "oddset/construct.hpp"
#include "oddset/json_io.hpp"
#include "test_support.hpp"

using namespace oddset;
using oddset::testing::q;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("oddset_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("construct") {
  const Run r = run({"construct", "-n", "1"});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["size"] == 2);
  CHECK(doc["verdict"] == true);
  CHECK(doc["set"] == Json::parse(R"({"dim":1,"points":[["0"],["1"]]})"));
  CHECK(run({"construct", "-n", "0"}).code == kExitUsage);
  CHECK(run({"construct", "-n", "21"}).code == kExitUsage);
  CHECK(run({"construct"}).code == kExitUsage);
}

TEST_CASE("construct then verify round trip") {
  TempDir dir;
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const std::string path = dir.file("set" + std::to_string(n) + ".json");
    const Run c = run({"construct", "-n", std::to_string(n), "-o", path});
    REQUIRE(c.code == kExitOk);
    CHECK(point_set_from_json(read_json_file(path)) == build_odd_set(static_cast<std::size_t>(n)));
    const Run v = run({"verify", path, "--threads", "2"});
    CHECK(v.code == kExitOk);
    const Json cert = Json::parse(v.out);
    CHECK(cert["verdict"] == true);
    CHECK(cert["set_size"] == (1 << n));
    CHECK(cert["pairs"].size() == static_cast<std::size_t>((1 << n) * ((1 << n) - 1) / 2));
  }
}

TEST_CASE("verify reports the failing pair") {
  TempDir dir;
  const std::string path = dir.file("bad.json", R"({"dim":1,"points":[["0"],["1"],["2"]]})");
  const Run r = run({"verify", path});
  CHECK(r.code == kExitClaimFailed);
  CHECK(r.err.find("pair (1, 3)") != std::string::npos);
  CHECK(Json::parse(r.out)["verdict"] == false);
  const Run pretty = run({"verify", path, "--pretty"});
  CHECK(pretty.code == kExitClaimFailed);
  CHECK_FALSE(pretty.out.empty());
}

TEST_CASE("malformed input is a usage error") {
  TempDir dir;
  const Run missing = run({"verify", dir.file("nope.json")});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.rfind("oddset verify: ", 0) == 0);
  const Run dup = run({"verify", dir.file("dup.json", R"({"dim":1,"points":[["1"],["2/2"]]})")});
  CHECK(dup.code == kExitUsage);
  CHECK(dup.err.find("coincide") != std::string::npos);
  CHECK(run({"verify", dir.file("junk.json", "{")}).code == kExitUsage);
}

TEST_CASE("audit") {
  TempDir dir;
  const std::string good = dir.file("good.json", to_json(build_odd_set(3)).dump());
  const Run ok = run({"audit", good});
  CHECK(ok.code == kExitOk);
  CHECK(Json::parse(ok.out)["passes"] == true);
  const Run bad = run({"audit", dir.file("bad.json", R"({"dim":1,"points":[["0"],["1"],["2"]]})")});
  CHECK(bad.code == kExitClaimFailed);
  CHECK(bad.err.find("shared by 3 points") != std::string::npos);
  CHECK(run({"audit", dir.file("off.json", R"({"dim":1,"points":[["1/3"]]})")}).code == kExitUsage);
}

TEST_CASE("search") {
  const Run r = run({"search", "-n", "2", "--lattice", "half", "--lo", "0", "--hi", "3"});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["max_size"] == 4);
  CHECK(doc["cap"] == 4);
  CHECK(doc["violation"] == false);
  const Run i = run({"search", "-n", "2", "--lattice", "int", "--lo", "0", "--hi", "6", "--pretty"});
  CHECK(i.code == kExitOk);
  CHECK(i.out.find("within box") != std::string::npos);
  CHECK(run({"search", "-n", "2", "--lattice", "cube", "--lo", "0", "--hi", "3"}).code == kExitUsage);
  CHECK(run({"search", "-n", "1", "--lattice", "int", "--lo", "0", "--hi", "1/2"}).code == kExitUsage);
  CHECK(run({"search", "-n", "1", "--lattice", "int", "--lo", "3", "--hi", "0"}).code == kExitUsage);
}

TEST_CASE("search honours the vertex limit") {
  ::setenv("ODDSET_VERTEX_LIMIT", "10", 1);
  const Run r = run({"search", "-n", "2", "--lattice", "half", "--lo", "0", "--hi", "3"});
  ::unsetenv("ODDSET_VERTEX_LIMIT");
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("49 lattice points") != std::string::npos);
}

TEST_CASE("rationalize and dyadic") {
  TempDir dir;
  const std::string in = dir.file(
      "approx.json", R"({"dim":2,"points":[["1.91421356","0.5"],["1.41421356","1"],["3.41421356","2"],["2.91421356","2.5"]]})");
  const Run r = run({"rationalize", in});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  const PointSet exact = point_set_from_json(doc);
  CHECK(exact.size() == 4);
  CHECK(verify_odd_set(exact).verdict);
  CHECK(doc["distances"].size() == 6);

  const std::string out = dir.file("exact.json");
  const Run w = run({"rationalize", in, "-o", out});
  CHECK(w.code == kExitOk);
  CHECK(point_set_from_json(read_json_file(out)) == exact);

  const Run even = run({"rationalize", dir.file("even.json", R"({"dim":1,"points":[["0"],["2.0000001"]]})")});
  CHECK(even.code == kExitUsage);
  CHECK(even.err.find("pair (1, 2)") != std::string::npos);

  const Run d = run({"dyadic", dir.file("thirds.json", R"({"dim":1,"points":[["1/3"],["4/3"]]})")});
  CHECK(d.code == kExitOk);
  CHECK(Json::parse(d.out)["provenance"]["scale"] == 3);
  CHECK(run({"dyadic", dir.file("even2.json", R"({"dim":1,"points":[["0"],["2"]]})")}).code == kExitUsage);
}

TEST_CASE("flag handling") {
  const Run unknown = run({"construct", "-n", "2", "--bogus"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.rfind("oddset: ", 0) == 0);
  CHECK(std::count(unknown.err.begin(), unknown.err.end(), '\n') == 1);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("construct") != std::string::npos);
}
