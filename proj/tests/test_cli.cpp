#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "pathtoggle/cli.hpp"

using pathtoggle::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  return j;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("orbits command") {
  const auto r = run({"orbits", "-n", "7", "-w", "phi"});
  CHECK(r.code == 0);
  CHECK(r.out.find("orbits: 5") != std::string::npos);
  CHECK(r.out.find("sizes: 2 3 5 10 14") != std::string::npos);

  const auto j = run_json({"orbits", "-n", "10", "-w", "phi"});
  CHECK(j["orbit_count"] == 10);
  CHECK(j["orbits"].size() == 10);

  const auto two = run_json({"orbits", "-n", "2", "-w", "2,1"});
  CHECK(two["orbit_count"] == 1);
  CHECK(two["orbits"][0]["size"] == 3);
}

TEST_CASE("formats carry the same data") {
  const auto j = run_json({"orbits", "-n", "8"});
  const auto csv = lines(run({"orbits", "-n", "8", "--format", "csv"}).out);
  const auto text = run({"orbits", "-n", "8"}).out;
  REQUIRE(csv.size() == j["orbits"].size() + 1);
  for (std::size_t k = 0; k < j["orbits"].size(); ++k) {
    const auto& o = j["orbits"][k];
    std::string sums;
    for (const auto& c : o["column_sums"]) sums += (sums.empty() ? "" : ",") + std::to_string(c.get<long long>());
    const std::string expected = std::to_string(k + 1) + "," + std::to_string(o["size"].get<int>()) + "," +
                                 o["representative"].get<std::string>() + "," +
                                 (o["reversible"].get<bool>() ? "true" : "false") + "," +
                                 std::to_string(o["symmetrical"].get<int>()) + "," + sums;
    CHECK(csv[k + 1] == expected);
    CHECK(text.find(o["representative"].get<std::string>()) != std::string::npos);
    CHECK(text.find(sums) != std::string::npos);
  }
}

TEST_CASE("single orbit board") {
  const auto r = run({"orbits", "-n", "7", "--start", "1010100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("size 10") != std::string::npos);
  const auto csv = lines(run({"orbits", "-n", "7", "--start", "1010100", "--format", "csv"}).out);
  CHECK(csv.size() == 11);
  CHECK(csv[0] == "1,2,3,4,5,6,7");
}

TEST_CASE("homomesy command") {
  auto r = run({"homomesy", "-n", "9", "-w", "phi", "-f", "x3-x7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0-mesic") != std::string::npos);
  r = run({"homomesy", "-n", "9", "-w", "phi", "-f", "2x1+x2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1-mesic") != std::string::npos);
  r = run({"homomesy", "-n", "9", "-w", "phi", "-f", "x1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("not homomesic") != std::string::npos);
  const auto j = run_json({"homomesy", "-n", "8", "-f", "x2-x7", "--samples", "3", "--seed", "5"});
  CHECK(j["results"].size() == 4);
  CHECK(j["all_homomesic"] == true);
  const auto bad = json::parse(run({"homomesy", "-n", "7", "-f", "x1", "--format", "json"}).out);
  CHECK(bad["results"][0]["witnesses"].size() == 2);
}

TEST_CASE("seeded random words are reproducible") {
  const auto a = run({"orbits", "-n", "9", "-w", "random", "--seed", "3", "--format", "json"});
  const auto b = run({"orbits", "-n", "9", "-w", "random", "--seed", "3", "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("snakes command") {
  auto j = run_json({"snakes", "--composition", "221121"});
  CHECK(j["size"] == 15);
  CHECK(j["predicted_size"] == 15);
  CHECK(j["rows"][0] == "1010100101");
  CHECK(j["snakes"].size() == 6);
  CHECK(j["column_sums"] == std::vector<int>{6, 3, 4, 4, 4, 4, 4, 4, 3, 6});

  j = run_json({"snakes", "-n", "7", "--start", "1010100"});
  CHECK(j["snakes"].size() == 4);
  CHECK(j["snakes"][0]["composition"] == "2211");
  CHECK(j["labelled_rows"][0] == "A.A.A..");

  const auto r = run({"snakes", "--composition", "2121"});
  CHECK(r.code == 0);
  CHECK(r.out.find("laid orbit size 5") != std::string::npos);
  CHECK(r.out.find("psi = 2") != std::string::npos);

  const auto table = run({"snakes", "--table", "12"});
  CHECK(table.out.find("11 | 3+2+2+2+2 | 1222212222...12222 | n = 1 mod 9") != std::string::npos);
  const auto classes = run_json({"snakes", "-n", "7", "--classes"});
  CHECK(classes["classes"].size() == 5);
}

TEST_CASE("count command") {
  auto r = run({"count", "--orbits", "2..12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NO") == std::string::npos);
  auto j = run_json({"count", "--necklaces", "9", "--reversible", "10"});
  bool saw_necklace = false, saw_reversible = false;
  for (const auto& row : j["rows"]) {
    CHECK(row["match"] == true);
    if (row["sequence"] == "necklaces") {
      CHECK(row["formula"] == 10);
      saw_necklace = true;
    }
    if (row["sequence"] == "reversible orbits") {
      CHECK(row["formula"] == 8);
      saw_reversible = true;
    }
  }
  CHECK(saw_necklace);
  CHECK(saw_reversible);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--orbits", "9..3"}).code == 2);
}

TEST_CASE("conjugate command") {
  const auto j = run_json({"conjugate", "-n", "7", "-w", "3,4,2,6,7,5,1", "--verify-orbits"});
  CHECK(j["u"] == std::vector<int>{7, 5, 6, 7, 4, 5, 6, 7});
  CHECK(j["conjugates_to_phi"] == true);
  for (const auto& s : j["steps"]) CHECK(s["orbits_correspond"] == true);
  const auto phi = run_json({"conjugate", "-n", "7", "-w", "phi"});
  CHECK(phi["steps"].empty());
  const auto r = run({"conjugate", "-n", "3", "-w", "1,2,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("u^-1 w u = phi on all of I_3: yes") != std::string::npos);
  CHECK(run({"conjugate", "-n", "3", "-w", "1,2"}).code == 2);
}

TEST_CASE("zigzag command") {
  auto r = run({"zigzag", "-n", "7", "--check-eta"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all 34 independent sets") != std::string::npos);
  auto j = run_json({"zigzag", "-n", "6", "--word", "row", "--orbits"});
  CHECK(j["sizes_match_phi"] == true);
  j = run_json({"zigzag", "-n", "5", "--word", "pro", "--empty-orbit"});
  CHECK(j["states"][0] == "00000");
  r = run({"zigzag", "-n", "9", "-w", "row", "--homomesy"});
  CHECK(r.code == 0);
  r = run({"zigzag", "-n", "7", "--show", "0011111"});
  CHECK(r.out.find("eta^-1: 1001010") != std::string::npos);
}

TEST_CASE("bad input exits nonzero with a message") {
  auto r = run({"orbits", "-n", "7", "-w", "1,9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
  r = run({"orbits", "-n", "35"});
  CHECK(r.code == 2);
  r = run({"orbits", "-n", "25", "--max-n", "20"});
  CHECK(r.code == 2);
  r = run({"orbits"});
  CHECK(r.code == 2);
  r = run({"homomesy", "-n", "5", "-f", "x9"});
  CHECK(r.code == 2);
  r = run({"snakes", "--composition", "2131"});
  CHECK(r.code == 2);
  r = run({"orbits", "-n", "5", "--format", "yaml"});
  CHECK(r.code == 2);
  r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(run({"--help"}).code == 0);
}
