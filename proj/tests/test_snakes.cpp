#include <doctest.h>

#include <map>

#include "pathtoggle/cyclic.hpp"
#include "pathtoggle/snakes.hpp"
#include "support.hpp"

using namespace pathtoggle;

namespace {

SnakeComposition C(const char* s) { return SnakeComposition::parse(s); }

OrbitBoard board_from(const char* start) {
  const auto s = IndependentSet::parse(start);
  const auto o = orbit_of(s, ToggleWord::phi(s.n()));
  return OrbitBoard(o, static_cast<long long>(*o.index_of(s)));
}

std::vector<std::string> compositions_of(const std::vector<Snake>& snakes) {
  std::vector<std::string> out;
  for (const auto& s : snakes) out.push_back(s.composition.to_string());
  return out;
}

// Compositions of m into 1s and 2s, every one of them, as strings.
std::vector<std::string> all_compositions(int m) {
  if (m == 0) return {""};
  std::vector<std::string> out;
  for (auto& tail : all_compositions(m - 1)) out.push_back("1" + tail);
  if (m >= 2) {
    for (auto& tail : all_compositions(m - 2)) out.push_back("2" + tail);
  }
  return out;
}

std::string least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t r = 1; r < s.size(); ++r) best = std::min(best, s.substr(r) + s.substr(0, r));
  return best;
}

}  // namespace

TEST_CASE("composition basics") {
  const auto c = C("221121");
  CHECK(c.sum() == 9);
  CHECK(c.ambient_n() == 10);
  CHECK(c.n1() == 3);
  CHECK(c.n2() == 3);
  CHECK(c.psi() == 1);
  CHECK(C("2121").psi() == 2);
  CHECK(C("21221").is_aperiodic());
  CHECK(C("22122212").psi() == 2);
  CHECK(C("222").psi() == 3);
  CHECK(C("12").reversed() == C("21"));
  CHECK_THROWS_AS(C("1302"), std::invalid_argument);
  CHECK_THROWS_AS(C(""), std::invalid_argument);
  CHECK_THROWS_AS(SnakeComposition({1, 3}), std::domain_error);
  CHECK_THROWS_AS(SnakeComposition(std::vector<int>{}), std::domain_error);
}

TEST_CASE("successor snakes") {
  CHECK(next_composition(C("221121")) == C("211212"));
  CHECK(next_composition(C("1111")) == C("1111"));
  CHECK(next_composition(C("12")) == C("21"));
  CHECK(next_start_offset(C("1122")) == 3);
  CHECK(next_start_offset(C("221121")) == 2);
  CHECK(next_start_offset(C("2")) == 2);
}

TEST_CASE("decomposing the worked boards") {
  const auto seven = snake_decompose(board_from("1010100"));
  CHECK(compositions_of(seven) == std::vector<std::string>{"2211", "2112", "1122", "1221"});
  for (const auto& s : seven) {
    CHECK(s.cells.front().column == 1);
    CHECK(s.cells.back().column == 7);
  }
  CHECK(seven[0].cells == std::vector<BoardCell>{{0, 1}, {0, 3}, {0, 5}, {1, 6}, {2, 7}});

  const auto ten = snake_decompose(board_from("1010100101"));
  CHECK(compositions_of(ten) ==
        std::vector<std::string>{"221121", "211212", "112122", "121221", "212211", "122112"});
  std::vector<long long> starts;
  for (const auto& s : ten) starts.push_back(s.start_row());
  CHECK(starts == std::vector<long long>{0, 2, 4, 7, 10, 12});

  const auto pair = snake_decompose(OrbitBoard(orbit_of(IndependentSet::empty(9), ToggleWord::phi(9))));
  CHECK(compositions_of(pair) == std::vector<std::string>{"2222"});
}

TEST_CASE("decomposition rejects boards that are not phi-orbits") {
  const auto w = ToggleWord::parse(7, "3,4,2,6,7,5,1");
  CHECK_THROWS_AS(snake_decompose(OrbitBoard(orbit_of(IndependentSet::parse("1010010"), w))),
                  std::domain_error);
}

TEST_CASE("laying snakes rebuilds the orbit") {
  const auto o = orbit_from_composition(C("221121"));
  CHECK(o.size() == 15);
  CHECK(o.contains(IndependentSet::parse("1010100101")));
  CHECK(lay_snakes(C("221121")).front() == IndependentSet::parse("1010100101"));
  CHECK(orbit_from_composition(C("2121")).size() == 5);
  const auto two = orbit_from_composition(C("2"));
  CHECK(two.size() == 2);
  CHECK(two.contains(IndependentSet::empty(3)));
  CHECK(orbit_size(C("221121")) == 15);
  CHECK(orbit_size(C("2121")) == 5);
  CHECK(orbit_size(C("11111")) == 3);
}

TEST_CASE("cyclic classes") {
  for (const char* s : {"21121", "11212", "12121", "21211", "12112"}) {
    CHECK(composition_class(C(s)) == C("11212"));
  }
  CHECK(composition_class(C("22")) == C("22"));
  CHECK(composition_class(C("121")) == composition_class(C("112")));
  CHECK(class_is_reversible(C("2211")));
  CHECK_FALSE(class_is_reversible(C("221121")));
  CHECK(class_is_reversible(C("22")));
}

TEST_CASE("composition classes agree with a string enumeration") {
  for (int m = 1; m <= 16; ++m) {
    std::set<std::string> expected;
    for (const auto& s : all_compositions(m)) expected.insert(least_rotation(s));
    std::vector<std::string> got;
    for (const auto& c : composition_classes(m)) got.push_back(c.to_string());
    CHECK(got == std::vector<std::string>(expected.begin(), expected.end()));
  }
}

TEST_CASE("round trip and size formula for every class") {
  for (int n = 2; n <= 14; ++n) {
    const auto phi_orbits = all_orbits(n, ToggleWord::phi(n));
    const auto classes = composition_classes(n - 1);
    CHECK(classes.size() == phi_orbits.size());
    std::set<std::uint64_t> reps;
    for (const auto& c : classes) {
      const auto o = orbit_from_composition(c);
      CHECK(static_cast<long long>(o.size()) == orbit_size(c));
      for (const auto& s : snake_decompose(OrbitBoard(o))) {
        CHECK(cyclic::are_rotations(s.composition.parts(), c.parts()));
      }
      reps.insert(o.representative().bits());
    }
    // One class per orbit: distinct classes land on distinct orbits.
    CHECK(reps.size() == phi_orbits.size());
    std::vector<long long> actual;
    for (const auto& o : phi_orbits) actual.push_back(static_cast<long long>(o.size()));
    std::sort(actual.begin(), actual.end());
    CHECK(orbit_sizes_for_n(n) == actual);
  }
  CHECK(orbit_sizes_for_n(2) == std::vector<long long>{3});
  CHECK(orbit_sizes_for_n(3) == std::vector<long long>{2, 3});
  CHECK(orbit_sizes_for_n(7) == std::vector<long long>{2, 3, 5, 10, 14});
}

TEST_CASE("mod 4 congruences") {
  for (int n = 2; n <= 18; ++n) {
    for (const auto& c : composition_classes(n - 1)) {
      const long long raw = 3LL * c.n1() + 2LL * c.n2();
      CHECK(raw <= 3LL * (n - 1));
      CHECK(((raw - (1 - n)) % 4 + 4) % 4 == 0);
      CHECK(raw % orbit_size(c) == 0);
      if (c.is_aperiodic()) CHECK(((orbit_size(c) - (1 - n)) % 4 + 4) % 4 == 0);
    }
  }
}

TEST_CASE("size table") {
  auto summary = [](int m) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& r : sizes_table(m)) out.emplace_back(r.class_string(), r.modulus);
    return out;
  };
  using Rows = std::vector<std::pair<std::string, int>>;
  CHECK(summary(2) == Rows{{"2", 2}});
  CHECK(summary(3) == Rows{{"3", 1}});
  CHECK(summary(4).empty());
  CHECK(summary(5) == Rows{{"3+2", 3}});
  CHECK(summary(6).empty());
  CHECK(summary(7) == Rows{{"3+2+2", 5}});
  CHECK(summary(8) == Rows{{"3+3+2", 4}});
  CHECK(summary(9) == Rows{{"3+2+2+2", 7}});
  CHECK(summary(10) == Rows{{"3+3+2+2", 6}});
  CHECK(summary(11) == Rows{{"3+3+3+2", 5}, {"3+2+2+2+2", 9}});
  CHECK(summary(12) == Rows{{"3+2+3+2+2", 8}, {"3+3+2+2+2", 8}});
  CHECK(sizes_table(11)[1].snake_period == C("12222"));
  CHECK(sizes_table(3)[0].residue_string() == "all n");
  CHECK(sizes_table(7)[0].residue_string() == "n = 1 mod 5");
  const auto text = render_sizes_table(12);
  CHECK(text.find("4 | none | none | none") != std::string::npos);
  CHECK(text.find("12 | 3+2+3+2+2 | 1212212122...12122 | n = 1 mod 8") != std::string::npos);
}

TEST_CASE("predicted orbit counts match the partition") {
  for (int n = 2; n <= 16; ++n) {
    std::map<long long, int> counts;
    for (const auto& o : all_orbits(n, ToggleWord::phi(n))) ++counts[static_cast<long long>(o.size())];
    for (int m = 2; m <= 14; ++m) CHECK(predicted_orbit_count(m, n) == counts[m]);
  }
}

TEST_CASE("empty set orbit for even n") {
  for (int n = 2; n <= 18; n += 2) {
    const auto o = orbit_of(IndependentSet::empty(n), ToggleWord::phi(n));
    CHECK(o.size() == static_cast<std::size_t>(n + 1));
    std::vector<int> expected(static_cast<std::size_t>((n - 2) / 2), 2);
    expected.push_back(1);
    const auto snakes = snake_decompose(OrbitBoard(o));
    REQUIRE_FALSE(snakes.empty());
    CHECK(composition_class(snakes[0].composition) == composition_class(SnakeComposition(expected)));
  }
}
