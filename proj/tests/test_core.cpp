#include <doctest.h>

#include <random>

#include "pathtoggle/orientation.hpp"
#include "pathtoggle/statistic.hpp"
#include "pathtoggle/toggle_word.hpp"
#include "support.hpp"

using namespace pathtoggle;

namespace {

IndependentSet S(const char* s) { return IndependentSet::parse(s); }

}  // namespace

TEST_CASE("independent set parsing and bit layout") {
  const auto s = S("1010100");
  CHECK(s.n() == 7);
  CHECK(s.to_string() == "1010100");
  CHECK(s.vertices() == std::vector<int>{1, 3, 5});
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK_FALSE(s.contains(8));
  CHECK(s.cardinality() == 3);
  CHECK_FALSE(S("10") < S("01"));
  CHECK(S("01") < S("10"));
  CHECK_THROWS_AS(S("0110"), std::invalid_argument);
  CHECK_THROWS_AS(S("01x0"), std::invalid_argument);
  CHECK_THROWS_AS(IndependentSet::from_bits(3, 0b011), std::domain_error);
  CHECK_THROWS_AS(IndependentSet::from_bits(3, 0b1000), std::domain_error);
  CHECK(IndependentSet::from_vertices(5, {2, 5}) == S("01001"));
}

TEST_CASE("toggle follows the three cases") {
  CHECK(toggle(S("10010"), 1) == S("00010"));
  CHECK(toggle(S("00000"), 3) == S("00100"));
  CHECK(toggle(S("01000"), 2) == S("00000"));
  CHECK(toggle(S("01000"), 1) == S("01000"));
  CHECK_THROWS_AS(toggle(S("01000"), 0), std::domain_error);
  CHECK_THROWS_AS(toggle(S("01000"), 6), std::domain_error);
}

TEST_CASE("toggles are involutions and agree with the string reference") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& str : ref::no11_strings(n)) {
      const auto s = IndependentSet::parse(str);
      for (int i = 1; i <= n; ++i) {
        CHECK(toggle(toggle(s, i), i) == s);
        CHECK(toggle(s, i).to_string() == ref::toggle(str, i));
      }
    }
  }
}

TEST_CASE("toggles commute exactly when not adjacent") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& s : enumerate_independent_sets(n)) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (std::abs(i - j) != 1) CHECK(toggle(toggle(s, i), j) == toggle(toggle(s, j), i));
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      const auto e = IndependentSet::empty(n);
      CHECK(toggle(toggle(e, i), i + 1) == IndependentSet::from_vertices(n, {i}));
      CHECK(toggle(toggle(e, i + 1), i) == IndependentSet::from_vertices(n, {i + 1}));
    }
  }
}

TEST_CASE("words apply right to left") {
  CHECK(apply_word(S("10010"), ToggleWord::phi(5)) == S("01001"));
  CHECK(apply_word(S("1010100"), ToggleWord::phi(7)) == S("0000010"));
  CHECK(apply_word(S("10010"), ToggleWord(5, {})) == S("10010"));
  // t1 t2 on 00: t2 first gives 01, then t1 is blocked.
  CHECK(apply_word(S("00"), ToggleWord(2, {1, 2})) == S("01"));
  for (int n = 1; n <= 8; ++n) {
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> letters;
      for (int k = 0; k < 2 * n; ++k) letters.push_back(static_cast<int>(rng() % n) + 1);
      const ToggleWord w(n, letters);
      for (const auto& str : ref::no11_strings(n)) {
        CHECK(apply_word(IndependentSet::parse(str), w).to_string() == ref::apply(str, letters));
      }
    }
  }
}

TEST_CASE("toggle word parsing and algebra") {
  const auto w = ToggleWord::parse(7, "3,4,2,6,7,5,1");
  CHECK(w.letters() == std::vector<int>{3, 4, 2, 6, 7, 5, 1});
  CHECK(w.to_string() == "t3 t4 t2 t6 t7 t5 t1");
  CHECK(w.to_list() == "3,4,2,6,7,5,1");
  CHECK(ToggleWord::parse(7, w.to_list()) == w);
  CHECK(ToggleWord::parse(4, " 4, 3 ,2,1 ") == ToggleWord::phi(4));
  CHECK(ToggleWord::parse(4, "phi") == ToggleWord::phi(4));
  CHECK(ToggleWord::parse(4, "").empty());
  CHECK(ToggleWord(3, {}).to_string() == "id");
  CHECK_THROWS_AS(ToggleWord::parse(4, "1,5"), std::domain_error);
  CHECK_THROWS_AS(ToggleWord::parse(4, "1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(ToggleWord::parse(4, "1,a"), std::invalid_argument);
  CHECK(ToggleWord::phi(4).inverse() == ToggleWord::phi_inverse(4));
  CHECK((ToggleWord(3, {1}) * ToggleWord(3, {2, 3})).letters() == std::vector<int>{1, 2, 3});
  for (const auto& s : enumerate_independent_sets(6)) {
    CHECK(apply_word(apply_word(s, ToggleWord::phi(6)), ToggleWord::phi_inverse(6)) == s);
  }
  CHECK(semantically_equal(ToggleWord(4, {1, 3}), ToggleWord(4, {3, 1})));
  CHECK_FALSE(semantically_equal(ToggleWord(4, {1, 2}), ToggleWord(4, {2, 1})));
}

TEST_CASE("coxeter words are permutations") {
  const auto w = CoxeterWord::parse(7, "3,4,2,6,7,5,1");
  CHECK(w.position_of(3) == 0);
  CHECK(w.position_of(1) == 6);
  CHECK_THROWS_AS(CoxeterWord::parse(3, "1,2"), std::domain_error);
  CHECK_THROWS_AS(CoxeterWord::parse(3, "1,2,2"), std::domain_error);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto r = random_coxeter_word(9, rng);
    auto letters = r.letters();
    std::sort(letters.begin(), letters.end());
    CHECK(letters == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  }
}

TEST_CASE("reverse and symmetry") {
  CHECK(reverse(S("101000010")) == S("010000101"));
  CHECK(reverse(S("010010")) == S("010010"));
  CHECK(reverse(S("00000")) == S("00000"));
  CHECK(is_symmetrical(S("010010")));
  CHECK_FALSE(is_symmetrical(S("10010")));
  CHECK(is_symmetrical(S("0000")));
  for (int n = 1; n <= 10; ++n) {
    for (const auto& s : enumerate_independent_sets(n)) {
      CHECK(reverse(reverse(s)) == s);
      CHECK(apply_word(reverse(s), ToggleWord::phi(n)) ==
            reverse(apply_word(s, ToggleWord::phi_inverse(n))));
    }
  }
}

TEST_CASE("enumeration is lexicographic with Fibonacci size") {
  const auto two = enumerate_independent_sets(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == S("00"));
  CHECK(two[1] == S("01"));
  CHECK(two[2] == S("10"));
  CHECK(enumerate_independent_sets(7).size() == 34);
  CHECK(enumerate_independent_sets(10).size() == ref::no11_strings(10).size());
  std::uint64_t a = 1, b = 2;  // F(2), F(3)
  for (int n = 1; n <= 25; ++n) {
    const auto sets = enumerate_independent_sets(n);
    CHECK(sets.size() == b);
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    std::tie(a, b) = std::pair{b, a + b};
  }
  const auto ten = enumerate_independent_sets(10);
  for (std::size_t k = 0; k < ten.size(); ++k) CHECK(lex_rank(ten[k]) == k);
  CHECK_THROWS_AS(enumerate_independent_sets(31), CapacityError);
  CHECK_THROWS_AS(enumerate_independent_sets(40), CapacityError);
  CHECK(enumerate_independent_sets(20, 20).size() == 17711);
}

TEST_CASE("orientation of a coxeter word") {
  const auto o = coxeter_to_orientation(CoxeterWord::parse(7, "3,4,2,6,7,5,1"));
  CHECK(o.to_string() == "1<-2<-3->4->5<-6->7");
  CHECK(o == Orientation::parse("1<-2<-3->4->5<-6->7"));
  CHECK(o.sources() == std::vector<int>{3, 6});
  CHECK(o.sinks() == std::vector<int>{1, 5, 7});
  CHECK(coxeter_to_orientation(CoxeterWord::phi(6)) == Orientation::uniform(6, EdgeDirection::TowardLower));
  CHECK(coxeter_to_orientation(CoxeterWord::parse(6, "1,2,3,4,5,6")) ==
        Orientation::uniform(6, EdgeDirection::TowardHigher));
  CHECK_THROWS_AS(Orientation::parse("1<-3"), std::invalid_argument);
  CHECK_THROWS_AS(Orientation::parse("1<>2"), std::invalid_argument);
  CHECK(o.flip_vertex(5).to_string() == "1<-2<-3->4<-5->6->7");
}

TEST_CASE("canonical word of an orientation") {
  CHECK(orientation_to_coxeter(Orientation::uniform(5, EdgeDirection::TowardLower)) == CoxeterWord::phi(5));
  CHECK(orientation_to_coxeter(Orientation::parse("1->2")).letters() == std::vector<int>{1, 2});
  const auto w = CoxeterWord::parse(7, "3,4,2,6,7,5,1");
  CHECK(semantically_equal(orientation_to_coxeter(coxeter_to_orientation(w)).word(), w.word()));

  // Round trip over every orientation of small paths.
  for (int n = 1; n <= 9; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<EdgeDirection> dirs;
      for (int i = 0; i < n - 1; ++i) {
        dirs.push_back(mask >> i & 1 ? EdgeDirection::TowardHigher : EdgeDirection::TowardLower);
      }
      const Orientation o(n, dirs);
      CHECK(coxeter_to_orientation(orientation_to_coxeter(o)) == o);
    }
  }
}

TEST_CASE("orientation is invariant under commuting swaps and determines the map") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto letters = random_coxeter_word(n, rng).letters();
    const CoxeterWord w{ToggleWord(n, letters)};
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      if (std::abs(letters[k] - letters[k + 1]) == 1) continue;
      auto swapped = letters;
      std::swap(swapped[k], swapped[k + 1]);
      const CoxeterWord v{ToggleWord(n, swapped)};
      CHECK(coxeter_to_orientation(v) == coxeter_to_orientation(w));
      CHECK(semantically_equal(v.word(), w.word()));
    }
  }
}

TEST_CASE("element orders") {
  for (int n = 3; n <= 9; ++n) {
    for (int i = 1; i < n; ++i) CHECK(element_order(ToggleWord(n, {i, i + 1})) == 6);
    for (int i = 1; i + 2 <= n; ++i) CHECK(element_order(ToggleWord(n, {i, i + 2})) == 2);
  }
  CHECK(element_order(ToggleWord(2, {1, 2})) == 3);
  CHECK(element_order(ToggleWord(4, {})) == 1);
  CHECK(element_order(ToggleWord::phi(7)) == 210);  // lcm(2,3,5,10,14)
}

TEST_CASE("statistic grammar") {
  const auto f = Statistic::parse(7, "2x1+x2-1/2x3");
  CHECK(f.coefficient(1) == 2);
  CHECK(f.coefficient(2) == 1);
  CHECK(f.coefficient(3) == Rational(-1, 2));
  CHECK(f.coefficient(4) == 0);
  CHECK(Statistic::parse(7, " 2 x1 + x2 - 1/2 x3 ") == f);
  CHECK(Statistic::parse(7, "2*x1+x2-1/2*x3") == f);
  CHECK(Statistic::parse(7, "2a1+a2-1/2a3") == f);
  CHECK(Statistic::parse(7, "x3-x3").is_zero());
  CHECK(Statistic::parse(7, "0").is_zero());
  CHECK(Statistic::parse(7, "").is_zero());
  CHECK(Statistic::parse(7, f.to_string()) == f);
  CHECK_THROWS_AS(Statistic::parse(7, "x8"), std::invalid_argument);
  CHECK_THROWS_AS(Statistic::parse(7, "x0"), std::invalid_argument);
  CHECK_THROWS_AS(Statistic::parse(7, "2y1"), std::invalid_argument);
  CHECK_THROWS_AS(Statistic::parse(7, "1/0x1"), std::invalid_argument);
  CHECK_THROWS_AS(Statistic::parse(7, "x1+"), std::invalid_argument);
  CHECK(f(S("1010000")) == Rational(3, 2));
  CHECK(f.dot({4, 2, 3, 2, 3, 2, 4}) == Rational(17, 2));
  CHECK(Statistic::indicator(3, 2) == Statistic::parse(3, "x2"));
  CHECK(2 * Statistic::indicator(3, 1) + Statistic::indicator(3, 2) == Statistic::parse(3, "2x1+x2"));
}
