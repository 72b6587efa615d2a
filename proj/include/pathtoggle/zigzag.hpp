#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pathtoggle/orbits.hpp"

namespace pathtoggle {

// An order ideal of the zigzag poset a_1 < a_2 > a_3 < a_4 > ... on n elements.
// Odd elements are minimal, even elements maximal.
//
// Same bit layout as IndependentSet: element a_i lives at bit (n - i), so the
// string "1100000" means {a_1, a_2}. eta is then a flip of the odd positions.
class OrderIdeal {
 public:
  OrderIdeal() = default;
  // Throws std::domain_error unless the set is downward closed.
  static OrderIdeal from_bits(int n, std::uint64_t bits);
  // "1110000" style. Throws std::invalid_argument on bad text, std::domain_error
  // if the set is not an ideal.
  static OrderIdeal parse(std::string_view text);
  static OrderIdeal empty(int n);
  static OrderIdeal full(int n);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const;
  int cardinality() const;
  std::string to_string() const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
  friend std::strong_ordering operator<=>(const OrderIdeal& a, const OrderIdeal& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  OrderIdeal(int n, std::uint64_t bits) : n_(n), bits_(bits) {}
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

bool is_order_ideal_bits(int n, std::uint64_t bits);

// Adds or removes a_i when the result is still an ideal, otherwise no change.
// Throws std::domain_error if i is outside [1, n].
OrderIdeal ideal_toggle(const OrderIdeal& I, int i);
// Right to left, like apply_word on independent sets.
OrderIdeal apply_ideal_word(const OrderIdeal& I, const ToggleWord& w);

// t_n ... t_2 t_1
ToggleWord promotion_word(int n);
// Odd toggles in decreasing order, then even toggles in decreasing order, so
// the maximal elements are toggled first.
ToggleWord rowmotion_word(int n);

OrderIdeal eta(const IndependentSet& s);
IndependentSet eta_inverse(const OrderIdeal& I);

// J(Z_n) in increasing order of bits.
std::vector<OrderIdeal> enumerate_ideals(int n, int max_n = kDefaultMaxN);

struct IdealOrbit {
  std::vector<OrderIdeal> states;  // starts at the least member
  std::size_t size() const { return states.size(); }
};

IdealOrbit ideal_orbit_of(const OrderIdeal& I, const ToggleWord& w);
// Ordered by least member; identical for every thread count.
std::vector<IdealOrbit> all_ideal_orbits(int n, const ToggleWord& w, unsigned threads = 1,
                                         int max_n = kDefaultMaxN);
std::vector<std::size_t> ideal_orbit_size_multiset(const std::vector<IdealOrbit>& orbits);
OrbitSummary summarize(const IdealOrbit& o);
HomomesyReport check_ideal_homomesy(int n, const ToggleWord& w, const Statistic& f,
                                    int max_n = kDefaultMaxN);

struct ExpectedHomomesy {
  std::string label;  // "x1-x7" style, parseable by Statistic::parse
  Statistic statistic;
  Rational constant;
};

// The chi_{a_j} combinations known to be homomesic under every Coxeter element
// of the ideal toggle group, with their averages.
std::vector<ExpectedHomomesy> zigzag_homomesies(int n);

// Two-row drawing of the fence: maximal elements on top, '*' for members and
// 'o' for non-members.
std::string render_hasse(const OrderIdeal& I);

}  // namespace pathtoggle
