#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pathtoggle/independent_set.hpp"
#include "pathtoggle/statistic.hpp"
#include "pathtoggle/toggle_word.hpp"

namespace pathtoggle {

// One orbit S^0, ..., S^{l-1} of a toggle word, rotated so that S^0 is the
// lexicographically least member.
class Orbit {
 public:
  // Checks that the states are distinct and that the word carries each state
  // to the next one cyclically. Throws std::domain_error otherwise.
  static Orbit from_cycle(ToggleWord word, std::vector<IndependentSet> states);

  int n() const { return word_.n(); }
  const ToggleWord& word() const { return word_; }
  const std::vector<IndependentSet>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const IndependentSet& representative() const { return states_.front(); }
  // S^i with i taken mod size().
  const IndependentSet& state(long long i) const;
  bool contains(const IndependentSet& s) const;
  std::optional<std::size_t> index_of(const IndependentSet& s) const;

 private:
  friend class OrbitBuilder;
  Orbit(ToggleWord word, std::vector<IndependentSet> states);

  ToggleWord word_;
  std::vector<IndependentSet> states_;
  std::vector<std::uint64_t> sorted_bits_;
};

// The orbit viewed as a 0/1 matrix on a cylinder. Row 0 is orbit state
// `first_row` (the canonical S^0 unless a display needs another start).
class OrbitBoard {
 public:
  explicit OrbitBoard(Orbit orbit, long long first_row = 0)
      : orbit_(std::move(orbit)), first_row_(first_row) {}

  const Orbit& orbit() const { return orbit_; }
  int n() const { return orbit_.n(); }
  std::size_t rows() const { return orbit_.size(); }
  const IndependentSet& row(long long i) const { return orbit_.state(i + first_row_); }
  // S(i, j): row index mod l, columns outside [1, n] read as 0.
  int at(long long i, int j) const { return row(i).contains(j) ? 1 : 0; }

 private:
  Orbit orbit_;
  long long first_row_ = 0;
};

Orbit orbit_of(const IndependentSet& s, const ToggleWord& w);

// Partition of I_n into w-orbits, ordered by least element. `threads` > 1
// shards the sweep; the result is identical for every thread count.
std::vector<Orbit> all_orbits(int n, const ToggleWord& w, unsigned threads = 1,
                              int max_n = kDefaultMaxN);

std::vector<long long> column_sums(const Orbit& o);
Rational orbit_average(const Orbit& o, const Statistic& f);

struct OrbitWitness {
  std::string representative;
  std::size_t size = 0;
  Rational average;
};

struct HomomesyReport {
  bool homomesic = false;
  // Common average when homomesic; the first orbit's average otherwise.
  Rational constant;
  std::size_t orbit_count = 0;
  // First two orbits (canonical order) with different averages.
  std::optional<std::array<OrbitWitness, 2>> witnesses;
};

std::string to_string(const HomomesyReport& r);

// What homomesy needs to know about one orbit of any state space.
struct OrbitSummary {
  std::string representative;
  std::size_t size = 0;
  std::vector<long long> column_sums;
};

HomomesyReport check_homomesy(const std::vector<OrbitSummary>& orbits, const Statistic& f);
HomomesyReport check_homomesy(const std::vector<Orbit>& orbits, const Statistic& f);
HomomesyReport check_homomesy(int n, const ToggleWord& w, const Statistic& f,
                              int max_n = kDefaultMaxN);

// True iff some member's reverse is also a member.
bool is_reversible(const Orbit& o);
int count_symmetrical_in(const Orbit& o);

std::vector<std::size_t> orbit_size_multiset(const std::vector<Orbit>& orbits);

}  // namespace pathtoggle
