#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pathtoggle/orbits.hpp"

namespace pathtoggle {

// A composition into parts 1 and 2. As a snake composition of a phi-orbit
// board on I_n it sums to n - 1: a 2 is a step two columns right, a 1 is a
// step one column right and one row down.
class SnakeComposition {
 public:
  SnakeComposition() = default;
  // Throws std::domain_error if empty or if a part is not 1 or 2.
  explicit SnakeComposition(std::vector<int> parts);
  // Digit string such as "221121". Throws std::invalid_argument.
  static SnakeComposition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int sum() const;
  // The n whose phi-orbits this composition describes.
  int ambient_n() const { return sum() + 1; }
  int n1() const;
  int n2() const;
  // Number of copies of the smallest repeated segment.
  int psi() const;
  bool is_aperiodic() const { return psi() == 1; }

  SnakeComposition reversed() const;
  std::string to_string() const;

  friend bool operator==(const SnakeComposition&, const SnakeComposition&) = default;
  friend auto operator<=>(const SnakeComposition&, const SnakeComposition&) = default;

 private:
  std::vector<int> parts_;
};

struct BoardCell {
  long long row = 0;  // unwrapped; reduce mod the orbit size to index the board
  int column = 0;

  friend bool operator==(const BoardCell&, const BoardCell&) = default;
};

struct Snake {
  std::vector<BoardCell> cells;
  SnakeComposition composition;

  long long start_row() const { return cells.front().row; }
};

// Splits the ones of a phi-orbit board into snakes, one per 1 in column 1,
// ordered by starting row. Throws std::domain_error if the board is not a
// phi-orbit or the ones do not split cleanly.
std::vector<Snake> snake_decompose(const OrbitBoard& board);

// Left cyclic rotation: the composition of the next snake.
SnakeComposition next_composition(const SnakeComposition& c);
// Rows between this snake's start and the next one's: 3 after a leading 1, else 2.
int next_start_offset(const SnakeComposition& c);

// Rows of the phi-orbit generated by laying `c` with its head at (row 0,
// column 1), in laid order. Throws std::logic_error if the layout is not a
// phi-orbit.
std::vector<IndependentSet> lay_snakes(const SnakeComposition& c);
Orbit orbit_from_composition(const SnakeComposition& c);

// (3 N1 + 2 N2) / psi.
long long orbit_size(const SnakeComposition& c);

// Least rotation; the canonical member of the cyclic class.
SnakeComposition composition_class(const SnakeComposition& c);
bool class_is_reversible(const SnakeComposition& c);

// Canonical representatives of every cyclic class of compositions of m into
// parts 1 and 2, in lexicographic order.
std::vector<SnakeComposition> composition_classes(int m);

// One orbit size per composition class of n - 1, sorted.
std::vector<long long> orbit_sizes_for_n(int n);

struct SizeTableRow {
  int orbit_size = 0;
  // Aperiodic class of orbit_size into parts 2 and 3, written from its
  // lexicographically greatest rotation, e.g. {3, 2, 2}.
  std::vector<int> parts;
  // One period of the matching snake composition (3 -> 1, 2 -> 2).
  SnakeComposition snake_period;
  // I_n has this orbit iff n = 1 mod modulus.
  int modulus = 1;

  std::string class_string() const;     // "3+2+2"
  std::string residue_string() const;   // "n = 1 mod 5" or "all n"
};

// Orbit sizes m arise from aperiodic classes of m into 2s and 3s.
std::vector<SizeTableRow> sizes_table(int m);
// Number of phi-orbits of size m on I_n predicted by sizes_table.
int predicted_orbit_count(int m, int n);
// Text table for m = 2..max_m, including "none" rows.
std::string render_sizes_table(int max_m);

}  // namespace pathtoggle
