#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pathtoggle/snakes.hpp"

namespace pathtoggle {

// Closed-form counts. All arithmetic is checked: a result that does not fit in
// 64 bits raises std::overflow_error instead of wrapping.

// F(0) = 0, F(1) = 1. F(93) is the largest value that fits.
std::uint64_t fib(int k);

// |I_n| = F(n + 2).
std::uint64_t count_independent_sets(int n);
// Independent sets equal to their own reverse.
std::uint64_t count_symmetrical(int n);
// Length-n binary strings with no "11" that do not both start and end with 1:
// F(n - 1) + F(n + 1).
std::uint64_t count_strings_no11_open(int n);

std::uint64_t euler_totient(std::uint64_t m);

// Necklaces of length len with no "11", adjacency read cyclically.
std::uint64_t count_necklaces_no11(int len);
// Same, up to rotation and reversal.
std::uint64_t count_bracelets_no11(int len);
// No-"11" necklaces fixed by reversal: F(floor(len / 2) + 2).
std::uint64_t count_self_reverse_necklaces(int len);

// phi-orbits on I_n, one per no-"11" necklace of length n - 1.
std::uint64_t count_phi_orbits(int n);
// phi-orbits closed under reversal: F(ceil(n / 2) + 1).
std::uint64_t count_reversible_orbits(int n);

struct NecklaceClass {
  int length = 0;
  std::string representative;  // least rotation
  bool self_reverse = false;
};

// Reads "01" as a part 2 and a lone "0" as a part 1. The string must have no
// cyclic "11" and start with '0'; otherwise throws std::domain_error.
SnakeComposition necklace_to_composition(std::string_view s);

}  // namespace pathtoggle
