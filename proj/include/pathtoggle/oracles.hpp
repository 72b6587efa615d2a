#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathtoggle/enumeration.hpp"

// Brute-force counterparts of the closed-form counts. They work on plain
// '0'/'1' strings over all 2^n candidates and share no code with the library
// proper, so agreement between the two is meaningful. Too slow for anything
// but cross-checks.
namespace pathtoggle::oracle {

// Largest string length the oracles will enumerate (2^26 candidates).
inline constexpr int kMaxOracleLength = 26;

// Every length-n binary string in lexicographic order.
std::vector<std::string> binary_strings(int n);
bool has_open_11(const std::string& s);
bool has_cyclic_11(const std::string& s);
std::string least_rotation(const std::string& s);

std::uint64_t independent_sets(int n);
std::uint64_t symmetrical(int n);
std::uint64_t strings_no11_open(int n);
std::uint64_t necklaces(int len);
std::uint64_t bracelets(int len);
std::uint64_t self_reverse_necklaces(int len);

// General binary necklaces and bracelets, no restriction on "11".
std::uint64_t binary_necklaces(int len);
std::uint64_t binary_bracelets(int len);

// No-"11" necklace classes of length len ordered by representative.
std::vector<NecklaceClass> necklace_classes(int len);

// phi = t_n ... t_1 on a string: toggles positions 1, 2, ..., n in turn.
std::string phi(const std::string& s);
// Orbits of phi on the no-"11" strings of length n, each listed from its least member.
std::vector<std::vector<std::string>> phi_orbits(int n);
std::uint64_t phi_orbit_count(int n);
std::uint64_t reversible_orbit_count(int n);

}  // namespace pathtoggle::oracle
