#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathtoggle {

// Raised when a request would enumerate more states than the configured guard allows.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Default upper bound on n for anything that enumerates all of I_n (F(32) ~ 2.1M sets).
inline constexpr int kDefaultMaxN = 30;
// Hard limit imposed by the 64-bit word layout.
inline constexpr int kHardMaxN = 62;

void check_capacity(int n, int max_n);

// An independent set of the path graph on vertices 1..n.
//
// Storage: vertex i lives at bit (n - i), so vertex 1 is the most significant
// bit. With that layout, integer order on `bits()` coincides with the
// lexicographic order of the '0'/'1' string form, which is what every
// deterministic ordering in this library relies on.
class IndependentSet {
 public:
  IndependentSet() = default;

  // Throws std::domain_error if `bits` has two adjacent ones or stray high bits.
  static IndependentSet from_bits(int n, std::uint64_t bits);
  // Parses "1010100". Throws std::invalid_argument on bad characters or "11".
  static IndependentSet parse(std::string_view text);
  static IndependentSet empty(int n);
  static IndependentSet from_vertices(int n, const std::vector<int>& vertices);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  // Membership of vertex j; positions outside [1, n] read as 0.
  bool contains(int j) const;
  int cardinality() const;
  std::vector<int> vertices() const;
  std::string to_string() const;

  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
  friend std::strong_ordering operator<=>(const IndependentSet& a, const IndependentSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  IndependentSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {}

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// Mask with the bit for vertex i set (1-based).
inline std::uint64_t vertex_mask(int n, int i) { return std::uint64_t{1} << (n - i); }
inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}
inline bool is_independent_bits(std::uint64_t bits) { return (bits & (bits >> 1)) == 0; }

// The toggle at vertex i: remove i if present, insert it if the result stays
// independent, otherwise leave the set alone. Throws std::domain_error if i is
// outside [1, n].
IndependentSet toggle(const IndependentSet& s, int i);

IndependentSet reverse(const IndependentSet& s);
bool is_symmetrical(const IndependentSet& s);

// All of I_n in lexicographic order of the string form. Size F(n+2).
std::vector<IndependentSet> enumerate_independent_sets(int n, int max_n = kDefaultMaxN);

// Position of s within enumerate_independent_sets(s.n()) (Zeckendorf rank).
std::uint64_t lex_rank(const IndependentSet& s);

std::ostream& operator<<(std::ostream& os, const IndependentSet& s);

}  // namespace pathtoggle
