#include "pathtoggle/independent_set.hpp"

#include <array>
#include <bit>
#include <ostream>

namespace pathtoggle {

namespace {

constexpr std::array<std::uint64_t, 66> make_fib_table() {
  std::array<std::uint64_t, 66> f{};
  f[0] = 0;
  f[1] = 1;
  for (std::size_t k = 2; k < f.size(); ++k) f[k] = f[k - 1] + f[k - 2];
  return f;
}

constexpr auto kFib = make_fib_table();

void check_n(int n) {
  if (n < 1 || n > kHardMaxN) {
    throw std::domain_error("vertex count " + std::to_string(n) + " outside [1, " +
                            std::to_string(kHardMaxN) + "]");
  }
}

}  // namespace

void check_capacity(int n, int max_n) {
  if (max_n > kHardMaxN) max_n = kHardMaxN;
  if (n > max_n) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the enumeration guard max_n = " +
                        std::to_string(max_n));
  }
}

IndependentSet IndependentSet::from_bits(int n, std::uint64_t bits) {
  check_n(n);
  if ((bits & ~full_mask(n)) != 0) throw std::domain_error("bits outside the first n positions");
  if (!is_independent_bits(bits)) throw std::domain_error("adjacent vertices in independent set");
  return IndependentSet(n, bits);
}

IndependentSet IndependentSet::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n < 1 || n > kHardMaxN) {
    throw std::invalid_argument("independent set string must have length in [1, " +
                                std::to_string(kHardMaxN) + "]");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("independent set string may only contain '0' and '1': \"" +
                                  std::string(text) + "\"");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  if (!is_independent_bits(bits)) {
    throw std::invalid_argument("\"" + std::string(text) + "\" contains 11, not independent");
  }
  return IndependentSet(n, bits);
}

IndependentSet IndependentSet::empty(int n) {
  check_n(n);
  return IndependentSet(n, 0);
}

IndependentSet IndependentSet::from_vertices(int n, const std::vector<int>& vertices) {
  check_n(n);
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > n) throw std::domain_error("vertex " + std::to_string(v) + " out of range");
    bits |= vertex_mask(n, v);
  }
  return from_bits(n, bits);
}

bool IndependentSet::contains(int j) const {
  if (j < 1 || j > n_) return false;
  return (bits_ & vertex_mask(n_, j)) != 0;
}

int IndependentSet::cardinality() const { return std::popcount(bits_); }

std::vector<int> IndependentSet::vertices() const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

std::string IndependentSet::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int j = 1; j <= n_; ++j) {
    if (contains(j)) s[static_cast<std::size_t>(j - 1)] = '1';
  }
  return s;
}

IndependentSet toggle(const IndependentSet& s, int i) {
  const int n = s.n();
  if (i < 1 || i > n) {
    throw std::domain_error("toggle index " + std::to_string(i) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  const std::uint64_t m = vertex_mask(n, i);
  std::uint64_t bits = s.bits();
  if (bits & m) {
    bits ^= m;
  } else if ((bits & ((m << 1) | (m >> 1))) == 0) {
    bits |= m;
  }
  return IndependentSet::from_bits(n, bits);
}

IndependentSet reverse(const IndependentSet& s) {
  std::uint64_t r = 0;
  std::uint64_t b = s.bits();
  for (int k = 0; k < s.n(); ++k) {
    r = (r << 1) | (b & 1);
    b >>= 1;
  }
  return IndependentSet::from_bits(s.n(), r);
}

bool is_symmetrical(const IndependentSet& s) { return reverse(s) == s; }

std::vector<IndependentSet> enumerate_independent_sets(int n, int max_n) {
  check_n(n);
  check_capacity(n, max_n);
  std::vector<IndependentSet> out;
  out.reserve(static_cast<std::size_t>(kFib[static_cast<std::size_t>(n + 2)]));
  // Depth-first over positions 1..n, trying 0 before 1, yields lexicographic order.
  auto extend = [&](auto&& self, int pos, std::uint64_t prefix, bool last_one) -> void {
    if (pos > n) {
      out.push_back(IndependentSet::from_bits(n, prefix));
      return;
    }
    self(self, pos + 1, prefix << 1, false);
    if (!last_one) self(self, pos + 1, (prefix << 1) | 1, true);
  };
  extend(extend, 1, 0, false);
  return out;
}

std::uint64_t lex_rank(const IndependentSet& s) {
  // Strings sharing the prefix before a 1 at position i, with 0 there instead,
  // number F(n - i + 2).
  std::uint64_t rank = 0;
  for (int i = 1; i <= s.n(); ++i) {
    if (s.contains(i)) rank += kFib[static_cast<std::size_t>(s.n() - i + 2)];
  }
  return rank;
}

std::ostream& operator<<(std::ostream& os, const IndependentSet& s) { return os << s.to_string(); }

}  // namespace pathtoggle
