#include "pathtoggle/enumeration.hpp"

#include <array>
#include <stdexcept>

namespace pathtoggle {

namespace {

constexpr int kMaxFibIndex = 93;

constexpr std::array<std::uint64_t, kMaxFibIndex + 1> make_fib_table() {
  std::array<std::uint64_t, kMaxFibIndex + 1> f{};
  f[1] = 1;
  for (int k = 2; k <= kMaxFibIndex; ++k) f[k] = f[k - 1] + f[k - 2];
  return f;
}

constexpr auto kFib = make_fib_table();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflows 64 bits");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflows 64 bits");
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

std::uint64_t fib(int k) {
  require(k >= 0, "fib needs k >= 0");
  if (k > kMaxFibIndex) throw std::overflow_error("F(" + std::to_string(k) + ") overflows 64 bits");
  return kFib[static_cast<std::size_t>(k)];
}

std::uint64_t count_independent_sets(int n) {
  require(n >= 0, "n must be nonnegative");
  return fib(n + 2);
}

std::uint64_t count_symmetrical(int n) {
  require(n >= 1, "n must be positive");
  const int k = (n + 1) / 2;
  return n % 2 == 0 ? fib(k + 1) : fib(k + 2);
}

std::uint64_t count_strings_no11_open(int n) {
  require(n >= 1, "length must be positive");
  return checked_add(fib(n - 1), fib(n + 1));
}

std::uint64_t euler_totient(std::uint64_t m) {
  require(m >= 1, "totient needs m >= 1");
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t count_necklaces_no11(int len) {
  require(len >= 1, "length must be positive");
  std::uint64_t total = 0;
  for (int d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    const auto fixed = checked_add(fib(d - 1), fib(d + 1));
    total = checked_add(total, checked_mul(euler_totient(static_cast<std::uint64_t>(len / d)), fixed));
  }
  if (total % static_cast<std::uint64_t>(len) != 0) {
    throw std::logic_error("Burnside sum is not divisible by the length");
  }
  return total / static_cast<std::uint64_t>(len);
}

std::uint64_t count_self_reverse_necklaces(int len) {
  require(len >= 1, "length must be positive");
  return fib(len / 2 + 2);
}

std::uint64_t count_bracelets_no11(int len) {
  const auto twice = checked_add(count_self_reverse_necklaces(len), count_necklaces_no11(len));
  if (twice % 2 != 0) throw std::logic_error("bracelet count is not an integer");
  return twice / 2;
}

std::uint64_t count_phi_orbits(int n) {
  require(n >= 2, "phi-orbit counts need n >= 2");
  return count_necklaces_no11(n - 1);
}

std::uint64_t count_reversible_orbits(int n) {
  require(n >= 2, "reversible-orbit counts need n >= 2");
  return fib((n + 1) / 2 + 1);
}

SnakeComposition necklace_to_composition(std::string_view s) {
  require(!s.empty(), "empty necklace string");
  for (char c : s) {
    if (c != '0' && c != '1') throw std::domain_error("necklace strings use only 0 and 1");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1' && s[(i + 1) % s.size()] == '1') {
      throw std::domain_error("necklace string " + std::string(s) + " has a cyclic 11");
    }
  }
  if (s.front() == '1') {
    throw std::domain_error("strings that begin with 1 have no corresponding composition");
  }
  std::vector<int> parts;
  for (std::size_t i = 0; i < s.size();) {
    if (i + 1 < s.size() && s[i + 1] == '1') {
      parts.push_back(2);
      i += 2;
    } else {
      parts.push_back(1);
      ++i;
    }
  }
  return SnakeComposition(std::move(parts));
}

}  // namespace pathtoggle
