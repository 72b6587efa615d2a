#include "pathtoggle/zigzag.hpp"

#include <algorithm>
#include <bit>

#include "pathtoggle/orbit_partition.hpp"

namespace pathtoggle {

namespace {

// Bits of the odd elements a_1, a_3, ... in the shared layout.
std::uint64_t odd_mask(int n) {
  std::uint64_t m = 0;
  for (int i = 1; i <= n; i += 2) m |= vertex_mask(n, i);
  return m;
}

void check_index(int n, int i) {
  if (i < 1 || i > n) {
    throw std::domain_error("ideal toggle index " + std::to_string(i) + " outside [1, " +
                            std::to_string(n) + "]");
  }
}

bool has(int n, std::uint64_t bits, int i) { return i >= 1 && i <= n && (bits & vertex_mask(n, i)); }

}  // namespace

bool is_order_ideal_bits(int n, std::uint64_t bits) {
  if (n < 1 || n > kHardMaxN || (bits & ~full_mask(n)) != 0) return false;
  for (int i = 2; i <= n; i += 2) {
    if (!has(n, bits, i)) continue;
    if (!has(n, bits, i - 1)) return false;
    if (i + 1 <= n && !has(n, bits, i + 1)) return false;
  }
  return true;
}

OrderIdeal OrderIdeal::from_bits(int n, std::uint64_t bits) {
  if (n < 1 || n > kHardMaxN) throw std::domain_error("zigzag size out of range");
  if (!is_order_ideal_bits(n, bits)) throw std::domain_error("set is not an order ideal of the zigzag");
  return OrderIdeal(n, bits);
}

OrderIdeal OrderIdeal::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kHardMaxN)) {
    throw std::invalid_argument("ideal string length must be in [1, 62]");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("ideal strings use only 0 and 1");
    bits = bits << 1 | static_cast<std::uint64_t>(c - '0');
  }
  return from_bits(static_cast<int>(text.size()), bits);
}

OrderIdeal OrderIdeal::empty(int n) { return from_bits(n, 0); }

OrderIdeal OrderIdeal::full(int n) { return from_bits(n, full_mask(n)); }

bool OrderIdeal::contains(int i) const { return has(n_, bits_, i); }

int OrderIdeal::cardinality() const { return std::popcount(bits_); }

std::string OrderIdeal::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

OrderIdeal ideal_toggle(const OrderIdeal& I, int i) {
  const int n = I.n();
  check_index(n, i);
  const std::uint64_t flipped = I.bits() ^ vertex_mask(n, i);
  return is_order_ideal_bits(n, flipped) ? OrderIdeal::from_bits(n, flipped) : I;
}

OrderIdeal apply_ideal_word(const OrderIdeal& I, const ToggleWord& w) {
  if (w.n() != I.n()) throw std::domain_error("word and ideal have different n");
  OrderIdeal cur = I;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) cur = ideal_toggle(cur, *it);
  return cur;
}

ToggleWord promotion_word(int n) { return ToggleWord::phi(n); }

ToggleWord rowmotion_word(int n) {
  if (n < 1) throw std::domain_error("rowmotion needs n >= 1");
  std::vector<int> letters;
  const int top_odd = n % 2 == 1 ? n : n - 1;
  for (int i = top_odd; i >= 1; i -= 2) letters.push_back(i);
  for (int i = top_odd == n ? n - 1 : n; i >= 2; i -= 2) letters.push_back(i);
  return ToggleWord(n, std::move(letters));
}

OrderIdeal eta(const IndependentSet& s) { return OrderIdeal::from_bits(s.n(), s.bits() ^ odd_mask(s.n())); }

IndependentSet eta_inverse(const OrderIdeal& I) {
  return IndependentSet::from_bits(I.n(), I.bits() ^ odd_mask(I.n()));
}

std::vector<OrderIdeal> enumerate_ideals(int n, int max_n) {
  std::vector<OrderIdeal> out;
  for (const auto& s : enumerate_independent_sets(n, max_n)) out.push_back(eta(s));
  std::sort(out.begin(), out.end());
  return out;
}

IdealOrbit ideal_orbit_of(const OrderIdeal& I, const ToggleWord& w) {
  IdealOrbit o;
  OrderIdeal cur = I;
  do {
    o.states.push_back(cur);
    cur = apply_ideal_word(cur, w);
  } while (cur != I);
  detail::rotate_to_min(o.states);
  return o;
}

std::vector<IdealOrbit> all_ideal_orbits(int n, const ToggleWord& w, unsigned threads, int max_n) {
  if (w.n() != n) throw std::domain_error("word is over a different n");
  const auto universe = enumerate_ideals(n, max_n);
  auto cycles = detail::partition_cycles<OrderIdeal>(
      universe, [&](const OrderIdeal& I) { return apply_ideal_word(I, w); }, threads);
  std::vector<IdealOrbit> out;
  out.reserve(cycles.size());
  for (auto& c : cycles) out.push_back({std::move(c)});
  return out;
}

std::vector<std::size_t> ideal_orbit_size_multiset(const std::vector<IdealOrbit>& orbits) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

OrbitSummary summarize(const IdealOrbit& o) {
  const int n = o.states.front().n();
  return {o.states.front().to_string(), o.size(), detail::column_totals<OrderIdeal>(n, o.states)};
}

HomomesyReport check_ideal_homomesy(int n, const ToggleWord& w, const Statistic& f, int max_n) {
  if (f.n() != n) throw std::domain_error("statistic and poset have different n");
  std::vector<OrbitSummary> summaries;
  for (const auto& o : all_ideal_orbits(n, w, 1, max_n)) summaries.push_back(summarize(o));
  return check_homomesy(summaries, f);
}

std::vector<ExpectedHomomesy> zigzag_homomesies(int n) {
  if (n < 2) throw std::domain_error("zigzag homomesies need n >= 2");
  std::vector<ExpectedHomomesy> out;
  auto add = [&](const std::string& label, const Rational& c) {
    out.push_back({label, Statistic::parse(n, label), c});
  };
  const std::string a1 = "2x1-x2";
  const std::string an = "2x" + std::to_string(n) + "-x" + std::to_string(n - 1);
  if (n % 2 == 1) {
    for (int j = 1; j <= n / 2; ++j) {
      add("x" + std::to_string(j) + "-x" + std::to_string(n + 1 - j), 0);
    }
    add(a1, 1);
    add(an, 1);
  } else {
    for (int j = 1; j <= n / 2; ++j) {
      add("x" + std::to_string(j) + "+x" + std::to_string(n + 1 - j), 1);
    }
    add(a1, 1);
    add(an, 0);
  }
  return out;
}

std::string render_hasse(const OrderIdeal& I) {
  const int n = I.n();
  const auto width = static_cast<std::size_t>(2 * n - 1);
  std::string top(width, ' '), mid(width, ' '), bottom(width, ' ');
  for (int i = 1; i <= n; ++i) {
    const auto col = static_cast<std::size_t>(2 * (i - 1));
    const char mark = I.contains(i) ? '*' : 'o';
    if (i % 2 == 0) {
      top[col] = mark;
      mid[col - 1] = '/';
      if (i < n) mid[col + 1] = '\\';
    } else {
      bottom[col] = mark;
    }
  }
  auto trim = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  std::string out;
  if (n >= 2) out += trim(top) + '\n' + trim(mid) + '\n';
  out += trim(bottom) + '\n';
  return out;
}

}  // namespace pathtoggle
