#include "pathtoggle/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pathtoggle::oracle {

namespace {

void check_length(int n) {
  if (n < 1) throw std::domain_error("oracle lengths start at 1");
  if (n > kMaxOracleLength) {
    throw CapacityError("oracle enumeration of 2^" + std::to_string(n) + " strings refused");
  }
}

std::string reversed(const std::string& s) { return std::string(s.rbegin(), s.rend()); }

template <class Keep, class Key>
std::uint64_t count_classes(int len, Keep keep, Key key) {
  std::set<std::string> seen;
  for (const auto& s : binary_strings(len)) {
    if (keep(s)) seen.insert(key(s));
  }
  return seen.size();
}

std::string bracelet_key(const std::string& s) {
  return std::min(least_rotation(s), least_rotation(reversed(s)));
}

}  // namespace

std::vector<std::string> binary_strings(int n) {
  check_length(n);
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      if (v >> (n - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool has_open_11(const std::string& s) { return s.find("11") != std::string::npos; }

bool has_cyclic_11(const std::string& s) {
  return has_open_11(s) || (!s.empty() && s.front() == '1' && s.back() == '1');
}

std::string least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t r = 1; r < s.size(); ++r) best = std::min(best, s.substr(r) + s.substr(0, r));
  return best;
}

std::uint64_t independent_sets(int n) {
  return static_cast<std::uint64_t>(std::ranges::count_if(
      binary_strings(n), [](const std::string& s) { return !has_open_11(s); }));
}

std::uint64_t symmetrical(int n) {
  return static_cast<std::uint64_t>(std::ranges::count_if(binary_strings(n), [](const std::string& s) {
    return !has_open_11(s) && s == reversed(s);
  }));
}

std::uint64_t strings_no11_open(int n) {
  return static_cast<std::uint64_t>(std::ranges::count_if(binary_strings(n), [](const std::string& s) {
    return !has_open_11(s) && !(s.front() == '1' && s.back() == '1');
  }));
}

std::uint64_t necklaces(int len) {
  return count_classes(len, [](const std::string& s) { return !has_cyclic_11(s); }, least_rotation);
}

std::uint64_t bracelets(int len) {
  return count_classes(len, [](const std::string& s) { return !has_cyclic_11(s); }, bracelet_key);
}

std::uint64_t self_reverse_necklaces(int len) {
  return static_cast<std::uint64_t>(std::ranges::count_if(
      necklace_classes(len), [](const NecklaceClass& c) { return c.self_reverse; }));
}

std::uint64_t binary_necklaces(int len) {
  return count_classes(len, [](const std::string&) { return true; }, least_rotation);
}

std::uint64_t binary_bracelets(int len) {
  return count_classes(len, [](const std::string&) { return true; }, bracelet_key);
}

std::vector<NecklaceClass> necklace_classes(int len) {
  std::set<std::string> reps;
  for (const auto& s : binary_strings(len)) {
    if (!has_cyclic_11(s)) reps.insert(least_rotation(s));
  }
  std::vector<NecklaceClass> out;
  for (const auto& r : reps) out.push_back({len, r, least_rotation(reversed(r)) == r});
  return out;
}

std::string phi(const std::string& s) {
  std::string t = s;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] == '1') {
      t[i] = '0';
    } else if ((i == 0 || t[i - 1] == '0') && (i + 1 == n || t[i + 1] == '0')) {
      t[i] = '1';
    }
  }
  return t;
}

std::vector<std::vector<std::string>> phi_orbits(int n) {
  std::vector<std::string> states;
  for (auto& s : binary_strings(n)) {
    if (!has_open_11(s)) states.push_back(std::move(s));
  }
  std::map<std::string, bool> seen;
  for (const auto& s : states) seen[s] = false;
  std::vector<std::vector<std::string>> orbits;
  for (const auto& s : states) {
    if (seen[s]) continue;
    std::vector<std::string> orbit;
    std::string cur = s;
    while (!seen.at(cur)) {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = phi(cur);
    }
    if (cur != s) throw std::logic_error("string phi is not a permutation");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::uint64_t phi_orbit_count(int n) { return phi_orbits(n).size(); }

std::uint64_t reversible_orbit_count(int n) {
  std::uint64_t count = 0;
  for (const auto& orbit : phi_orbits(n)) {
    const std::set<std::string> members(orbit.begin(), orbit.end());
    if (std::ranges::all_of(orbit, [&](const std::string& s) { return members.count(reversed(s)) > 0; })) {
      ++count;
    }
  }
  return count;
}

}  // namespace pathtoggle::oracle
