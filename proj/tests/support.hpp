#pragma once

// Test-side reference implementations. They act on '0'/'1' strings and never
// call into the library, so a test comparing the two is a real cross-check.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ref {

inline std::vector<std::string> no11_strings(int n) {
  std::vector<std::string> out;
  for (unsigned long v = 0; v < (1ul << n); ++v) {
    std::string s;
    for (int i = n - 1; i >= 0; --i) s.push_back((v >> i) & 1 ? '1' : '0');
    if (s.find("11") == std::string::npos) out.push_back(s);
  }
  return out;
}

// Toggle at 1-based vertex i.
inline std::string toggle(std::string s, int i) {
  const auto k = static_cast<std::size_t>(i - 1);
  if (s[k] == '1') {
    s[k] = '0';
  } else if ((k == 0 || s[k - 1] == '0') && (k + 1 == s.size() || s[k + 1] == '0')) {
    s[k] = '1';
  }
  return s;
}

// Written word, applied right to left.
inline std::string apply(std::string s, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = toggle(s, *it);
  return s;
}

inline std::vector<int> phi(int n) {
  std::vector<int> w;
  for (int i = n; i >= 1; --i) w.push_back(i);
  return w;
}

inline std::vector<std::vector<std::string>> orbits(int n, const std::vector<int>& word) {
  std::set<std::string> seen;
  std::vector<std::vector<std::string>> out;
  for (const auto& s : no11_strings(n)) {
    if (seen.count(s)) continue;
    std::vector<std::string> orbit;
    std::string cur = s;
    do {
      seen.insert(cur);
      orbit.push_back(cur);
      cur = apply(cur, word);
    } while (cur != s);
    out.push_back(orbit);
  }
  return out;
}

inline std::vector<std::size_t> sizes(const std::vector<std::vector<std::string>>& orbits) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Zigzag ideals as strings: a_i present iff s[i-1] == '1'. Even i are maximal.
inline bool is_ideal(const std::string& s) {
  const int n = static_cast<int>(s.size());
  for (int i = 2; i <= n; i += 2) {
    if (s[i - 1] != '1') continue;
    if (s[i - 2] != '1') return false;
    if (i < n && s[i] != '1') return false;
  }
  return true;
}

inline std::vector<std::string> ideals(int n) {
  std::vector<std::string> out;
  for (unsigned long v = 0; v < (1ul << n); ++v) {
    std::string s;
    for (int i = n - 1; i >= 0; --i) s.push_back((v >> i) & 1 ? '1' : '0');
    if (is_ideal(s)) out.push_back(s);
  }
  return out;
}

// Rowmotion the classical way: the ideal generated by the minimal elements of
// the complement.
inline std::string rowmotion(const std::string& I) {
  const int n = static_cast<int>(I.size());
  auto below = [&](int x, int y) {  // x < y in the fence
    return y % 2 == 0 && (x == y - 1 || x == y + 1);
  };
  std::vector<int> minimal;
  for (int x = 1; x <= n; ++x) {
    if (I[x - 1] == '1') continue;
    bool is_min = true;
    for (int y = 1; y <= n; ++y) {
      if (I[y - 1] == '0' && below(y, x)) is_min = false;
    }
    if (is_min) minimal.push_back(x);
  }
  std::string out(static_cast<std::size_t>(n), '0');
  for (int m : minimal) {
    out[m - 1] = '1';
    for (int x = 1; x <= n; ++x) {
      if (below(x, m)) out[x - 1] = '1';
    }
  }
  return out;
}

inline std::string reversed(const std::string& s) { return std::string(s.rbegin(), s.rend()); }

}  // namespace ref
