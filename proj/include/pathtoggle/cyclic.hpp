#pragma once

#include <algorithm>
#include <cstddef>

// Helpers for sequences considered up to cyclic rotation. Work on any
// random-access container with value semantics (std::string, std::vector<int>).
namespace pathtoggle::cyclic {

template <class Seq>
Seq rotate_left(const Seq& s, std::size_t k = 1) {
  Seq out = s;
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<long>(k % out.size()), out.end());
  return out;
}

template <class Seq>
Seq reversed(const Seq& s) {
  return Seq(s.rbegin(), s.rend());
}

// Lexicographically least rotation, by direct comparison of all rotations.
template <class Seq>
Seq least_rotation(const Seq& s) {
  const std::size_t k = s.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t t = 0; t < k; ++t) {
      const auto a = s[(r + t) % k];
      const auto b = s[(best + t) % k];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  return rotate_left(s, best);
}

template <class Seq>
Seq greatest_rotation(const Seq& s) {
  Seq best = s;
  for (std::size_t r = 1; r < s.size(); ++r) best = std::max(best, rotate_left(s, r));
  return best;
}

template <class Seq>
bool is_least_rotation(const Seq& s) {
  const std::size_t k = s.size();
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t t = 0; t < k; ++t) {
      const auto a = s[(r + t) % k];
      const auto b = s[t];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  }
  return true;
}

// Smallest d dividing size() such that s is d-periodic.
template <class Seq>
std::size_t smallest_period(const Seq& s) {
  const std::size_t k = s.size();
  for (std::size_t d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    bool periodic = true;
    for (std::size_t t = d; t < k && periodic; ++t) periodic = s[t] == s[t - d];
    if (periodic) return d;
  }
  return k;
}

template <class Seq>
bool are_rotations(const Seq& a, const Seq& b) {
  return a.size() == b.size() && least_rotation(a) == least_rotation(b);
}

}  // namespace pathtoggle::cyclic
