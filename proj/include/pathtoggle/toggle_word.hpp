#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathtoggle/independent_set.hpp"

namespace pathtoggle {

// A product of toggles written left to right, e.g. {3,4,2} is t3 t4 t2.
// Application is right to left: the last letter acts first.
class ToggleWord {
 public:
  ToggleWord() = default;
  // Throws std::domain_error if a letter lies outside [1, n].
  ToggleWord(int n, std::vector<int> letters);

  // Comma-separated indices in written order, or the token "phi" (n, ..., 2, 1).
  static ToggleWord parse(int n, std::string_view text);
  static ToggleWord phi(int n);
  // phi^{-1} = t1 t2 ... tn.
  static ToggleWord phi_inverse(int n);

  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  ToggleWord inverse() const;
  // Written concatenation: (a * b) applies b first, then a.
  friend ToggleWord operator*(const ToggleWord& a, const ToggleWord& b);

  // "t3 t4 t2" style.
  std::string to_string() const;
  // "3,4,2" style, round-trips through parse.
  std::string to_list() const;

  // Syntactic equality.
  friend bool operator==(const ToggleWord&, const ToggleWord&) = default;

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

// A toggle word using each of 1..n exactly once.
class CoxeterWord {
 public:
  CoxeterWord() = default;
  // Throws std::domain_error unless `word` is a permutation of [1, n].
  explicit CoxeterWord(ToggleWord word);
  static CoxeterWord parse(int n, std::string_view text);
  static CoxeterWord phi(int n) { return CoxeterWord(ToggleWord::phi(n)); }

  int n() const { return word_.n(); }
  const ToggleWord& word() const { return word_; }
  const std::vector<int>& letters() const { return word_.letters(); }
  // 0-based position of letter i in the written word.
  std::size_t position_of(int i) const;
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;

 private:
  ToggleWord word_;
  std::vector<std::size_t> position_;  // position_[i] for i in 1..n
};

IndependentSet apply_word(const IndependentSet& s, const ToggleWord& w);
inline IndependentSet apply_word(const IndependentSet& s, const CoxeterWord& w) {
  return apply_word(s, w.word());
}

// Equal action on every element of I_n.
bool semantically_equal(const ToggleWord& a, const ToggleWord& b, int max_n = kDefaultMaxN);

// Least m >= 1 with w^m = id on I_n, as the lcm of orbit sizes.
// Throws std::overflow_error if the order does not fit in 64 bits.
std::uint64_t element_order(const ToggleWord& w, int max_n = kDefaultMaxN);

CoxeterWord random_coxeter_word(int n, std::mt19937_64& rng);

}  // namespace pathtoggle
