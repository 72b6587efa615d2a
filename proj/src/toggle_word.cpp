#include "pathtoggle/toggle_word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace pathtoggle {

ToggleWord::ToggleWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1 || n > kHardMaxN) throw std::domain_error("vertex count out of range");
  for (int i : letters_) {
    if (i < 1 || i > n) {
      throw std::domain_error("toggle index " + std::to_string(i) + " outside [1, " +
                              std::to_string(n) + "]");
    }
  }
}

ToggleWord ToggleWord::parse(int n, std::string_view text) {
  std::string trimmed;
  for (char c : text) {
    if (c != ' ' && c != '\t') trimmed.push_back(c);
  }
  if (trimmed == "phi") return phi(n);
  if (trimmed.empty()) return ToggleWord(n, {});
  std::vector<int> letters;
  std::size_t start = 0;
  while (start <= trimmed.size()) {
    const std::size_t comma = std::min(trimmed.find(',', start), trimmed.size());
    const std::string_view token(trimmed.data() + start, comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad toggle index \"" + std::string(token) + "\" in word \"" +
                                  std::string(text) + "\"");
    }
    letters.push_back(value);
    start = comma + 1;
  }
  return ToggleWord(n, std::move(letters));
}

ToggleWord ToggleWord::phi(int n) {
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.rbegin(), letters.rend(), 1);
  return ToggleWord(n, std::move(letters));
}

ToggleWord ToggleWord::phi_inverse(int n) { return phi(n).inverse(); }

ToggleWord ToggleWord::inverse() const {
  return ToggleWord(n_, std::vector<int>(letters_.rbegin(), letters_.rend()));
}

ToggleWord operator*(const ToggleWord& a, const ToggleWord& b) {
  if (a.n_ != b.n_) throw std::domain_error("multiplying toggle words over different n");
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return ToggleWord(a.n_, std::move(letters));
}

std::string ToggleWord::to_string() const {
  if (letters_.empty()) return "id";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << 't' << letters_[k];
  }
  return os.str();
}

std::string ToggleWord::to_list() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ',';
    os << letters_[k];
  }
  return os.str();
}

CoxeterWord::CoxeterWord(ToggleWord word) : word_(std::move(word)) {
  const int n = word_.n();
  position_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  if (word_.length() != static_cast<std::size_t>(n)) {
    throw std::domain_error("a Coxeter word must use each of 1.." + std::to_string(n) +
                            " exactly once; got " + word_.to_list());
  }
  for (std::size_t k = 0; k < word_.length(); ++k) {
    const int i = word_.letters()[k];
    if (seen[static_cast<std::size_t>(i)]) {
      throw std::domain_error("toggle " + std::to_string(i) + " repeated in Coxeter word " +
                              word_.to_list());
    }
    seen[static_cast<std::size_t>(i)] = true;
    position_[static_cast<std::size_t>(i)] = k;
  }
}

CoxeterWord CoxeterWord::parse(int n, std::string_view text) {
  return CoxeterWord(ToggleWord::parse(n, text));
}

std::size_t CoxeterWord::position_of(int i) const {
  if (i < 1 || i > n()) throw std::domain_error("index outside [1, n]");
  return position_[static_cast<std::size_t>(i)];
}

IndependentSet apply_word(const IndependentSet& s, const ToggleWord& w) {
  if (s.n() != w.n()) throw std::domain_error("word and set have different n");
  IndependentSet out = s;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out = toggle(out, *it);
  return out;
}

bool semantically_equal(const ToggleWord& a, const ToggleWord& b, int max_n) {
  if (a.n() != b.n()) return false;
  for (const auto& s : enumerate_independent_sets(a.n(), max_n)) {
    if (apply_word(s, a) != apply_word(s, b)) return false;
  }
  return true;
}

std::uint64_t element_order(const ToggleWord& w, int max_n) {
  const auto states = enumerate_independent_sets(w.n(), max_n);
  std::vector<bool> seen(states.size(), false);
  std::uint64_t order = 1;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (seen[k]) continue;
    std::uint64_t len = 0;
    IndependentSet cur = states[k];
    do {
      seen[lex_rank(cur)] = true;
      cur = apply_word(cur, w);
      ++len;
    } while (cur != states[k]);
    const std::uint64_t g = std::gcd(order, len);
    if (__builtin_mul_overflow(order / g, len, &order)) {
      throw std::overflow_error("element order exceeds 64 bits");
    }
  }
  return order;
}

CoxeterWord random_coxeter_word(int n, std::mt19937_64& rng) {
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  std::shuffle(letters.begin(), letters.end(), rng);
  return CoxeterWord(ToggleWord(n, std::move(letters)));
}

}  // namespace pathtoggle
