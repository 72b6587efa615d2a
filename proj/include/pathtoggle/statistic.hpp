#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathtoggle/independent_set.hpp"

namespace pathtoggle {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);

// sum_j c_j * chi_j over vertex indicators, with exact rational coefficients.
class Statistic {
 public:
  Statistic() = default;
  explicit Statistic(int n) : coefficients_(static_cast<std::size_t>(n)) {}
  Statistic(int n, std::vector<Rational> coefficients);

  // chi_j
  static Statistic indicator(int n, int j);

  // Mini-grammar: "2x1+x2-x7", "1/2x3 - x4", "0". Whitespace is ignored and the
  // variable letter may be 'x' or 'a'. Throws std::invalid_argument.
  static Statistic parse(int n, std::string_view text);

  int n() const { return static_cast<int>(coefficients_.size()); }
  const Rational& coefficient(int j) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool is_zero() const;

  // Evaluates on anything exposing contains(j) for 1-based j.
  template <class State>
  Rational operator()(const State& s) const {
    Rational total = 0;
    for (int j = 1; j <= n(); ++j) {
      if (s.contains(j)) total += coefficients_[static_cast<std::size_t>(j - 1)];
    }
    return total;
  }

  // Weighted sum of column totals, i.e. the statistic summed over an orbit.
  Rational dot(const std::vector<long long>& column_sums) const;

  Statistic& operator+=(const Statistic& other);
  Statistic& operator-=(const Statistic& other);
  Statistic& operator*=(const Rational& k);
  friend Statistic operator+(Statistic a, const Statistic& b) { return a += b; }
  friend Statistic operator-(Statistic a, const Statistic& b) { return a -= b; }
  friend Statistic operator*(const Rational& k, Statistic a) { return a *= k; }

  std::string to_string() const;

  friend bool operator==(const Statistic&, const Statistic&) = default;

 private:
  std::vector<Rational> coefficients_;
};

}  // namespace pathtoggle
