#include "pathtoggle/statistic.hpp"

#include <cctype>
#include <sstream>

namespace pathtoggle {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Statistic::Statistic(int n, std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != static_cast<std::size_t>(n)) {
    throw std::domain_error("statistic needs exactly n coefficients");
  }
}

Statistic Statistic::indicator(int n, int j) {
  if (j < 1 || j > n) throw std::domain_error("indicator index outside [1, n]");
  Statistic f(n);
  f.coefficients_[static_cast<std::size_t>(j - 1)] = 1;
  return f;
}

const Rational& Statistic::coefficient(int j) const {
  if (j < 1 || j > n()) throw std::domain_error("coefficient index outside [1, n]");
  return coefficients_[static_cast<std::size_t>(j - 1)];
}

bool Statistic::is_zero() const {
  for (const auto& c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

Rational Statistic::dot(const std::vector<long long>& column_sums) const {
  if (column_sums.size() != coefficients_.size()) {
    throw std::domain_error("column sum vector has the wrong length");
  }
  Rational total = 0;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (coefficients_[j] != 0) total += coefficients_[j] * column_sums[j];
  }
  return total;
}

Statistic& Statistic::operator+=(const Statistic& other) {
  if (other.n() != n()) throw std::domain_error("adding statistics over different n");
  for (std::size_t j = 0; j < coefficients_.size(); ++j) coefficients_[j] += other.coefficients_[j];
  return *this;
}

Statistic& Statistic::operator-=(const Statistic& other) {
  if (other.n() != n()) throw std::domain_error("subtracting statistics over different n");
  for (std::size_t j = 0; j < coefficients_.size(); ++j) coefficients_[j] -= other.coefficients_[j];
  return *this;
}

Statistic& Statistic::operator*=(const Rational& k) {
  for (auto& c : coefficients_) c *= k;
  return *this;
}

namespace {

class StatisticParser {
 public:
  StatisticParser(int n, std::string_view text) : n_(n), original_(text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Statistic run() {
    Statistic f(n_);
    if (text_.empty() || text_ == "0") return f;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Rational coeff = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = Rational(read_int());
        if (peek() == '/') {
          ++pos_;
          const long long den = read_int();
          if (den == 0) fail("zero denominator");
          coeff /= den;
        }
        if (peek() == '*') ++pos_;
      }
      if (peek() != 'x' && peek() != 'a') fail("expected variable x<j>");
      ++pos_;
      const long long j = read_int();
      if (j < 1 || j > n_) fail("index " + std::to_string(j) + " outside [1, " + std::to_string(n_) + "]");
      Statistic term = Statistic::indicator(n_, static_cast<int>(j));
      term *= coeff * sign;
      f += term;
    }
    return f;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  long long read_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000LL) fail("number too large");
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse statistic \"" + std::string(original_) + "\": " + why);
  }

  int n_;
  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Statistic Statistic::parse(int n, std::string_view text) { return StatisticParser(n, text).run(); }

std::string Statistic::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (int j = 1; j <= n(); ++j) {
    Rational c = coefficients_[static_cast<std::size_t>(j - 1)];
    if (c == 0) continue;
    if (c < 0) {
      os << (any ? " - " : "-");
      c = -c;
    } else if (any) {
      os << " + ";
    }
    if (c != 1) os << c;
    os << 'x' << j;
    any = true;
  }
  return any ? os.str() : "0";
}

}  // namespace pathtoggle
