#include "pathtoggle/snakes.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "pathtoggle/cyclic.hpp"

namespace pathtoggle {

SnakeComposition::SnakeComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::domain_error("a snake composition has at least one part");
  for (int p : parts_) {
    if (p != 1 && p != 2) throw std::domain_error("snake composition parts must be 1 or 2");
  }
}

SnakeComposition SnakeComposition::parse(std::string_view text) {
  std::vector<int> parts;
  for (char c : text) {
    if (c != '1' && c != '2') {
      throw std::invalid_argument("composition \"" + std::string(text) +
                                  "\" may only contain the digits 1 and 2");
    }
    parts.push_back(c - '0');
  }
  if (parts.empty()) throw std::invalid_argument("empty composition");
  return SnakeComposition(std::move(parts));
}

int SnakeComposition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int SnakeComposition::n1() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

int SnakeComposition::n2() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 2));
}

int SnakeComposition::psi() const {
  return static_cast<int>(parts_.size() / cyclic::smallest_period(parts_));
}

SnakeComposition SnakeComposition::reversed() const {
  return SnakeComposition(cyclic::reversed(parts_));
}

std::string SnakeComposition::to_string() const {
  std::string s;
  for (int p : parts_) s.push_back(static_cast<char>('0' + p));
  return s;
}

std::vector<Snake> snake_decompose(const OrbitBoard& board) {
  const int n = board.n();
  const auto rows = static_cast<long long>(board.rows());
  const ToggleWord phi = ToggleWord::phi(n);
  for (long long i = 0; i < rows; ++i) {
    if (apply_word(board.row(i), phi) != board.row(i + 1)) {
      throw std::domain_error("snake decomposition needs a phi-orbit board; row " +
                              board.row(i).to_string() + " is not followed by its phi-image");
    }
  }

  auto wrap = [rows](long long r) { return ((r % rows) + rows) % rows; };
  std::set<std::pair<long long, int>> covered;
  long long ones = 0;
  for (long long i = 0; i < rows; ++i) ones += board.row(i).cardinality();

  std::vector<Snake> snakes;
  for (long long start = 0; start < rows; ++start) {
    if (!board.at(start, 1)) continue;
    Snake snake;
    std::vector<int> parts;
    long long r = start;
    int j = 1;
    auto claim = [&](long long row, int col) {
      if (!covered.emplace(wrap(row), col).second) {
        throw std::domain_error("cell (" + std::to_string(wrap(row)) + ", " + std::to_string(col) +
                                ") lies on two snakes");
      }
      snake.cells.push_back({row, col});
    };
    claim(r, j);
    while (j < n) {
      const bool across = board.at(r, j + 2) == 1;
      const bool down = board.at(r + 1, j + 1) == 1;
      if (across && down) {
        throw std::domain_error("snake at (" + std::to_string(wrap(r)) + ", " + std::to_string(j) +
                                ") can continue two ways");
      }
      if (across) {
        j += 2;
        parts.push_back(2);
      } else if (down) {
        ++r;
        ++j;
        parts.push_back(1);
      } else {
        throw std::domain_error("snake at (" + std::to_string(wrap(r)) + ", " + std::to_string(j) +
                                ") stops before the last column");
      }
      claim(r, j);
    }
    snake.composition = SnakeComposition(std::move(parts));
    snakes.push_back(std::move(snake));
  }
  if (static_cast<long long>(covered.size()) != ones) {
    throw std::domain_error("snakes leave some ones of the board uncovered");
  }
  return snakes;
}

SnakeComposition next_composition(const SnakeComposition& c) {
  return SnakeComposition(cyclic::rotate_left(c.parts()));
}

int next_start_offset(const SnakeComposition& c) { return c.parts().front() == 1 ? 3 : 2; }

std::vector<IndependentSet> lay_snakes(const SnakeComposition& seed) {
  const int n = seed.ambient_n();
  if (n > kHardMaxN) throw CapacityError("composition too long for a 64-bit board row");

  struct Placement {
    long long row;
    SnakeComposition composition;
  };
  std::vector<Placement> placements;
  long long row = 0;
  SnakeComposition c = seed;
  do {
    placements.push_back({row, c});
    row += next_start_offset(c);
    c = next_composition(c);
  } while (c != seed);
  const long long period = row;

  std::vector<std::uint64_t> bits(static_cast<std::size_t>(period), 0);
  auto set = [&](long long r, int j) { bits[static_cast<std::size_t>(r % period)] |= vertex_mask(n, j); };
  for (const auto& p : placements) {
    long long r = p.row;
    int j = 1;
    set(r, j);
    for (int part : p.composition.parts()) {
      if (part == 2) {
        j += 2;
      } else {
        ++r;
        ++j;
      }
      set(r, j);
    }
  }

  std::vector<IndependentSet> states;
  states.reserve(bits.size());
  const ToggleWord phi = ToggleWord::phi(n);
  for (auto b : bits) {
    if (!is_independent_bits(b)) {
      throw std::logic_error("snakes of " + seed.to_string() + " overlap into adjacent ones");
    }
    states.push_back(IndependentSet::from_bits(n, b));
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (apply_word(states[i], phi) != states[(i + 1) % states.size()]) {
      throw std::logic_error("laying " + seed.to_string() + " did not produce a phi-orbit");
    }
  }
  return states;
}

Orbit orbit_from_composition(const SnakeComposition& c) {
  return Orbit::from_cycle(ToggleWord::phi(c.ambient_n()), lay_snakes(c));
}

long long orbit_size(const SnakeComposition& c) {
  return (3LL * c.n1() + 2LL * c.n2()) / c.psi();
}

SnakeComposition composition_class(const SnakeComposition& c) {
  return SnakeComposition(cyclic::least_rotation(c.parts()));
}

bool class_is_reversible(const SnakeComposition& c) {
  return cyclic::are_rotations(c.parts(), cyclic::reversed(c.parts()));
}

namespace {

// Every composition of m into the given parts, in lexicographic order, handed
// to `emit` while it is still being built.
template <class Emit>
void for_each_composition(int m, const std::vector<int>& allowed, Emit&& emit) {
  std::vector<int> prefix;
  auto extend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      emit(prefix);
      return;
    }
    for (int p : allowed) {
      if (p > remaining) continue;
      prefix.push_back(p);
      self(self, remaining - p);
      prefix.pop_back();
    }
  };
  extend(extend, m);
}

}  // namespace

std::vector<SnakeComposition> composition_classes(int m) {
  if (m < 1) throw std::domain_error("compositions need m >= 1");
  if (m > kHardMaxN) throw CapacityError("composition classes requested for m beyond the guard");
  std::vector<SnakeComposition> out;
  for_each_composition(m, {1, 2}, [&](const std::vector<int>& parts) {
    if (cyclic::is_least_rotation(parts)) out.emplace_back(parts);
  });
  return out;
}

std::vector<long long> orbit_sizes_for_n(int n) {
  if (n < 2) throw std::domain_error("orbit sizes need n >= 2");
  std::vector<long long> sizes;
  for (const auto& c : composition_classes(n - 1)) sizes.push_back(orbit_size(c));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string SizeTableRow::class_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "+" : "") << parts[k];
  return os.str();
}

std::string SizeTableRow::residue_string() const {
  if (modulus == 1) return "all n";
  return "n = 1 mod " + std::to_string(modulus);
}

std::vector<SizeTableRow> sizes_table(int m) {
  if (m < 1) throw std::domain_error("orbit size must be positive");
  std::vector<SizeTableRow> rows;
  for_each_composition(m, {2, 3}, [&](const std::vector<int>& parts) {
    if (!cyclic::is_least_rotation(parts)) return;
    if (cyclic::smallest_period(parts) != parts.size()) return;
    SizeTableRow row;
    row.orbit_size = m;
    row.parts = cyclic::greatest_rotation(parts);
    std::vector<int> period;
    for (int p : row.parts) period.push_back(p == 3 ? 1 : 2);
    row.snake_period = SnakeComposition(std::move(period));
    row.modulus = row.snake_period.sum();
    rows.push_back(std::move(row));
  });
  std::sort(rows.begin(), rows.end(), [](const SizeTableRow& a, const SizeTableRow& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.parts < b.parts;
  });
  return rows;
}

int predicted_orbit_count(int m, int n) {
  int count = 0;
  for (const auto& row : sizes_table(m)) {
    if ((n - 1) % row.modulus == 0) ++count;
  }
  return count;
}

std::string render_sizes_table(int max_m) {
  std::ostringstream os;
  os << "size | aperiodic class of m into 2s and 3s | snake composition type | n with an orbit of size m\n";
  for (int m = 2; m <= max_m; ++m) {
    const auto rows = sizes_table(m);
    if (rows.empty()) {
      os << m << " | none | none | none\n";
      continue;
    }
    for (const auto& row : rows) {
      const std::string period = row.snake_period.to_string();
      os << m << " | " << row.class_string() << " | " << period << period << "..." << period
         << " | " << row.residue_string() << '\n';
    }
  }
  return os.str();
}

}  // namespace pathtoggle
