#include "pathtoggle/orientation.hpp"

#include <charconv>
#include <sstream>

namespace pathtoggle {

Orientation::Orientation(int n, std::vector<EdgeDirection> dirs) : n_(n), dirs_(std::move(dirs)) {
  if (n < 1 || n > kHardMaxN) throw std::domain_error("vertex count out of range");
  if (dirs_.size() != static_cast<std::size_t>(n - 1)) {
    throw std::domain_error("an orientation of P_n needs exactly n-1 edges");
  }
}

Orientation Orientation::uniform(int n, EdgeDirection d) {
  return Orientation(n, std::vector<EdgeDirection>(static_cast<std::size_t>(n - 1), d));
}

Orientation Orientation::parse(const std::string& text) {
  std::vector<EdgeDirection> dirs;
  int expected = 1;
  std::size_t pos = 0;
  auto read_vertex = [&] {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || v != expected) {
      throw std::invalid_argument("orientation \"" + text + "\": expected vertex " +
                                  std::to_string(expected));
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    ++expected;
  };
  read_vertex();
  while (pos < text.size()) {
    const std::string_view arrow(text.data() + pos, std::min<std::size_t>(2, text.size() - pos));
    if (arrow == "<-") {
      dirs.push_back(EdgeDirection::TowardLower);
    } else if (arrow == "->") {
      dirs.push_back(EdgeDirection::TowardHigher);
    } else {
      throw std::invalid_argument("orientation \"" + text + "\": expected <- or ->");
    }
    pos += 2;
    read_vertex();
  }
  return Orientation(expected - 1, std::move(dirs));
}

EdgeDirection Orientation::edge(int i) const {
  if (i < 1 || i >= n_) throw std::domain_error("edge index outside [1, n-1]");
  return dirs_[static_cast<std::size_t>(i - 1)];
}

bool Orientation::is_source(int v) const {
  if (v < 1 || v > n_) throw std::domain_error("vertex outside [1, n]");
  const bool left_ok = v == 1 || edge(v - 1) == EdgeDirection::TowardLower;
  const bool right_ok = v == n_ || edge(v) == EdgeDirection::TowardHigher;
  return left_ok && right_ok;
}

bool Orientation::is_sink(int v) const {
  if (v < 1 || v > n_) throw std::domain_error("vertex outside [1, n]");
  const bool left_ok = v == 1 || edge(v - 1) == EdgeDirection::TowardHigher;
  const bool right_ok = v == n_ || edge(v) == EdgeDirection::TowardLower;
  return left_ok && right_ok;
}

std::vector<int> Orientation::sources() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (is_source(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> Orientation::sinks() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (is_sink(v)) out.push_back(v);
  }
  return out;
}

Orientation Orientation::flip_vertex(int v) const {
  if (v < 1 || v > n_) throw std::domain_error("vertex outside [1, n]");
  auto dirs = dirs_;
  auto flip = [](EdgeDirection d) {
    return d == EdgeDirection::TowardLower ? EdgeDirection::TowardHigher
                                           : EdgeDirection::TowardLower;
  };
  if (v > 1) dirs[static_cast<std::size_t>(v - 2)] = flip(dirs[static_cast<std::size_t>(v - 2)]);
  if (v < n_) dirs[static_cast<std::size_t>(v - 1)] = flip(dirs[static_cast<std::size_t>(v - 1)]);
  return Orientation(n_, std::move(dirs));
}

std::string Orientation::to_string() const {
  std::ostringstream os;
  os << 1;
  for (int i = 1; i < n_; ++i) {
    os << (edge(i) == EdgeDirection::TowardLower ? "<-" : "->") << i + 1;
  }
  return os.str();
}

Orientation coxeter_to_orientation(const CoxeterWord& w) {
  std::vector<EdgeDirection> dirs;
  for (int i = 1; i < w.n(); ++i) {
    dirs.push_back(w.position_of(i) > w.position_of(i + 1) ? EdgeDirection::TowardLower
                                                           : EdgeDirection::TowardHigher);
  }
  return Orientation(w.n(), std::move(dirs));
}

CoxeterWord orientation_to_coxeter(const Orientation& o) {
  const int n = o.n();
  std::vector<bool> emitted(static_cast<std::size_t>(n) + 2, false);
  // v is available once every not-yet-emitted neighbour sits at the head of an
  // edge leaving v.
  auto available = [&](int v) {
    if (v > 1 && !emitted[static_cast<std::size_t>(v - 1)] &&
        o.edge(v - 1) != EdgeDirection::TowardLower) {
      return false;
    }
    if (v < n && !emitted[static_cast<std::size_t>(v + 1)] &&
        o.edge(v) != EdgeDirection::TowardHigher) {
      return false;
    }
    return true;
  };
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n));
  while (letters.size() < static_cast<std::size_t>(n)) {
    int pick = 0;
    for (int v = 1; v <= n && pick == 0; ++v) {
      if (!emitted[static_cast<std::size_t>(v)] && available(v)) pick = v;
    }
    // A path has no cycles, so some vertex is always available.
    emitted[static_cast<std::size_t>(pick)] = true;
    letters.push_back(pick);
  }
  return CoxeterWord(ToggleWord(n, std::move(letters)));
}

}  // namespace pathtoggle
