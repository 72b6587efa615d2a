#pragma once

#include <string>
#include <vector>

#include "pathtoggle/toggle_word.hpp"

namespace pathtoggle {

enum class EdgeDirection {
  TowardLower,   // i <- i+1
  TowardHigher,  // i -> i+1
};

// An orientation of the path graph: one direction per edge {i, i+1}, i = 1..n-1.
class Orientation {
 public:
  Orientation() = default;
  // Throws std::domain_error unless dirs.size() == n - 1.
  Orientation(int n, std::vector<EdgeDirection> dirs);
  // Parses arrow notation, e.g. "1<-2<-3->4->5<-6->7".
  static Orientation parse(const std::string& text);
  static Orientation uniform(int n, EdgeDirection d);

  int n() const { return n_; }
  // Direction of edge {i, i+1}, 1 <= i <= n-1.
  EdgeDirection edge(int i) const;
  const std::vector<EdgeDirection>& edges() const { return dirs_; }

  bool is_source(int v) const;
  bool is_sink(int v) const;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;

  // Reverses every edge at v. Turns a sink into a source and vice versa.
  Orientation flip_vertex(int v) const;

  std::string to_string() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  int n_ = 0;
  std::vector<EdgeDirection> dirs_;
};

// Edge {i, i+1} points toward i iff t_i is written to the right of t_{i+1}.
Orientation coxeter_to_orientation(const CoxeterWord& w);

// Canonical word for an orientation: repeatedly take the smallest-index source
// of the not-yet-emitted vertices and append it on the right of the written word.
CoxeterWord orientation_to_coxeter(const Orientation& o);

}  // namespace pathtoggle
