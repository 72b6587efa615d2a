#pragma once

#include <string>
#include <vector>

#include "pathtoggle/orbits.hpp"
#include "pathtoggle/orientation.hpp"

namespace pathtoggle {

// Toggles that can be moved to the written left end (sources of the orientation).
std::vector<int> initial_toggles(const CoxeterWord& w);
// Toggles that can be moved to the written right end, i.e. act first (sinks).
std::vector<int> final_toggles(const CoxeterWord& w);

// t_k w t_k, returned in the canonical written form of its orientation. Throws
// std::domain_error unless k is initial or final in w, since otherwise the
// product is not a Coxeter element.
CoxeterWord admissible_conjugate(const CoxeterWord& w, int k);

enum class ConjugationKind { ByFinal, ByInitial };

struct ConjugationStep {
  int k = 0;
  ConjugationKind kind = ConjugationKind::ByFinal;
  CoxeterWord before;
  CoxeterWord after;
};

struct PathToPhi {
  std::vector<ConjugationStep> steps;
  // Product of the step toggles in the order applied; phi = u^{-1} w u.
  ToggleWord u;
};

// Conjugates by the largest final toggle until the orientation is that of
// phi. Throws std::logic_error if that takes more than n^2 steps.
PathToPhi path_to_phi(const CoxeterWord& w);

// "conjugate by t7 (final): t3 t4 ... -> ...   1<-2<-3->4->5<-6->7" lines,
// starting with the input word and ending at phi.
std::string render_trace(const CoxeterWord& w, const PathToPhi& path);

struct CorrespondenceReport {
  bool ok = true;
  std::size_t orbits_checked = 0;
  std::string failure;  // first problem found, empty when ok
};

// For every w-orbit (S^0, ..., S^{m-1}) checks that (t_k S^0, ..., t_k S^{m-1})
// is an orbit of admissible_conjugate(w, k) with the same column sums.
CorrespondenceReport verify_orbit_correspondence(const CoxeterWord& w, int k,
                                                 int max_n = kDefaultMaxN);

}  // namespace pathtoggle
