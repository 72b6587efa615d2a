#include "pathtoggle/coxeter.hpp"

#include <algorithm>
#include <sstream>

namespace pathtoggle {

std::vector<int> initial_toggles(const CoxeterWord& w) { return coxeter_to_orientation(w).sources(); }

std::vector<int> final_toggles(const CoxeterWord& w) { return coxeter_to_orientation(w).sinks(); }

CoxeterWord admissible_conjugate(const CoxeterWord& w, int k) {
  if (k < 1 || k > w.n()) throw std::domain_error("toggle index outside [1, n]");
  const Orientation o = coxeter_to_orientation(w);
  if (!o.is_source(k) && !o.is_sink(k)) {
    throw std::domain_error("t" + std::to_string(k) + " is neither initial nor final in " +
                            w.to_string() + "; conjugating would not give a Coxeter element");
  }
  return orientation_to_coxeter(o.flip_vertex(k));
}

PathToPhi path_to_phi(const CoxeterWord& w) {
  const int n = w.n();
  const Orientation target = Orientation::uniform(n, EdgeDirection::TowardLower);
  PathToPhi path;
  std::vector<int> u;
  CoxeterWord cur = w;
  while (coxeter_to_orientation(cur) != target) {
    if (static_cast<long long>(path.steps.size()) >= static_cast<long long>(n) * n) {
      throw std::logic_error("path to phi exceeded n^2 conjugations from " + w.to_string());
    }
    const auto finals = final_toggles(cur);
    const int k = *std::max_element(finals.begin(), finals.end());
    CoxeterWord next = admissible_conjugate(cur, k);
    path.steps.push_back({k, ConjugationKind::ByFinal, cur, next});
    u.push_back(k);
    cur = std::move(next);
  }
  path.u = ToggleWord(n, std::move(u));
  return path;
}

std::string render_trace(const CoxeterWord& w, const PathToPhi& path) {
  std::ostringstream os;
  os << "start: " << w.to_string() << "   " << coxeter_to_orientation(w).to_string() << '\n';
  for (const auto& step : path.steps) {
    os << "conjugate by t" << step.k << " ("
       << (step.kind == ConjugationKind::ByFinal ? "final" : "initial")
       << "): " << step.after.to_string() << "   " << coxeter_to_orientation(step.after).to_string()
       << '\n';
  }
  os << "u = " << path.u.to_string() << '\n';
  return os.str();
}

CorrespondenceReport verify_orbit_correspondence(const CoxeterWord& w, int k, int max_n) {
  const CoxeterWord conjugate = admissible_conjugate(w, k);
  CorrespondenceReport report;
  for (const auto& orbit : all_orbits(w.n(), w.word(), 1, max_n)) {
    ++report.orbits_checked;
    std::vector<IndependentSet> image;
    image.reserve(orbit.size());
    for (const auto& s : orbit.states()) image.push_back(toggle(s, k));
    try {
      const Orbit moved = Orbit::from_cycle(conjugate.word(), image);
      if (column_sums(moved) != column_sums(orbit)) {
        report.ok = false;
        report.failure = "column sums differ for the orbit of " + orbit.representative().to_string();
        return report;
      }
    } catch (const std::domain_error& e) {
      report.ok = false;
      report.failure = "image of the orbit of " + orbit.representative().to_string() +
                       " is not an orbit of " + conjugate.to_string() + ": " + e.what();
      return report;
    }
  }
  return report;
}

}  // namespace pathtoggle
