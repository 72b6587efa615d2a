#include "pathtoggle/orbits.hpp"

#include <algorithm>
#include <sstream>

#include "pathtoggle/orbit_partition.hpp"

namespace pathtoggle {

class OrbitBuilder {
 public:
  static Orbit make(ToggleWord word, std::vector<IndependentSet> states) {
    return Orbit(std::move(word), std::move(states));
  }
};

Orbit::Orbit(ToggleWord word, std::vector<IndependentSet> states)
    : word_(std::move(word)), states_(std::move(states)) {
  detail::rotate_to_min(states_);
  sorted_bits_.reserve(states_.size());
  for (const auto& s : states_) sorted_bits_.push_back(s.bits());
  std::sort(sorted_bits_.begin(), sorted_bits_.end());
}

Orbit Orbit::from_cycle(ToggleWord word, std::vector<IndependentSet> states) {
  if (states.empty()) throw std::domain_error("an orbit has at least one state");
  for (const auto& s : states) {
    if (s.n() != word.n()) throw std::domain_error("orbit state has the wrong n");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& next = states[(i + 1) % states.size()];
    if (apply_word(states[i], word) != next) {
      throw std::domain_error("state " + states[i].to_string() + " is not followed by " +
                              next.to_string() + " under " + word.to_string());
    }
  }
  Orbit o(std::move(word), std::move(states));
  if (std::adjacent_find(o.sorted_bits_.begin(), o.sorted_bits_.end()) != o.sorted_bits_.end()) {
    throw std::domain_error("orbit states are not distinct");
  }
  return o;
}

const IndependentSet& Orbit::state(long long i) const {
  const auto l = static_cast<long long>(states_.size());
  return states_[static_cast<std::size_t>(((i % l) + l) % l)];
}

bool Orbit::contains(const IndependentSet& s) const {
  return s.n() == n() && std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), s.bits());
}

std::optional<std::size_t> Orbit::index_of(const IndependentSet& s) const {
  auto it = std::find(states_.begin(), states_.end(), s);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

Orbit orbit_of(const IndependentSet& s, const ToggleWord& w) {
  std::vector<IndependentSet> states;
  IndependentSet cur = s;
  do {
    states.push_back(cur);
    cur = apply_word(cur, w);
  } while (cur != s);
  return OrbitBuilder::make(w, std::move(states));
}

std::vector<Orbit> all_orbits(int n, const ToggleWord& w, unsigned threads, int max_n) {
  if (w.n() != n) throw std::domain_error("word is over a different n");
  const auto universe = enumerate_independent_sets(n, max_n);
  auto cycles = detail::partition_cycles<IndependentSet>(
      universe, [&](const IndependentSet& s) { return apply_word(s, w); }, threads);
  std::vector<Orbit> out;
  out.reserve(cycles.size());
  for (auto& c : cycles) out.push_back(OrbitBuilder::make(w, std::move(c)));
  return out;
}

std::vector<long long> column_sums(const Orbit& o) {
  return detail::column_totals<IndependentSet>(o.n(), o.states());
}

Rational orbit_average(const Orbit& o, const Statistic& f) {
  if (f.n() != o.n()) throw std::domain_error("statistic and orbit have different n");
  return f.dot(column_sums(o)) / static_cast<long long>(o.size());
}

HomomesyReport check_homomesy(const std::vector<OrbitSummary>& orbits, const Statistic& f) {
  HomomesyReport report;
  report.orbit_count = orbits.size();
  report.homomesic = true;
  if (orbits.empty()) return report;
  auto average = [&](const OrbitSummary& o) {
    return f.dot(o.column_sums) / static_cast<long long>(o.size);
  };
  report.constant = average(orbits.front());
  for (std::size_t k = 1; k < orbits.size(); ++k) {
    Rational a = average(orbits[k]);
    if (a != report.constant) {
      report.homomesic = false;
      report.witnesses = std::array<OrbitWitness, 2>{
          OrbitWitness{orbits.front().representative, orbits.front().size, report.constant},
          OrbitWitness{orbits[k].representative, orbits[k].size, std::move(a)}};
      break;
    }
  }
  return report;
}

HomomesyReport check_homomesy(const std::vector<Orbit>& orbits, const Statistic& f) {
  std::vector<OrbitSummary> summaries;
  summaries.reserve(orbits.size());
  for (const auto& o : orbits) {
    if (o.n() != f.n()) throw std::domain_error("statistic and orbits have different n");
    summaries.push_back({o.representative().to_string(), o.size(), column_sums(o)});
  }
  return check_homomesy(summaries, f);
}

HomomesyReport check_homomesy(int n, const ToggleWord& w, const Statistic& f, int max_n) {
  return check_homomesy(all_orbits(n, w, 1, max_n), f);
}

std::string to_string(const HomomesyReport& r) {
  std::ostringstream os;
  if (r.homomesic) {
    os << to_string(r.constant) << "-mesic over " << r.orbit_count << " orbits";
  } else {
    os << "not homomesic";
    if (r.witnesses) {
      for (const auto& w : *r.witnesses) {
        os << "; orbit of " << w.representative << " (size " << w.size << ") has average "
           << to_string(w.average);
      }
    }
  }
  return os.str();
}

bool is_reversible(const Orbit& o) {
  return std::any_of(o.states().begin(), o.states().end(),
                     [&](const IndependentSet& s) { return o.contains(reverse(s)); });
}

int count_symmetrical_in(const Orbit& o) {
  return static_cast<int>(std::count_if(o.states().begin(), o.states().end(),
                                        [](const IndependentSet& s) { return is_symmetrical(s); }));
}

std::vector<std::size_t> orbit_size_multiset(const std::vector<Orbit>& orbits) {
  std::vector<std::size_t> sizes;
  sizes.reserve(orbits.size());
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace pathtoggle
