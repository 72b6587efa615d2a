#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace pathtoggle::detail {

// Splits `universe` (sorted, duplicate-free) into the cycles of the bijection
// `step`. Each cycle starts at its least element and cycles are listed in
// increasing order of that element, whatever the thread count.
//
// With one thread this is a visited-set sweep. With more, each worker owns the
// start states of a contiguous shard and keeps only cycles whose minimum it
// owns, abandoning a walk as soon as it meets a smaller state.
template <class State, class Step>
std::vector<std::vector<State>> partition_cycles(std::span<const State> universe, Step step,
                                                 unsigned threads = 1) {
  auto index_of = [&](const State& s) {
    auto it = std::lower_bound(universe.begin(), universe.end(), s);
    if (it == universe.end() || *it != s) {
      throw std::logic_error("step left the state universe");
    }
    return static_cast<std::size_t>(it - universe.begin());
  };

  std::vector<std::vector<State>> cycles;
  if (threads <= 1 || universe.size() < 2 * threads) {
    std::vector<bool> seen(universe.size(), false);
    for (std::size_t k = 0; k < universe.size(); ++k) {
      if (seen[k]) continue;
      std::vector<State> cycle;
      State cur = universe[k];
      do {
        const std::size_t idx = index_of(cur);
        if (seen[idx]) throw std::logic_error("step is not a bijection on the universe");
        seen[idx] = true;
        cycle.push_back(cur);
        cur = step(cur);
      } while (cur != universe[k]);
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  const std::size_t shard = (universe.size() + threads - 1) / threads;
  std::vector<std::vector<std::pair<std::size_t, std::vector<State>>>> found(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t begin = t * shard;
        const std::size_t end = std::min(universe.size(), begin + shard);
        for (std::size_t k = begin; k < end; ++k) {
          const State& start = universe[k];
          std::vector<State> cycle{start};
          State cur = step(start);
          bool owner = true;
          while (cur != start) {
            if (cur < start) {
              owner = false;
              break;
            }
            if (cycle.size() > universe.size()) {
              throw std::logic_error("step is not a bijection on the universe");
            }
            cycle.push_back(cur);
            cur = step(cur);
          }
          if (owner) found[t].emplace_back(k, std::move(cycle));
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  // Shards are contiguous and each is scanned in order, so concatenation is sorted.
  std::size_t covered = 0;
  for (auto& part : found) {
    for (auto& [k, cycle] : part) {
      covered += cycle.size();
      cycles.push_back(std::move(cycle));
    }
  }
  if (covered != universe.size()) throw std::logic_error("cycles do not cover the universe");
  return cycles;
}

// Rotates a cycle so its least element comes first.
template <class State>
void rotate_to_min(std::vector<State>& cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
}

template <class State>
std::vector<long long> column_totals(int n, std::span<const State> states) {
  std::vector<long long> sums(static_cast<std::size_t>(n), 0);
  for (const auto& s : states) {
    for (int j = 1; j <= n; ++j) {
      if (s.contains(j)) ++sums[static_cast<std::size_t>(j - 1)];
    }
  }
  return sums;
}

}  // namespace pathtoggle::detail
