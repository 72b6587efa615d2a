#include "pathtoggle/orbit_io.hpp"

#include <sstream>

namespace pathtoggle {

nlohmann::json orbit_to_json(const Orbit& o) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : o.states()) states.push_back(s.to_string());
  return {{"n", o.n()},
          {"word", o.word().letters()},
          {"states", std::move(states)},
          {"column_sums", column_sums(o)}};
}

Orbit orbit_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  ToggleWord word(n, j.at("word").get<std::vector<int>>());
  std::vector<IndependentSet> states;
  for (const auto& s : j.at("states")) {
    states.push_back(IndependentSet::parse(s.get<std::string>()));
  }
  return Orbit::from_cycle(std::move(word), std::move(states));
}

std::string orbit_board_csv(const Orbit& o) {
  std::ostringstream os;
  for (int j = 1; j <= o.n(); ++j) os << (j > 1 ? "," : "") << j;
  os << '\n';
  for (const auto& s : o.states()) {
    for (int j = 1; j <= o.n(); ++j) os << (j > 1 ? "," : "") << (s.contains(j) ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

}  // namespace pathtoggle
