#include "pathtoggle/cli.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathtoggle/coxeter.hpp"
#include "pathtoggle/enumeration.hpp"
#include "pathtoggle/oracles.hpp"
#include "pathtoggle/orbit_io.hpp"
#include "pathtoggle/snakes.hpp"
#include "pathtoggle/zigzag.hpp"

namespace pathtoggle {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Globals {
  int n = 0;
  std::string word;
  std::string format = "text";
  int max_n = kDefaultMaxN;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

class Context {
 public:
  Context(const Globals& g, std::ostream& out) : g_(g), out_(out), rng_(g.seed) {
    if (g.format == "json") {
      format_ = Format::Json;
    } else if (g.format == "csv") {
      format_ = Format::Csv;
    }
  }

  Format format() const { return format_; }
  std::ostream& out() { return out_; }
  std::mt19937_64& rng() { return rng_; }
  int max_n() const { return g_.max_n; }
  unsigned threads() const { return g_.threads; }
  bool has_n() const { return g_.n != 0; }

  // n for commands that enumerate I_n.
  int n() const {
    if (g_.n < 2) throw std::invalid_argument("-n must be given and at least 2");
    check_capacity(g_.n, g_.max_n);
    return g_.n;
  }

  // Resolves -w against n: phi, pro, row, random or an index list.
  ToggleWord word(int n, const std::string& fallback) {
    const std::string spec = g_.word.empty() ? fallback : g_.word;
    if (spec == "phi" || spec == "pro") return ToggleWord::phi(n);
    if (spec == "row") return rowmotion_word(n);
    if (spec == "random") return random_coxeter_word(n, rng_).word();
    return ToggleWord::parse(n, spec);
  }

  void json_out(json j) {
    j["schema_version"] = kSchemaVersion;
    out_ << j.dump(2) << '\n';
  }

 private:
  Globals g_;
  Format format_ = Format::Text;
  std::ostream& out_;
  std::mt19937_64 rng_;
};

std::string join(const std::vector<long long>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? sep : "") << v[k];
  return os.str();
}

template <class T>
std::vector<long long> as_ll(const std::vector<T>& v) {
  return std::vector<long long>(v.begin(), v.end());
}

std::vector<int> parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad range \"" + text + "\"; expected N or A..B");
    }
    return v;
  };
  const auto dots = text.find("..");
  int lo = 0, hi = 0;
  if (dots == std::string::npos) {
    lo = hi = number(text);
  } else {
    lo = number(std::string_view(text).substr(0, dots));
    hi = number(std::string_view(text).substr(dots + 2));
  }
  if (lo > hi) throw std::invalid_argument("empty range \"" + text + "\"");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- orbits

void print_board_text(std::ostream& os, const OrbitBoard& board) {
  const int n = board.n();
  os << "      ";
  for (int j = 1; j <= n; ++j) os << std::setw(3) << j;
  os << '\n';
  for (std::size_t i = 0; i < board.rows(); ++i) {
    os << "S^" << std::left << std::setw(4) << i << std::right;
    for (int j = 1; j <= n; ++j) os << std::setw(3) << board.at(static_cast<long long>(i), j);
    os << '\n';
  }
  os << "Total ";
  for (long long c : column_sums(board.orbit())) os << std::setw(3) << c;
  os << '\n';
}

json orbit_record(const Orbit& o) {
  json j = orbit_to_json(o);
  j["size"] = o.size();
  j["representative"] = o.representative().to_string();
  j["reversible"] = is_reversible(o);
  j["symmetrical"] = count_symmetrical_in(o);
  return j;
}

int cmd_orbits(Context& ctx, const std::string& start) {
  const int n = ctx.n();
  const ToggleWord w = ctx.word(n, "phi");

  if (!start.empty()) {
    const auto s = IndependentSet::parse(start);
    if (s.n() != n) throw std::invalid_argument("--start has length " + std::to_string(s.n()));
    const Orbit o = orbit_of(s, w);
    const OrbitBoard board(o, static_cast<long long>(*o.index_of(s)));
    switch (ctx.format()) {
      case Format::Json: {
        json j = orbit_record(o);
        j["command"] = "orbits";
        ctx.json_out(std::move(j));
        break;
      }
      case Format::Csv:
        ctx.out() << orbit_board_csv(o);
        break;
      case Format::Text:
        ctx.out() << "orbit of " << s.to_string() << " under " << w.to_string() << ": size "
                  << o.size() << ", reversible " << (is_reversible(o) ? "yes" : "no")
                  << ", symmetrical members " << count_symmetrical_in(o) << '\n';
        print_board_text(ctx.out(), board);
        break;
    }
    return 0;
  }

  const auto orbits = all_orbits(n, w, ctx.threads(), ctx.max_n());
  switch (ctx.format()) {
    case Format::Json: {
      json list = json::array();
      for (const auto& o : orbits) list.push_back(orbit_record(o));
      ctx.json_out({{"command", "orbits"},
                    {"n", n},
                    {"word", w.letters()},
                    {"orbit_count", orbits.size()},
                    {"orbits", list}});
      break;
    }
    case Format::Csv: {
      ctx.out() << "index,size,representative,reversible,symmetrical";
      for (int j = 1; j <= n; ++j) ctx.out() << ",c" << j;
      ctx.out() << '\n';
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        const auto& o = orbits[k];
        ctx.out() << k + 1 << ',' << o.size() << ',' << o.representative().to_string() << ','
                  << (is_reversible(o) ? "true" : "false") << ',' << count_symmetrical_in(o) << ','
                  << join(column_sums(o)) << '\n';
      }
      break;
    }
    case Format::Text: {
      ctx.out() << "n = " << n << ", word = " << w.to_string() << '\n'
                << "orbits: " << orbits.size() << '\n'
                << "sizes: " << join(as_ll(orbit_size_multiset(orbits)), " ") << '\n'
                << "#    size  representative  reversible  symmetrical  column sums\n";
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        const auto& o = orbits[k];
        ctx.out() << std::left << std::setw(5) << k + 1 << std::setw(6) << o.size()
                  << std::setw(16) << o.representative().to_string() << std::setw(12)
                  << (is_reversible(o) ? "yes" : "no") << std::setw(13) << count_symmetrical_in(o)
                  << std::right << join(column_sums(o)) << '\n';
      }
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- homomesy

json report_json(const HomomesyReport& r) {
  json j{{"homomesic", r.homomesic}, {"orbit_count", r.orbit_count}};
  if (r.homomesic) {
    j["constant"] = to_string(r.constant);
  } else if (r.witnesses) {
    json ws = json::array();
    for (const auto& w : *r.witnesses) {
      ws.push_back({{"representative", w.representative},
                    {"size", w.size},
                    {"average", to_string(w.average)}});
    }
    j["witnesses"] = ws;
  }
  return j;
}

int cmd_homomesy(Context& ctx, const std::string& statistic, int samples) {
  const int n = ctx.n();
  if (statistic.empty()) throw std::invalid_argument("homomesy needs -f STATISTIC");
  const Statistic f = Statistic::parse(n, statistic);
  std::vector<ToggleWord> words{ctx.word(n, "phi")};
  for (int k = 0; k < samples; ++k) words.push_back(random_coxeter_word(n, ctx.rng()).word());

  std::vector<HomomesyReport> reports;
  bool all = true;
  for (const auto& w : words) {
    reports.push_back(check_homomesy(all_orbits(n, w, ctx.threads(), ctx.max_n()), f));
    all = all && reports.back().homomesic;
  }

  switch (ctx.format()) {
    case Format::Json: {
      json list = json::array();
      for (std::size_t k = 0; k < words.size(); ++k) {
        json r = report_json(reports[k]);
        r["word"] = words[k].letters();
        list.push_back(std::move(r));
      }
      ctx.json_out({{"command", "homomesy"},
                    {"n", n},
                    {"statistic", f.to_string()},
                    {"all_homomesic", all},
                    {"results", list}});
      break;
    }
    case Format::Csv:
      ctx.out() << "word,homomesic,constant,orbit_count\n";
      for (std::size_t k = 0; k < words.size(); ++k) {
        ctx.out() << '"' << words[k].to_list() << "\"," << (reports[k].homomesic ? "true" : "false")
                  << ',' << (reports[k].homomesic ? to_string(reports[k].constant) : "") << ','
                  << reports[k].orbit_count << '\n';
      }
      break;
    case Format::Text:
      for (std::size_t k = 0; k < words.size(); ++k) {
        ctx.out() << f.to_string() << " under " << words[k].to_string() << ": "
                  << to_string(reports[k]) << '\n';
      }
      break;
  }
  return all ? 0 : 1;
}

// ---------------------------------------------------------------- snakes

char snake_label(std::size_t k) {
  static const std::string letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  return k < letters.size() ? letters[k] : '#';
}

std::vector<std::string> labelled_rows(const OrbitBoard& board, const std::vector<Snake>& snakes) {
  const auto rows = static_cast<long long>(board.rows());
  std::vector<std::string> grid(board.rows(), std::string(static_cast<std::size_t>(board.n()), '.'));
  for (std::size_t k = 0; k < snakes.size(); ++k) {
    for (const auto& cell : snakes[k].cells) {
      const auto r = static_cast<std::size_t>(((cell.row % rows) + rows) % rows);
      grid[r][static_cast<std::size_t>(cell.column - 1)] = snake_label(k);
    }
  }
  return grid;
}

json snakes_json(const OrbitBoard& board, const std::vector<Snake>& snakes) {
  json list = json::array();
  for (std::size_t k = 0; k < snakes.size(); ++k) {
    json cells = json::array();
    for (const auto& c : snakes[k].cells) cells.push_back({c.row, c.column});
    list.push_back({{"label", std::string(1, snake_label(k))},
                    {"composition", snakes[k].composition.to_string()},
                    {"start_row", snakes[k].start_row()},
                    {"cells", cells}});
  }
  json rows = json::array();
  for (std::size_t i = 0; i < board.rows(); ++i) rows.push_back(board.row(static_cast<long long>(i)).to_string());
  return {{"n", board.n()},
          {"size", board.rows()},
          {"rows", rows},
          {"labelled_rows", labelled_rows(board, snakes)},
          {"column_sums", column_sums(board.orbit())},
          {"snakes", list}};
}

void print_snake_board(std::ostream& os, const OrbitBoard& board, const std::vector<Snake>& snakes) {
  const auto grid = labelled_rows(board, snakes);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << "S^" << std::left << std::setw(4) << i << std::right;
    for (char c : grid[i]) os << ' ' << c;
    os << '\n';
  }
  for (std::size_t k = 0; k < snakes.size(); ++k) {
    os << snake_label(k) << ": " << snakes[k].composition.to_string() << " from row "
       << snakes[k].start_row() << '\n';
  }
}

void print_snake_csv(std::ostream& os, const OrbitBoard& board, const std::vector<Snake>& snakes) {
  const auto grid = labelled_rows(board, snakes);
  os << "row";
  for (int j = 1; j <= board.n(); ++j) os << ',' << j;
  os << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << i;
    for (char c : grid[i]) os << ',' << (c == '.' ? '0' : c);
    os << '\n';
  }
}

int show_snake_board(Context& ctx, const OrbitBoard& board, const std::string& heading, json extra) {
  const auto snakes = snake_decompose(board);
  switch (ctx.format()) {
    case Format::Json: {
      json j = snakes_json(board, snakes);
      j["command"] = "snakes";
      j.update(extra);
      ctx.json_out(std::move(j));
      break;
    }
    case Format::Csv:
      print_snake_csv(ctx.out(), board, snakes);
      break;
    case Format::Text:
      ctx.out() << heading;
      print_snake_board(ctx.out(), board, snakes);
      break;
  }
  return 0;
}

int snakes_from_composition(Context& ctx, const std::string& text) {
  const auto c = SnakeComposition::parse(text);
  check_capacity(c.ambient_n(), ctx.max_n());
  const auto laid = lay_snakes(c);
  const Orbit o = Orbit::from_cycle(ToggleWord::phi(c.ambient_n()), laid);
  const OrbitBoard board(o, static_cast<long long>(*o.index_of(laid.front())));
  const long long predicted = orbit_size(c);
  const bool agrees = predicted == static_cast<long long>(o.size());

  std::ostringstream head;
  head << "composition " << c.to_string() << " of " << c.sum() << " (n = " << c.ambient_n()
       << "): N1 = " << c.n1() << ", N2 = " << c.n2() << ", psi = " << c.psi() << '\n'
       << "predicted size (3 N1 + 2 N2) / psi = " << predicted << ", laid orbit size " << o.size()
       << '\n';
  if (c.psi() > 1) {
    head << "note: " << c.to_string() << " repeats its segment "
         << c.to_string().substr(0, c.length() / static_cast<std::size_t>(c.psi())) << ' '
         << c.psi() << " times, so the naive size " << 3 * c.n1() + 2 * c.n2() << " is divided by "
         << c.psi() << '\n';
  }
  const int code = show_snake_board(ctx, board, head.str(),
                                    {{"composition", c.to_string()},
                                     {"psi", c.psi()},
                                     {"predicted_size", predicted},
                                     {"size_matches", agrees}});
  return agrees ? code : 1;
}

int snakes_from_start(Context& ctx, const std::string& start) {
  const int n = ctx.n();
  const auto s = IndependentSet::parse(start);
  if (s.n() != n) throw std::invalid_argument("--start has length " + std::to_string(s.n()));
  const Orbit o = orbit_of(s, ToggleWord::phi(n));
  const OrbitBoard board(o, static_cast<long long>(*o.index_of(s)));
  std::ostringstream head;
  head << "phi-orbit of " << s.to_string() << ": size " << o.size() << '\n';
  return show_snake_board(ctx, board, head.str(), {{"start", s.to_string()}});
}

int snakes_table(Context& ctx, int max_m) {
  if (max_m < 2) throw std::invalid_argument("--table needs M >= 2");
  switch (ctx.format()) {
    case Format::Json: {
      json rows = json::array();
      for (int m = 2; m <= max_m; ++m) {
        for (const auto& r : sizes_table(m)) {
          rows.push_back({{"size", m},
                          {"class", r.class_string()},
                          {"snake_period", r.snake_period.to_string()},
                          {"modulus", r.modulus}});
        }
      }
      ctx.json_out({{"command", "snakes"}, {"table", rows}});
      break;
    }
    case Format::Csv:
      ctx.out() << "size,class,snake_period,modulus\n";
      for (int m = 2; m <= max_m; ++m) {
        for (const auto& r : sizes_table(m)) {
          ctx.out() << m << ',' << r.class_string() << ',' << r.snake_period.to_string() << ','
                    << r.modulus << '\n';
        }
      }
      break;
    case Format::Text:
      ctx.out() << render_sizes_table(max_m);
      break;
  }
  return 0;
}

int snakes_classes(Context& ctx) {
  const int n = ctx.n();
  const auto classes = composition_classes(n - 1);
  switch (ctx.format()) {
    case Format::Json: {
      json list = json::array();
      for (const auto& c : classes) {
        list.push_back({{"composition", c.to_string()},
                        {"size", orbit_size(c)},
                        {"psi", c.psi()},
                        {"reversible", class_is_reversible(c)}});
      }
      ctx.json_out({{"command", "snakes"}, {"n", n}, {"classes", list}});
      break;
    }
    case Format::Csv:
      ctx.out() << "composition,size,psi,reversible\n";
      for (const auto& c : classes) {
        ctx.out() << c.to_string() << ',' << orbit_size(c) << ',' << c.psi() << ','
                  << (class_is_reversible(c) ? "true" : "false") << '\n';
      }
      break;
    case Format::Text:
      ctx.out() << classes.size() << " composition classes of " << n - 1 << '\n';
      for (const auto& c : classes) {
        ctx.out() << std::left << std::setw(static_cast<int>(n) + 2) << c.to_string() << std::right
                  << "size " << orbit_size(c) << (c.psi() > 1 ? "  psi " + std::to_string(c.psi()) : "")
                  << (class_is_reversible(c) ? "  reversible" : "") << '\n';
      }
      break;
  }
  return 0;
}

// ---------------------------------------------------------------- count

struct Sequence {
  std::string name;
  std::uint64_t (*formula)(int);
  std::uint64_t (*oracle)(int);
};

int cmd_count(Context& ctx, const std::vector<std::pair<Sequence, std::string>>& requests) {
  if (requests.empty()) throw std::invalid_argument("count needs at least one sequence flag");
  struct Row {
    std::string sequence;
    int n;
    std::uint64_t formula, oracle;
  };
  std::vector<Row> rows;
  for (const auto& [seq, range] : requests) {
    for (int v : parse_range(range)) rows.push_back({seq.name, v, seq.formula(v), seq.oracle(v)});
  }
  bool all = true;
  for (const auto& r : rows) all = all && r.formula == r.oracle;

  switch (ctx.format()) {
    case Format::Json: {
      json list = json::array();
      for (const auto& r : rows) {
        list.push_back({{"sequence", r.sequence},
                        {"n", r.n},
                        {"formula", r.formula},
                        {"oracle", r.oracle},
                        {"match", r.formula == r.oracle}});
      }
      ctx.json_out({{"command", "count"}, {"all_match", all}, {"rows", list}});
      break;
    }
    case Format::Csv:
      ctx.out() << "sequence,n,formula,oracle,match\n";
      for (const auto& r : rows) {
        ctx.out() << r.sequence << ',' << r.n << ',' << r.formula << ',' << r.oracle << ','
                  << (r.formula == r.oracle ? "true" : "false") << '\n';
      }
      break;
    case Format::Text: {
      std::string current;
      for (const auto& r : rows) {
        if (r.sequence != current) {
          current = r.sequence;
          ctx.out() << current << '\n' << "   n       formula        oracle  match\n";
        }
        ctx.out() << std::setw(4) << r.n << std::setw(14) << r.formula << std::setw(14) << r.oracle
                  << "  " << (r.formula == r.oracle ? "yes" : "NO") << '\n';
      }
      break;
    }
  }
  return all ? 0 : 1;
}

// ---------------------------------------------------------------- conjugate

int cmd_conjugate(Context& ctx, bool verify_orbits) {
  const int n = ctx.n();
  const CoxeterWord w(ctx.word(n, "phi"));
  const PathToPhi path = path_to_phi(w);
  const ToggleWord conjugated = path.u.inverse() * w.word() * path.u;
  const bool reaches_phi = semantically_equal(conjugated, ToggleWord::phi(n), ctx.max_n());

  std::vector<CorrespondenceReport> reports;
  bool orbits_ok = true;
  if (verify_orbits) {
    for (const auto& step : path.steps) {
      reports.push_back(verify_orbit_correspondence(step.before, step.k, ctx.max_n()));
      orbits_ok = orbits_ok && reports.back().ok;
    }
  }

  switch (ctx.format()) {
    case Format::Json: {
      json steps = json::array();
      for (std::size_t k = 0; k < path.steps.size(); ++k) {
        const auto& s = path.steps[k];
        json step{{"k", s.k},
                  {"kind", s.kind == ConjugationKind::ByFinal ? "final" : "initial"},
                  {"before", s.before.letters()},
                  {"after", s.after.letters()},
                  {"orientation", coxeter_to_orientation(s.after).to_string()}};
        if (verify_orbits) {
          step["orbits_correspond"] = reports[k].ok;
          if (!reports[k].ok) step["failure"] = reports[k].failure;
        }
        steps.push_back(std::move(step));
      }
      ctx.json_out({{"command", "conjugate"},
                    {"n", n},
                    {"word", w.letters()},
                    {"orientation", coxeter_to_orientation(w).to_string()},
                    {"steps", steps},
                    {"u", path.u.letters()},
                    {"conjugates_to_phi", reaches_phi}});
      break;
    }
    case Format::Csv:
      ctx.out() << "step,k,kind,after,orientation\n";
      for (std::size_t k = 0; k < path.steps.size(); ++k) {
        const auto& s = path.steps[k];
        ctx.out() << k + 1 << ',' << s.k << ',' << (s.kind == ConjugationKind::ByFinal ? "final" : "initial")
                  << ",\"" << s.after.word().to_list() << "\"," << coxeter_to_orientation(s.after).to_string()
                  << '\n';
      }
      break;
    case Format::Text:
      ctx.out() << render_trace(w, path);
      ctx.out() << "u^-1 w u = phi on all of I_" << n << ": " << (reaches_phi ? "yes" : "NO") << '\n';
      if (verify_orbits) {
        for (std::size_t k = 0; k < reports.size(); ++k) {
          ctx.out() << "step " << k + 1 << " (t" << path.steps[k].k << "): "
                    << reports[k].orbits_checked << " orbits "
                    << (reports[k].ok ? "correspond" : "FAIL: " + reports[k].failure) << '\n';
        }
      }
      break;
  }
  return reaches_phi && orbits_ok ? 0 : 1;
}

// ---------------------------------------------------------------- zigzag

int zigzag_check_eta(Context& ctx, int n) {
  const auto sets = enumerate_independent_sets(n, ctx.max_n());
  const ToggleWord phi = ToggleWord::phi(n), pro = promotion_word(n);
  std::size_t bad = 0;
  std::string first;
  for (const auto& s : sets) {
    bool ok = eta_inverse(eta(s)) == s && apply_ideal_word(eta(s), pro) == eta(apply_word(s, phi));
    for (int i = 1; i <= n && ok; ++i) ok = eta(toggle(s, i)) == ideal_toggle(eta(s), i);
    if (!ok) {
      if (bad++ == 0) first = s.to_string();
    }
  }
  switch (ctx.format()) {
    case Format::Json: {
      json j{{"command", "zigzag"}, {"n", n}, {"states", sets.size()}, {"equivariant", bad == 0}};
      if (bad) j["first_failure"] = first;
      ctx.json_out(std::move(j));
      break;
    }
    case Format::Csv:
      ctx.out() << "n,states,failures\n" << n << ',' << sets.size() << ',' << bad << '\n';
      break;
    case Format::Text:
      if (bad == 0) {
        ctx.out() << "eta is equivariant on all " << sets.size() << " independent sets of I_" << n
                  << " for every toggle, and eta(phi(S)) = Pro(eta(S))\n";
      } else {
        ctx.out() << "eta fails on " << bad << " states, first " << first << '\n';
      }
      break;
  }
  return bad == 0 ? 0 : 1;
}

json ideal_orbit_json(const IdealOrbit& o) {
  json states = json::array();
  for (const auto& I : o.states) states.push_back(I.to_string());
  const auto s = summarize(o);
  return {{"size", o.size()}, {"states", states}, {"column_sums", s.column_sums}};
}

int zigzag_orbits(Context& ctx, int n, const ToggleWord& w) {
  const auto orbits = all_ideal_orbits(n, w, ctx.threads(), ctx.max_n());
  const auto sizes = ideal_orbit_size_multiset(orbits);
  const auto phi_sizes = orbit_size_multiset(all_orbits(n, ToggleWord::phi(n), ctx.threads(), ctx.max_n()));
  const bool match = sizes == phi_sizes;
  switch (ctx.format()) {
    case Format::Json: {
      json list = json::array();
      for (const auto& o : orbits) list.push_back(ideal_orbit_json(o));
      ctx.json_out({{"command", "zigzag"},
                    {"n", n},
                    {"word", w.letters()},
                    {"orbit_count", orbits.size()},
                    {"orbits", list},
                    {"sizes_match_phi", match}});
      break;
    }
    case Format::Csv:
      ctx.out() << "index,size,representative";
      for (int j = 1; j <= n; ++j) ctx.out() << ",c" << j;
      ctx.out() << '\n';
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        ctx.out() << k + 1 << ',' << orbits[k].size() << ',' << orbits[k].states.front().to_string()
                  << ',' << join(summarize(orbits[k]).column_sums) << '\n';
      }
      break;
    case Format::Text:
      ctx.out() << "ideal orbits of " << w.to_string() << " on J(Z_" << n << "): " << orbits.size()
                << '\n'
                << "sizes: " << join(as_ll(sizes), " ") << '\n'
                << "phi-orbit sizes on I_" << n << ": " << join(as_ll(phi_sizes), " ")
                << (match ? "  (equal)" : "  (DIFFERENT)") << '\n';
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        ctx.out() << std::left << std::setw(5) << k + 1 << std::setw(6) << orbits[k].size()
                  << std::right << orbits[k].states.front().to_string() << '\n';
      }
      break;
  }
  return match ? 0 : 1;
}

int zigzag_single_orbit(Context& ctx, const IdealOrbit& o, const ToggleWord& w, const std::string& what) {
  switch (ctx.format()) {
    case Format::Json: {
      json j = ideal_orbit_json(o);
      j["command"] = "zigzag";
      j["word"] = w.letters();
      ctx.json_out(std::move(j));
      break;
    }
    case Format::Csv:
      ctx.out() << "index,ideal\n";
      for (std::size_t k = 0; k < o.size(); ++k) ctx.out() << k << ',' << o.states[k].to_string() << '\n';
      break;
    case Format::Text:
      ctx.out() << "orbit of " << what << " under " << w.to_string() << ": size " << o.size() << '\n';
      for (const auto& I : o.states) ctx.out() << "  " << I.to_string() << '\n';
      break;
  }
  return 0;
}

int zigzag_homomesy(Context& ctx, int n, const ToggleWord& w) {
  bool all = true;
  json list = json::array();
  std::ostringstream text, csv;
  csv << "statistic,expected,homomesic,constant\n";
  for (const auto& e : zigzag_homomesies(n)) {
    const auto r = check_ideal_homomesy(n, w, e.statistic, ctx.max_n());
    const bool ok = r.homomesic && r.constant == e.constant;
    all = all && ok;
    list.push_back({{"statistic", e.label},
                    {"expected", to_string(e.constant)},
                    {"homomesic", r.homomesic},
                    {"constant", r.homomesic ? to_string(r.constant) : ""},
                    {"ok", ok}});
    text << e.label << ": " << to_string(r) << (ok ? "" : "  (expected " + to_string(e.constant) + "-mesic)")
         << '\n';
    csv << e.label << ',' << to_string(e.constant) << ',' << (r.homomesic ? "true" : "false") << ','
        << (r.homomesic ? to_string(r.constant) : "") << '\n';
  }
  switch (ctx.format()) {
    case Format::Json:
      ctx.json_out({{"command", "zigzag"}, {"n", n}, {"word", w.letters()}, {"statistics", list}, {"all_ok", all}});
      break;
    case Format::Csv:
      ctx.out() << csv.str();
      break;
    case Format::Text:
      ctx.out() << "statistics on J(Z_" << n << ") under " << w.to_string() << " (x_j means chi of a_j)\n"
                << text.str();
      break;
  }
  return all ? 0 : 1;
}

struct ZigzagFlags {
  bool check_eta = false;
  bool orbits = false;
  bool empty_orbit = false;
  bool homomesy = false;
  std::string show;
};

int cmd_zigzag(Context& ctx, const ZigzagFlags& flags) {
  const int n = ctx.n();
  const ToggleWord w = ctx.word(n, "pro");
  if (flags.check_eta) return zigzag_check_eta(ctx, n);
  if (flags.empty_orbit) return zigzag_single_orbit(ctx, ideal_orbit_of(OrderIdeal::empty(n), w), w, "the empty ideal");
  if (flags.homomesy) return zigzag_homomesy(ctx, n, w);
  if (!flags.show.empty()) {
    const auto I = OrderIdeal::parse(flags.show);
    if (I.n() != n) throw std::invalid_argument("--show has length " + std::to_string(I.n()));
    if (ctx.format() == Format::Json) {
      ctx.json_out({{"command", "zigzag"}, {"ideal", I.to_string()}, {"hasse", render_hasse(I)},
                    {"independent_set", eta_inverse(I).to_string()}});
    } else {
      ctx.out() << render_hasse(I) << "eta^-1: " << eta_inverse(I).to_string() << '\n';
    }
    return 0;
  }
  return zigzag_orbits(ctx, n, w);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toggling independent sets of path graphs: orbits, homomesy, snakes, counts"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("-n", g.n, "number of vertices");
  app.add_option("-w,--word", g.word, "toggle word: phi, pro, row, random, or a list such as 3,4,2");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-n", g.max_n, "refuse to enumerate I_n beyond this n")->check(CLI::Range(1, kHardMaxN));
  app.add_option("--threads", g.threads, "worker threads for orbit partitions")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "seed for random Coxeter words");

  std::string start;
  auto* orbits = app.add_subcommand("orbits", "partition I_n into orbits of a toggle word")->fallthrough();
  orbits->add_option("--start", start, "show only the orbit board of this set");

  std::string statistic;
  int samples = 0;
  auto* homomesy = app.add_subcommand("homomesy", "check a linear statistic for homomesy")->fallthrough();
  homomesy->add_option("-f,--statistic", statistic, "statistic such as 2x1+x2 or x3-x7")->required();
  homomesy->add_option("--samples", samples, "also check this many random Coxeter words")->check(CLI::NonNegativeNumber);

  std::string composition, snake_start;
  int table = 0;
  bool classes = false;
  auto* snakes = app.add_subcommand("snakes", "snake decompositions and orbit sizes")->fallthrough();
  auto* comp_opt = snakes->add_option("--composition", composition, "lay the snakes of a composition such as 221121");
  auto* start_opt = snakes->add_option("--start", snake_start, "decompose the phi-orbit board of this set");
  auto* table_opt = snakes->add_option("--table", table, "orbit sizes table up to size M");
  auto* classes_opt = snakes->add_flag("--classes", classes, "composition classes of n - 1");
  snakes->require_option(1);
  comp_opt->excludes(start_opt, table_opt, classes_opt);
  start_opt->excludes(table_opt, classes_opt);
  table_opt->excludes(classes_opt);

  std::vector<std::pair<Sequence, std::string>> requests;
  auto* count = app.add_subcommand("count", "closed-form counts against brute force")->fallthrough();
  const std::vector<std::pair<std::string, Sequence>> sequences = {
      {"--orbits", {"phi-orbits", count_phi_orbits, oracle::phi_orbit_count}},
      {"--reversible", {"reversible orbits", count_reversible_orbits, oracle::reversible_orbit_count}},
      {"--necklaces", {"necklaces", count_necklaces_no11, oracle::necklaces}},
      {"--bracelets", {"bracelets", count_bracelets_no11, oracle::bracelets}},
      {"--self-reverse", {"self-reverse necklaces", count_self_reverse_necklaces, oracle::self_reverse_necklaces}},
      {"--independent", {"independent sets", count_independent_sets, oracle::independent_sets}},
      {"--symmetrical", {"symmetrical sets", count_symmetrical, oracle::symmetrical}},
      {"--open", {"open strings", count_strings_no11_open, oracle::strings_no11_open}},
  };
  std::vector<std::string> ranges(sequences.size());
  for (std::size_t k = 0; k < sequences.size(); ++k) {
    count->add_option(sequences[k].first, ranges[k], sequences[k].second.name + " for N or A..B");
  }

  bool verify_orbits = false;
  auto* conjugate = app.add_subcommand("conjugate", "admissible conjugations from a Coxeter word to phi")->fallthrough();
  conjugate->add_flag("--verify-orbits", verify_orbits, "check the orbit bijection at every step");

  ZigzagFlags zflags;
  auto* zigzag = app.add_subcommand("zigzag", "order ideals of the zigzag poset")->fallthrough();
  zigzag->add_flag("--check-eta", zflags.check_eta, "check that eta intertwines the toggles");
  zigzag->add_flag("--orbits", zflags.orbits, "list orbits and compare sizes with phi");
  zigzag->add_flag("--empty-orbit", zflags.empty_orbit, "orbit of the empty ideal");
  zigzag->add_flag("--homomesy", zflags.homomesy, "check the translated homomesies");
  zigzag->add_option("--show", zflags.show, "draw an ideal such as 0011111");

  std::vector<const char*> argv{"pathtoggle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Context ctx(g, out);
    if (*orbits) return cmd_orbits(ctx, start);
    if (*homomesy) return cmd_homomesy(ctx, statistic, samples);
    if (*snakes) {
      if (!composition.empty()) return snakes_from_composition(ctx, composition);
      if (!snake_start.empty()) return snakes_from_start(ctx, snake_start);
      if (table != 0) return snakes_table(ctx, table);
      return snakes_classes(ctx);
    }
    if (*count) {
      for (std::size_t k = 0; k < sequences.size(); ++k) {
        if (!ranges[k].empty()) requests.emplace_back(sequences[k].second, ranges[k]);
      }
      return cmd_count(ctx, requests);
    }
    if (*conjugate) return cmd_conjugate(ctx, verify_orbits);
    if (*zigzag) return cmd_zigzag(ctx, zflags);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pathtoggle
