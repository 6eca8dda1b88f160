#include "domtri/sweep.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "domtri/error.h"

namespace domtri {

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names{"diamond_chain", "k4_chain", "three_tree", "eulerian", "random",
                                              "near",          "min_degree5", "odd_degree", "connected", "named"};
  return names;
}

namespace {

const std::vector<std::string> kNamedGraphs{"triangle", "k4", "octahedron", "icosahedron"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& s, const std::string& key) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("config: bad number '" + s + "' for " + key);
  return v;
}

std::vector<int> parse_ints(const std::string& value, const std::string& key) {
  std::vector<int> out;
  for (const std::string& part : split_list(value)) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_number<int>(part, key));
      continue;
    }
    const int lo = parse_number<int>(trim(part.substr(0, dots)), key);
    const int hi = parse_number<int>(trim(part.substr(dots + 2)), key);
    if (hi < lo) throw ParseError("config: empty range " + part + " for " + key);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ParseError("config: expected true or false for " + key);
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

// One table drives both parsing and serialization.
struct Field {
  std::function<void(SweepConfig&, const std::string&, const std::string&)> set;
  std::function<std::string(const SweepConfig&)> get;
};

template <class M>
Field ints(M member) {
  return {[member](SweepConfig& c, const std::string& v, const std::string& k) { c.*member = parse_ints(v, k); },
          [member](const SweepConfig& c) { return join_ints(c.*member); }};
}

Field integer(int SweepConfig::*member) {
  return {[member](SweepConfig& c, const std::string& v, const std::string& k) {
            c.*member = parse_number<int>(v, k);
          },
          [member](const SweepConfig& c) { return std::to_string(c.*member); }};
}

const std::vector<std::pair<std::string, Field>>& fields() {
  static const std::vector<std::pair<std::string, Field>> table{
      {"seed",
       {[](SweepConfig& c, const std::string& v, const std::string& k) {
          c.seed = parse_number<std::uint64_t>(v, k);
        },
        [](const SweepConfig& c) { return std::to_string(c.seed); }}},
      {"families",
       {[](SweepConfig& c, const std::string& v, const std::string&) {
          c.families = split_list(v);
          for (const std::string& f : c.families)
            if (std::find(known_families().begin(), known_families().end(), f) == known_families().end())
              throw ParseError("config: unknown family '" + f + "'");
        },
        [](const SweepConfig& c) { return join(c.families); }}},
      {"diamond_chain.k", ints(&SweepConfig::diamond_chain_k)},
      {"k4_chain.k", ints(&SweepConfig::k4_chain_k)},
      {"three_tree.n", ints(&SweepConfig::three_tree_n)},
      {"three_tree.reps", integer(&SweepConfig::three_tree_reps)},
      {"eulerian.t", ints(&SweepConfig::eulerian_t)},
      {"eulerian.reps", integer(&SweepConfig::eulerian_reps)},
      {"random.n", ints(&SweepConfig::random_n)},
      {"random.reps", integer(&SweepConfig::random_reps)},
      {"random.flips", integer(&SweepConfig::random_flips)},
      {"near.n", ints(&SweepConfig::near_n)},
      {"near.reps", integer(&SweepConfig::near_reps)},
      {"min_degree5.n", ints(&SweepConfig::min_degree5_n)},
      {"min_degree5.reps", integer(&SweepConfig::min_degree5_reps)},
      {"min_degree5.budget", integer(&SweepConfig::min_degree5_budget)},
      {"odd_degree.n", ints(&SweepConfig::odd_degree_n)},
      {"odd_degree.reps", integer(&SweepConfig::odd_degree_reps)},
      {"odd_degree.budget", integer(&SweepConfig::odd_degree_budget)},
      {"connected.n", ints(&SweepConfig::connected_n)},
      {"connected.reps", integer(&SweepConfig::connected_reps)},
      {"connected.removals", integer(&SweepConfig::connected_removals)},
      {"named",
       {[](SweepConfig& c, const std::string& v, const std::string&) {
          c.named = split_list(v);
          for (const std::string& g : c.named)
            if (std::find(kNamedGraphs.begin(), kNamedGraphs.end(), g) == kNamedGraphs.end())
              throw ParseError("config: unknown named graph '" + g + "'");
        },
        [](const SweepConfig& c) { return join(c.named); }}},
      {"oracle.iota_max_n",
       {[](SweepConfig& c, const std::string& v, const std::string& k) {
          c.oracle.iota_limit.max_vertices = parse_number<int>(v, k);
        },
        [](const SweepConfig& c) { return std::to_string(c.oracle.iota_limit.max_vertices); }}},
      {"oracle.gamma_max_n",
       {[](SweepConfig& c, const std::string& v, const std::string& k) {
          c.oracle.gamma_limit.max_vertices = parse_number<int>(v, k);
        },
        [](const SweepConfig& c) { return std::to_string(c.oracle.gamma_limit.max_vertices); }}},
      {"oracle.max_nodes",
       {[](SweepConfig& c, const std::string& v, const std::string& k) {
          c.oracle.iota_limit.max_nodes = c.oracle.gamma_limit.max_nodes = parse_number<long long>(v, k);
        },
        [](const SweepConfig& c) { return std::to_string(c.oracle.iota_limit.max_nodes); }}},
      {"threads", integer(&SweepConfig::threads)},
      {"report.timings",
       {[](SweepConfig& c, const std::string& v, const std::string& k) { c.timings = parse_bool(v, k); },
        [](const SweepConfig& c) { return std::string(c.timings ? "true" : "false"); }}},
      {"output.structured",
       {[](SweepConfig& c, const std::string& v, const std::string&) { c.structured_path = v; },
        [](const SweepConfig& c) { return c.structured_path; }}},
      {"output.tabular",
       {[](SweepConfig& c, const std::string& v, const std::string&) { c.tabular_path = v; },
        [](const SweepConfig& c) { return c.tabular_path; }}},
  };
  return table;
}

}  // namespace

std::string SweepConfig::to_text() const {
  std::ostringstream os;
  for (const auto& [key, field] : fields()) os << key << " = " << field.get(*this) << '\n';
  return os.str();
}

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& f) { return f.first == key; });
    if (it == table.end()) throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second.set(cfg, value, key);
  }
  if (cfg.threads < 1) throw ParseError("config: threads must be positive");
  return cfg;
}

SweepConfig read_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_sweep_config(os.str());
}

void apply_seed_override(SweepConfig& cfg) {
  const char* env = std::getenv("DOMTRI_SEED");
  if (env && *env) cfg.seed = parse_number<std::uint64_t>(trim(env), "DOMTRI_SEED");
}

std::vector<GraphItem> build_corpus(const SweepConfig& cfg) {
  std::vector<GraphItem> items;
  const Seed root{cfg.seed};
  for (const std::string& family : cfg.families) {
    const auto fam_index = static_cast<std::uint64_t>(
        std::find(known_families().begin(), known_families().end(), family) - known_families().begin());
    const Seed fam = root.derive(fam_index);
    auto item_seed = [&](int param, int rep) {
      return fam.derive(static_cast<std::uint64_t>(param)).derive(static_cast<std::uint64_t>(rep));
    };
    auto add = [&](std::string id, Seed s, PlaneGraph g, std::optional<BuildTrace> trace = {}) {
      items.push_back(GraphItem{family, std::move(id), s.value, std::move(g), std::move(trace)});
    };
    auto name = [&](const char* p, int v, int rep) {
      return family + "_" + p + std::to_string(v) + "_r" + std::to_string(rep);
    };

    if (family == "diamond_chain") {
      for (int k : cfg.diamond_chain_k) add(family + "_k" + std::to_string(k), Seed{0}, diamond_chain(k));
    } else if (family == "k4_chain") {
      for (int k : cfg.k4_chain_k) add(family + "_k" + std::to_string(k), Seed{0}, k4_chain(k));
    } else if (family == "three_tree") {
      for (int n : cfg.three_tree_n)
        for (int r = 0; r < cfg.three_tree_reps; ++r) {
          Generated gen = planar_three_tree(n, item_seed(n, r));
          add(name("n", n, r), item_seed(n, r), std::move(gen.graph), std::move(gen.trace));
        }
    } else if (family == "eulerian") {
      for (int t : cfg.eulerian_t)
        for (int r = 0; r < cfg.eulerian_reps; ++r) {
          Generated gen = recursive_eulerian(t, item_seed(t, r));
          add(name("t", t, r), item_seed(t, r), std::move(gen.graph), std::move(gen.trace));
        }
    } else if (family == "random") {
      for (int n : cfg.random_n)
        for (int r = 0; r < cfg.random_reps; ++r)
          add(name("n", n, r), item_seed(n, r), random_triangulation(n, item_seed(n, r), cfg.random_flips));
    } else if (family == "near") {
      for (int n : cfg.near_n)
        for (int r = 0; r < cfg.near_reps; ++r) {
          const Seed s = item_seed(n, r);
          const PlaneGraph t = random_triangulation(n + 1, s, cfg.random_flips);
          const auto v = static_cast<VertexId>(s.derive(7).value % static_cast<std::uint64_t>(n + 1));
          add(name("n", n, r), s, near_triangulation_from(t, v));
        }
    } else if (family == "min_degree5") {
      for (int n : cfg.min_degree5_n)
        for (int r = 0; r < cfg.min_degree5_reps; ++r)
          if (auto g = min_degree5_sample(n, item_seed(n, r), cfg.min_degree5_budget))
            add(name("n", n, r), item_seed(n, r), std::move(*g));
    } else if (family == "odd_degree") {
      for (int n : cfg.odd_degree_n)
        for (int r = 0; r < cfg.odd_degree_reps; ++r)
          if (auto g = all_odd_sample(n, item_seed(n, r), cfg.odd_degree_budget))
            add(name("n", n, r), item_seed(n, r), std::move(*g));
    } else if (family == "connected") {
      for (int n : cfg.connected_n)
        for (int r = 0; r < cfg.connected_reps; ++r)
          add(name("n", n, r), item_seed(n, r), random_connected_plane(n, item_seed(n, r), cfg.connected_removals));
    } else if (family == "named") {
      static const std::map<std::string, PlaneGraph (*)()> makers{
          {"triangle", triangle}, {"k4", k4}, {"octahedron", octahedron}, {"icosahedron", icosahedron}};
      for (const std::string& g : cfg.named) add(g, Seed{0}, makers.at(g)());
    }
  }
  return items;
}

std::vector<BoundReport> analyze_all(const std::vector<GraphItem>& items, const AnalysisOptions& options,
                                     int threads) {
  std::vector<BoundReport> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) out[i] = analyze(items[i], options);
  };
  const int count = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(items.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

std::vector<BoundReport> run_sweep(const SweepConfig& cfg) {
  return analyze_all(build_corpus(cfg), cfg.oracle, cfg.threads);
}

}  // namespace domtri
