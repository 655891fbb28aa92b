#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "geoclique/clique.hpp"
#include "geoclique/gadget.hpp"
#include "geoclique/geom.hpp"
#include "geoclique/graph_io.hpp"
#include "geoclique/mis.hpp"
#include "geoclique/rng.hpp"
#include "geoclique/structural.hpp"
#include "json.hpp"

namespace geoclique::cli {

namespace {

using nlohmann::json;

struct Input {
  std::optional<GeometricInstance> instance;
  Graph graph;
  std::optional<Graph> expected;  // bundles produced by `gadget`
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot open");
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError(path + ": cannot write");
  f << text;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

Input load_input(const std::string& path, std::istream& in) {
  const std::string text = read_text(path, in);
  const auto first = text.find_first_not_of(" \t\r\n");
  Input out;
  if (first == std::string::npos || text[first] != '{') {
    out.graph = load_dimacs(text);
    return out;
  }
  const json j = parse_json(text, path);
  if (j.contains("instance")) {
    out.instance = load_instance(j["instance"].dump());
    if (j.contains("expected")) out.expected = load_graph_json(j["expected"].dump());
  } else if (j.contains("objects")) {
    out.instance = load_instance(text);
  } else {
    out.graph = load_graph_json(text);
    return out;
  }
  out.graph = build_intersection_graph(*out.instance).graph;
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GEOCLIQUE_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end) throw InputError(std::string("GEOCLIQUE_SEED: not an unsigned integer: ") + env);
  return v;
}

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

// Min-degree greedy; alpha(G)/n is at least the returned ratio.
double greedy_beta(const Graph& g) {
  if (g.size() == 0) return 1;
  Bitset alive = g.all();
  std::size_t picked = 0;
  while (alive.any()) {
    VertexId best = 0;
    std::size_t best_deg = SIZE_MAX;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (!alive.test(v)) continue;
      const std::size_t d = (g.neighbors(v) & alive).count();
      if (d < best_deg) best_deg = d, best = v;
    }
    alive = alive - g.closed_neighbors(best);
    ++picked;
  }
  return static_cast<double>(picked) / static_cast<double>(g.size());
}

ParamMode param_mode(const std::string& s) {
  if (s == "theory") return ParamMode::kTheory;
  if (s == "deterministic") return ParamMode::kDeterministic;
  return ParamMode::kPractical;
}

void print_result(const SolveResult& r, const std::string& format, std::ostream& out) {
  if (format == "table") {
    out << std::left << std::setw(28) << "method" << std::setw(10) << "value" << std::setw(8) << "size"
        << "trials\n";
    out << std::left << std::setw(28) << r.method << std::setw(10) << num(r.value) << std::setw(8) << r.set.size()
        << r.trials << "\n";
    return;
  }
  out << to_json(r) << "\n";
}

// Options shared by mis and clique.
struct SolveFlags {
  std::string mode = "eptas";
  double eps = 0.25;
  std::optional<double> beta;
  int d = 4;
  std::string params = "practical";
  std::optional<long long> trials;
  std::optional<long long> sample;
  std::size_t cap = kEnumerationCap;
  std::size_t threads = 1;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string input = "-";
};

void add_solve_flags(CLI::App* sub, SolveFlags& f) {
  sub->add_option("input", f.input, "graph or instance file ('-' for stdin)");
  sub->add_option("--eps", f.eps, "approximation parameter in (0,1)");
  sub->add_option("--beta", f.beta, "lower bound on alpha(G)/|V(G)|");
  sub->add_option("--params", f.params, "parameter schedule")->check(CLI::IsMember({"practical", "theory", "deterministic"}));
  sub->add_option("--trials", f.trials, "number of sampling trials");
  sub->add_option("--sample", f.sample, "sample size override");
  sub->add_option("--cap", f.cap, "enumeration cap for exact steps");
  sub->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "random seed (default: GEOCLIQUE_SEED or 0)");
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

int cmd_mis(const SolveFlags& f, std::istream& in, std::ostream& out) {
  const Input input = load_input(f.input, in);
  const std::uint64_t seed = f.seed.value_or(default_seed());
  const Graph& g = input.graph;
  SolveResult r;
  if (f.mode == "exact") {
    r.set = brute_force(g, Objective::kMis, f.cap);
    r.value = g.weight_of(r.set);
    r.method = "exact";
  } else if (f.mode == "subexp") {
    r = mis_subexp(g, f.cap);
  } else if (f.mode == "qptas") {
    r = qptas_branch(g, f.eps, 1, seed, f.cap);
  } else {
    const EptasParams p = derive_params(f.eps, f.beta ? *f.beta : greedy_beta(g), f.d, 1, param_mode(f.params), f.sample, f.trials);
    EptasOptions opt;
    opt.threads = f.threads;
    opt.brute_force_cap = f.cap;
    r = mis_eptas(g, p, seed, opt);
  }
  r.seed = seed;
  print_result(r, f.format, out);
  return kExitOk;
}

PipelineConfig pipeline(const SolveFlags& f, std::uint64_t seed) {
  PipelineConfig cfg;
  cfg.eps = f.eps;
  cfg.seed = seed;
  cfg.beta = f.beta;
  cfg.params = param_mode(f.params);
  cfg.s_override = f.sample;
  cfg.t_override = f.trials;
  cfg.threads = f.threads;
  cfg.exact_cap = f.cap;
  if (f.mode == "subexp") cfg.mode = CliqueMode::kSubexp;
  else if (f.mode == "exact") cfg.mode = CliqueMode::kExact;
  else if (f.mode == "pierce2") cfg.mode = CliqueMode::kPierce2;
  return cfg;
}

SolveResult solve_clique(const Input& input, const PipelineConfig& cfg, const std::string& cls) {
  std::string c = cls;
  if (c == "auto") c = input.instance && input.instance->dim == 3 ? "unit-ball" : "disk";
  if (input.instance) {
    if (cfg.mode == CliqueMode::kPierce2) return clique_pierce2(*input.instance, cfg.seed, cfg.pierce_cap);
    return c == "unit-ball" ? clique_unit_ball(*input.instance, cfg) : clique_disk(*input.instance, cfg);
  }
  return c == "unit-ball" ? clique_unit_ball(input.graph, cfg) : clique_disk(input.graph, cfg);
}

json cycle_json(const std::vector<VertexId>& c) { return json(c); }

int cmd_check(const std::string& property, const std::string& path, std::size_t cap, std::size_t samples,
              bool complement_flag, std::uint64_t seed, std::istream& in, std::ostream& out) {
  json res;
  res["property"] = property;
  bool violated = false;
  if (property == "iocp" || property == "vcdim") {
    const Input input = load_input(path, in);
    if (property == "vcdim") {
      res["vcdim"] = vc_dimension(input.graph);
    } else {
      // The anticomplete-odd-cycle property concerns complements of disk and unit-ball graphs.
      const bool comp = input.instance.has_value() || complement_flag;
      const Graph g = comp ? complement(input.graph) : input.graph;
      const IocpWitness w = find_two_anticomplete_odd_cycles(g, cap);
      res["complemented"] = comp;
      res["found"] = w.found;
      res["first"] = cycle_json(w.first);
      res["second"] = cycle_json(w.second);
      res["cap"] = w.cap;
      res["exhaustive"] = w.exhaustive;
      bool covered = false;
      if (input.instance && input.instance->kind == ObjectKind::kBalls) {
        covered = input.instance->dim == 2;
        if (input.instance->dim == 3) {
          covered = true;
          for (std::size_t i = 0; i < input.instance->size(); ++i)
            covered = covered && input.instance->ball(i).r == 1;
        }
      }
      violated = w.found && covered;
    }
  } else {
    const json j = parse_json(read_text(path, in), path);
    auto need = [&](const char* key) -> const json& {
      if (!j.contains(key)) throw InputError(std::string("$.") + key + ": missing");
      return j[key];
    };
    try {
      if (property == "crossing") {
        auto chain = [&](const char* key) {
          Chain2 c;
          for (const auto& p : need(key)) c.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
          return c;
        };
        const CrossingProfile cp = crossing_profile(chain("chain1"), chain("chain2"), seed);
        res["a"] = cp.a;
        res["b"] = cp.b;
        res["c"] = cp.c;
        res["a2"] = cp.a2;
        res["b2"] = cp.b2;
        res["c2"] = cp.c2;
        res["attempts"] = cp.attempts;
        res["invariants_hold"] = cp.invariants_hold();
        violated = !cp.invariants_hold();
      } else if (property == "k22") {
        std::array<Ball, 4> disks;
        const json& d = need("disks");
        if (!d.is_array() || d.size() != 4) throw InputError("$.disks: expected 4 disks");
        for (std::size_t i = 0; i < 4; ++i)
          disks[i] = Ball{d[i].at("c").get<std::vector<double>>(), d[i].at("r").get<double>()};
        const json& ne = need("nonedges");
        if (!ne.is_array() || ne.size() != 2) throw InputError("$.nonedges: expected 2 pairs");
        std::array<std::pair<int, int>, 2> pairs{};
        for (std::size_t i = 0; i < 2; ++i) pairs[i] = {ne[i].at(0).get<int>(), ne[i].at(1).get<int>()};
        const K22Verdict v = check_k22_quadrilateral(disks, pairs);
        res["convex"] = v.convex;
        res["diagonal_nonedges"] = v.diagonal_nonedges;
        res["line_condition"] = v.line_condition;
        res["holds"] = v.holds;
        violated = !v.holds;
      } else if (property == "needle") {
        auto chain = [&](const char* key) {
          Chain3 c;
          for (const auto& p : need(key)) c.push_back({p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()});
          return c;
        };
        const NeedleMatch m = common_needle_direction(chain("chain1"), chain("chain2"), samples);
        res["found"] = m.found;
        res["fallback"] = m.fallback;
        res["direction"] = {m.direction.x, m.direction.y, m.direction.z};
        res["error"] = m.error;
        res["first"] = {{"leg", m.on_first.leg}, {"tau", m.on_first.tau}, {"angle", m.on_first.angle}};
        res["second"] = {{"leg", m.on_second.leg}, {"tau", m.on_second.tau}, {"angle", m.on_second.angle}};
        violated = !m.found;
      }
    } catch (const json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  out << res.dump() << "\n";
  return violated ? kExitInvariant : kExitOk;
}

std::vector<std::size_t> parse_lengths(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    char* end = nullptr;
    const unsigned long v = std::strtoul(tok.c_str(), &end, 10);
    if (*end) throw InputError("--cycles: not a length: " + tok);
    out.push_back(v);
  }
  return out;
}

std::string bundle(const Realization& r, const std::string& target) {
  std::ostringstream os;
  os << "{\"target\":\"" << target << "\",\"instance\":" << save_instance(r.instance)
     << ",\"expected\":" << save_graph_json(r.report.expected) << ",\"report\":" << to_json(r.report)
     << ",\"params\":{\"eps\":" << num(r.params.eps) << ",\"eps_prime\":" << num(r.params.eps_prime)
     << ",\"eps_second\":" << num(r.params.eps_second) << ",\"grid\":" << num(r.params.grid)
     << ",\"margin\":" << num(r.params.margin);
  for (const auto& [k, v] : r.params.aux) os << ",\"" << k << "\":" << num(v);
  os << "}}\n";
  return os.str();
}

struct BenchRow {
  std::size_t id = 0;
  std::string mode;
  std::size_t n = 0;
  double value = 0;
  std::size_t size = 0;
  bool valid = false;
  double ms = 0;
  std::string error;
};

GeneratorSpec kind_spec(const std::string& kind, std::size_t n, int dim) {
  GeneratorSpec s;
  s.n = n;
  s.kind = ObjectKind::kBalls;
  if (kind == "disks") {
    s.dim = 2;
    s.rmin = 0.5;
    s.rmax = 2;
  } else if (kind == "unit-disks") {
    s.dim = 2;
  } else if (kind == "balls") {
    s.dim = dim ? dim : 3;
    s.rmin = 0.5;
    s.rmax = 2;
  } else if (kind == "unit-balls") {
    s.dim = dim ? dim : 3;
  } else if (kind == "triangles") {
    s.kind = ObjectKind::kTriangles;
  } else if (kind == "ellipses") {
    s.kind = ObjectKind::kEllipses;
  }
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum clique and independent set tools for geometric intersection graphs", "geoclique"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind = "disks", gen_out;
  std::size_t gen_n = 0;
  int gen_dim = 0;
  std::optional<double> gen_lo, gen_hi, gen_rmin, gen_rmax;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"disks", "unit-disks", "balls", "unit-balls", "triangles", "ellipses"}));
  gen->add_option("--n", gen_n, "number of objects")->required();
  gen->add_option("--dim", gen_dim, "dimension for balls");
  gen->add_option("--lo", gen_lo, "lower corner of the sampling box");
  gen->add_option("--hi", gen_hi, "upper corner of the sampling box");
  gen->add_option("--rmin", gen_rmin);
  gen->add_option("--rmax", gen_rmax);
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--output", gen_out);

  // graph
  std::string graph_in = "-", graph_out, graph_format = "json";
  auto* graph = app.add_subcommand("graph", "intersection graph of an instance");
  graph->add_option("input", graph_in);
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"json", "dimacs"}));
  graph->add_option("-o,--output", graph_out);

  SolveFlags mis_flags;
  auto* mis = app.add_subcommand("mis", "maximum independent set");
  add_solve_flags(mis, mis_flags);
  mis->add_option("--mode", mis_flags.mode)->check(CLI::IsMember({"eptas", "qptas", "subexp", "exact"}));
  mis->add_option("--d", mis_flags.d, "VC-dimension bound");

  SolveFlags clq_flags;
  std::string clq_class = "auto";
  auto* clq = app.add_subcommand("clique", "maximum clique");
  add_solve_flags(clq, clq_flags);
  clq->add_option("--mode", clq_flags.mode)->check(CLI::IsMember({"eptas", "subexp", "exact", "pierce2"}));
  clq->add_option("--class", clq_class)->check(CLI::IsMember({"auto", "disk", "unit-ball"}));

  std::string chk_prop, chk_in = "-";
  std::size_t chk_cap = 0, chk_samples = kNeedleSamples;
  bool chk_complement = false;
  std::optional<std::uint64_t> chk_seed;
  auto* chk = app.add_subcommand("check", "structural property checks");
  chk->add_option("--property", chk_prop)->required()->check(CLI::IsMember({"iocp", "vcdim", "crossing", "k22", "needle"}));
  chk->add_option("input", chk_in);
  chk->add_option("--cap", chk_cap, "iocp: longest cycle searched (0 = all)");
  chk->add_option("--samples", chk_samples, "needle: samples per leg")->check(CLI::PositiveNumber);
  chk->add_flag("--complement", chk_complement, "iocp: search the complement of a graph input");
  chk->add_option("--seed", chk_seed);

  std::string gad_target, gad_graph = "-", gad_cycles, gad_out;
  double gad_eps = 0.2;
  bool gad_nosnap = false;
  std::optional<double> gad_margin;
  auto* gad = app.add_subcommand("gadget", "build a verified construction");
  gad->add_option("--target", gad_target)->required()->check(CLI::IsMember({"balls4", "balls3", "triangles", "ellipses", "cocycles"}));
  gad->add_option("--graph", gad_graph, "source graph for co-2-subdivisions");
  gad->add_option("--eps", gad_eps, "balls3: radii lie in [1, 1+eps]");
  gad->add_option("--cycles", gad_cycles, "cocycles: comma separated cycle lengths");
  gad->add_flag("--no-snap", gad_nosnap);
  gad->add_option("--min-margin", gad_margin);
  gad->add_option("-o,--output", gad_out);

  std::string ver_in = "-", ver_graph;
  auto* ver = app.add_subcommand("verify", "compare an instance with its expected graph");
  ver->add_option("input", ver_in, "gadget bundle or instance");
  ver->add_option("--graph", ver_graph, "expected graph when the input is a bare instance");

  std::string b_kind = "disks", b_modes = "eptas,exact", b_format = "json";
  std::size_t b_count = 10, b_n = 12, b_threads = 1;
  double b_eps = 0.25, b_hi = 0;
  std::optional<long long> b_trials;
  std::optional<std::uint64_t> b_seed;
  bool b_timing = false;
  auto* bench = app.add_subcommand("bench", "run a seeded corpus and emit one row per instance and mode");
  bench->add_option("--kind", b_kind)->check(CLI::IsMember({"disks", "unit-disks", "unit-balls"}));
  bench->add_option("--count", b_count);
  bench->add_option("--n", b_n);
  bench->add_option("--hi", b_hi, "box size (default scales with n)");
  bench->add_option("--modes", b_modes, "comma separated: eptas,subexp,exact,pierce2");
  bench->add_option("--eps", b_eps);
  bench->add_option("--trials", b_trials);
  bench->add_option("--threads", b_threads)->check(CLI::PositiveNumber);
  bench->add_option("--seed", b_seed);
  bench->add_option("--format", b_format)->check(CLI::IsMember({"json", "table"}));
  bench->add_flag("--timing", b_timing, "include wall-clock milliseconds (not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      GeneratorSpec s = kind_spec(gen_kind, gen_n, gen_dim);
      if (gen_lo) s.lo = *gen_lo;
      if (gen_hi) s.hi = *gen_hi;
      if (gen_rmin) s.rmin = *gen_rmin;
      if (gen_rmax) s.rmax = *gen_rmax;
      write_text(gen_out, save_instance(generate_instance(s, gen_seed.value_or(default_seed()))), out);
      return kExitOk;
    }
    if (*graph) {
      const Input input = load_input(graph_in, in);
      write_text(graph_out, graph_format == "dimacs" ? save_dimacs(input.graph) : save_graph_json(input.graph), out);
      return kExitOk;
    }
    if (*mis) return cmd_mis(mis_flags, in, out);
    if (*clq) {
      const Input input = load_input(clq_flags.input, in);
      const std::uint64_t seed = clq_flags.seed.value_or(default_seed());
      print_result(solve_clique(input, pipeline(clq_flags, seed), clq_class), clq_flags.format, out);
      return kExitOk;
    }
    if (*chk)
      return cmd_check(chk_prop, chk_in, chk_cap, chk_samples, chk_complement, chk_seed.value_or(default_seed()), in,
                       out);
    if (*gad) {
      GadgetOptions opt;
      opt.radius_eps = gad_eps;
      opt.snap = !gad_nosnap;
      if (gad_margin) opt.min_margin = *gad_margin;
      Realization r;
      if (gad_target == "cocycles") {
        if (gad_cycles.empty()) throw InputError("gadget: --cycles is required for cocycles");
        r = realize_co_cycles_disks(parse_lengths(gad_cycles), opt);
      } else {
        const Input input = load_input(gad_graph, in);
        const GadgetTarget t = gad_target == "balls4"      ? GadgetTarget::kBalls4
                               : gad_target == "balls3"    ? GadgetTarget::kBalls3Eps
                               : gad_target == "triangles" ? GadgetTarget::kTriangles
                                                           : GadgetTarget::kEllipses;
        r = realize_co2subdivision(input.graph, t, opt);
      }
      write_text(gad_out, bundle(r, gad_target), out);
      return kExitOk;
    }
    if (*ver) {
      const Input input = load_input(ver_in, in);
      if (!input.instance) throw InputError("verify: input is not an instance");
      Graph expected;
      if (!ver_graph.empty()) expected = load_graph(read_text(ver_graph, in));
      else if (input.expected) expected = *input.expected;
      else throw InputError("verify: no expected graph (use --graph or a gadget bundle)");
      const RealizationReport r = verify_realization(*input.instance, expected);
      out << to_json(r) << "\n";
      return r.equal ? kExitOk : kExitInvariant;
    }
    if (*bench) {
      std::vector<std::string> modes;
      {
        std::stringstream ss(b_modes);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) {
            if (tok != "eptas" && tok != "subexp" && tok != "exact" && tok != "pierce2")
              throw InputError("--modes: unknown mode " + tok);
            modes.push_back(tok);
          }
      }
      const std::uint64_t seed = b_seed.value_or(default_seed());
      std::vector<BenchRow> rows(b_count * modes.size());
      auto work = [&](std::size_t idx) {
        const std::size_t id = idx / modes.size();
        BenchRow& row = rows[idx];
        row.id = id;
        row.mode = modes[idx % modes.size()];
        GeneratorSpec s = kind_spec(b_kind, b_n, 0);
        // Keep the expected degree roughly constant as n grows.
        s.hi = b_hi > 0 ? b_hi : (s.dim == 3 ? 2.5 * std::cbrt(static_cast<double>(b_n)) : 2.2 * std::sqrt(static_cast<double>(b_n)));
        const GeometricInstance inst = generate_instance(s, Rng::stream(seed, id).next());
        Input input;
        input.instance = inst;
        input.graph = build_intersection_graph(inst).graph;
        row.n = inst.size();
        SolveFlags f;
        f.mode = row.mode;
        f.eps = b_eps;
        f.trials = b_trials;
        const auto t0 = std::chrono::steady_clock::now();
        try {
          const SolveResult r = solve_clique(input, pipeline(f, seed + id), "auto");
          row.value = r.value;
          row.size = r.set.size();
          row.valid = is_clique(input.graph, r.set);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      };
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < std::min(b_threads, std::max<std::size_t>(rows.size(), 1)); ++t)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < rows.size(); i = next++) work(i);
        });
      for (auto& t : pool) t.join();
      if (b_format == "table")
        out << std::left << std::setw(6) << "id" << std::setw(10) << "mode" << std::setw(6) << "n" << std::setw(8)
            << "value" << "valid\n";
      for (const auto& r : rows) {
        if (b_format == "table") {
          out << std::left << std::setw(6) << r.id << std::setw(10) << r.mode << std::setw(6) << r.n << std::setw(8)
              << num(r.value) << (r.error.empty() ? (r.valid ? "yes" : "no") : r.error) << "\n";
          continue;
        }
        json j{{"id", r.id}, {"kind", b_kind}, {"mode", r.mode}, {"n", r.n}, {"value", r.value},
               {"size", r.size}, {"valid", r.valid}};
        if (!r.error.empty()) j["error"] = r.error;
        if (b_timing) j["ms"] = r.ms;
        out << j.dump() << "\n";
      }
      return kExitOk;
    }
  } catch (const IocpViolation& e) {
    json j{{"error", e.what()}, {"first", e.first()}, {"second", e.second()}};
    err << j.dump() << "\n";
    return kExitInvariant;
  } catch (const RealizationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace geoclique::cli
