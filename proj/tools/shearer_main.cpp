// Command line surface over the shearer core: evaluate critical functions,
// decide region membership, build measures, test stochastic domination, and
// sweep parameter ranges with machine-readable output.

#include "shearer/bounds.hpp"
#include "shearer/domination.hpp"
#include "shearer/grid.hpp"
#include "shearer/io.hpp"
#include "shearer/measure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using nlohmann::json;
using namespace shearer;

namespace {

struct Options {
  std::string backend_text;
  std::string family, graph_path;
  std::string p_text, p_json;
  std::string w_text;
  int v = -1;
  std::string op;
  int k = 1, degree = 3, dim = 2, box = 2;
  std::string p2_text;  // second scalar (bounds with p argument)
  std::string shape_text, caps_text;
  std::string dist_path, y_path, x_path, c_text;
  std::string c_json;
  std::string floor_json;
  std::string measure_kind = "shearer";
  int count = 1000;
  std::uint64_t seed = 1;
  int radius = 3;
  bool include_pairs = false;
  bool emit_plan = false;
  std::string out_path;
  std::string format = "json";
  // sweep
  std::string inner_command;
  double p_from = 0, p_to = 0, p_step = 0;

  Backend backend() const {
    std::string b = backend_text;
    if (b.empty()) {
      const char* env = std::getenv("SHEARER_BACKEND");
      b = env ? env : "float";
    }
    if (b == "float") return Backend::Float;
    if (b == "rational") return Backend::Rational;
    throw ParseError("unknown backend '" + b + "'");
  }
};

template <class T>
T parse_scalar(const std::string& text) {
  if constexpr (scalar_traits<T>::exact) {
    return rational_from_decimal(text);
  } else {
    try {
      std::size_t used = 0;
      double v = std::stod(text, &used);
      if (used != text.size()) {
        // Accept "a/b" in float mode too.
        Rational r = rational_from_decimal(text);
        return to_double(r);
      }
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + text + "'");
    }
  }
}

template <class T>
Vec<T> parse_params(const Options& opt, int n) {
  if (!opt.p_text.empty() && !opt.p_json.empty())
    throw ParseError("give either --p or --p-json, not both");
  if (!opt.p_json.empty()) {
    json j = json::parse(opt.p_json, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw ParseError("--p-json must be a JSON array");
    if (static_cast<int>(j.size()) != n) throw ParseError("--p-json length mismatch");
    Vec<T> p;
    for (const auto& x : j)
      p.push_back(x.is_string() ? parse_scalar<T>(x.get<std::string>())
                                : parse_scalar<T>(x.dump()));
    return p;
  }
  if (opt.p_text.empty()) throw ParseError("a parameter (--p or --p-json) is required");
  return Vec<T>(n, parse_scalar<T>(opt.p_text));
}

VertexSubset parse_subset(const std::string& text, int n) {
  VertexSubset s(n);
  if (text.empty()) return s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      s.set(std::stoi(item));
    } catch (const PreconditionError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("malformed vertex list '" + text + "'");
    }
  }
  return s;
}

std::array<int, 3> parse_triple(const std::string& text, const char* what) {
  std::array<int, 3> out{};
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',') && i < 3) out[i++] = std::stoi(item);
  if (i != 3) throw ParseError(std::string(what) + " needs three comma-separated integers");
  return out;
}

template <class T>
json value_json(const T& v) {
  if constexpr (scalar_traits<T>::exact) {
    return rational_to_string(v);
  } else {
    return v;
  }
}

template <class T>
json vec_json(const Vec<T>& v) {
  json a = json::array();
  for (const T& x : v) a.push_back(value_json(x));
  return a;
}

const char* backend_tag(Backend b) { return b == Backend::Float ? "float" : "rational"; }

template <class T>
json cmd_xi(const Options& opt) {
  Graph g = load_graph_source(opt.family, opt.graph_path);
  Vec<T> p = parse_params<T>(opt, g.size());
  XiCache<T> cache(g.size());
  T xi = xi_dc(g, p, cache);
  json j;
  j["backend"] = backend_tag(scalar_traits<T>::backend);
  j["command"] = "xi";
  j["n"] = g.size();
  j["xi"] = value_json(xi);
  return j;
}

template <class T>
json cmd_member(const Options& opt) {
  Graph g = load_graph_source(opt.family, opt.graph_path);
  Vec<T> p = parse_params<T>(opt, g.size());
  XiCache<T> cache(g.size());
  RegionStatus st = membership(g, p, cache);
  json j;
  j["backend"] = backend_tag(scalar_traits<T>::backend);
  j["command"] = "member";
  j["status"] = region_name(st.region);
  if (st.witness) {
    json w = json::array();
    for (int v = 0; v < g.size(); ++v)
      if (*st.witness >> v & 1) w.push_back(v);
    j["witness"] = w;
  }
  return j;
}

template <class T>
json cmd_boundary(const Options& opt) {
  Graph g = load_graph_source(opt.family, opt.graph_path);
  Vec<T> p = parse_params<T>(opt, g.size());
  BoundaryCrossing<T> cross = boundary_crossing(g, p);
  json j;
  j["backend"] = backend_tag(scalar_traits<T>::backend);
  j["command"] = "boundary";
  j["t"] = value_json(cross.t);
  j["r"] = vec_json(cross.r);
  return j;
}

template <class T>
json cmd_measure(const Options& opt) {
  Graph g = load_graph_source(opt.family, opt.graph_path);
  Vec<T> p = parse_params<T>(opt, g.size());
  MeasureResult<T> m = construct_measure(g, p);
  json j = json::parse(dist_to_json(m.dist));
  j["command"] = "measure";
  j["signed_measure"] = !m.is_probability();
  if (m.negative_config) j["negative_config"] = *m.negative_config;
  return j;
}

template <class T>
json cmd_ovoep(const Options& opt) {
  Graph g = load_graph_source(opt.family, opt.graph_path);
  Vec<T> p = parse_params<T>(opt, g.size());
  if (opt.v < 0) throw ParseError("--v is required");
  VertexSubset w = parse_subset(opt.w_text, g.size());
  XiCache<T> cache(g.size());
  T q = ovoep(g, w, opt.v, p, cache);
  json j;
  j["backend"] = backend_tag(scalar_traits<T>::backend);
  j["command"] = "ovoep";
  j["value"] = value_json(q);
  return j;
}

template <class T>
json cmd_bounds(const Options& opt) {
  json j;
  auto fill = [&](const BoundReport<T>& r) { j = json::parse(bound_report_to_json(r)); };
  if (opt.op == "p_sh_tree") fill(p_sh_tree<T>(opt.degree));
  else if (opt.op == "p_sh_kfuzz") fill(p_sh_kfuzz<T>(opt.k));
  else if (opt.op == "zd_lower") fill(zd_lower<T>(opt.dim));
  else if (opt.op == "jump_lower") fill(jump_lower<T>(opt.k));
  else if (opt.op == "kfuzz_jump_upper") fill(kfuzz_jump_upper<T>(opt.k));
  else if (opt.op == "lss_lower") fill(lss_lower<T>(opt.degree, parse_scalar<T>(opt.p2_text.empty() ? opt.p_text : opt.p2_text)));
  else if (opt.op == "lss_kfuzz") fill(lss_kfuzz<T>(opt.k, parse_scalar<T>(opt.p2_text.empty() ? opt.p_text : opt.p2_text)));
  else if (opt.op == "dominated_vector") {
    Graph g = load_graph_source(opt.family, opt.graph_path);
    VecD p;
    for (const T& x : parse_params<T>(opt, g.size())) p.push_back(to_double(x));
    VecD c = uniformly_dominated_vector(g, p, VertexSubset(g.size()));
    j["backend"] = "float";
    j["name"] = "uniformly_dominated_vector";
    j["value"] = c;
    j["kind"] = "LowerBound";
    return j;
  } else if (opt.op == "lll" || opt.op == "fp") {
    Graph g = load_graph_source(opt.family, opt.graph_path);
    VecD p;
    for (const T& x : parse_params<T>(opt, g.size())) p.push_back(to_double(x));
    VecD q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = 1.0 - p[i];
    ConditionResult r = opt.op == "lll" ? lll_check(g, q) : fp_check(g, q);
    j["backend"] = "float";
    j["name"] = opt.op;
    j["kind"] = "Sufficient";
    j["value"] = r.holds;
    j["s"] = r.s;
    return j;
  } else {
    throw ParseError("unknown bounds op '" + opt.op + "'");
  }
  j["command"] = "bounds";
  return j;
}

template <class T>
Dist<T> dist_from_parsed(const ParsedDist& pd) {
  if constexpr (scalar_traits<T>::exact) {
    if (pd.backend == Backend::Rational) return pd.rational_dist;
    // Dyadic doubles convert exactly.
    std::vector<Rational> m;
    m.reserve(pd.float_dist.mass.size());
    for (double x : pd.float_dist.mass) m.emplace_back(x);
    return Dist<Rational>(pd.float_dist.n, std::move(m));
  } else {
    return pd.float_dist;
  }
}

template <class T>
Dist<T> measure_source(const Options& opt) {
  if (opt.measure_kind == "shearer") {
    Graph g = load_graph_source(opt.family, opt.graph_path);
    Vec<T> p = parse_params<T>(opt, g.size());
    MeasureResult<T> m = construct_measure(g, p);
    return m.dist;
  }
  if (opt.measure_kind == "file") return dist_from_parsed<T>(read_dist_file(opt.dist_path));
  if (opt.measure_kind == "halfball") return kfuzz_halfball_brf<T>(opt.k);
  throw ParseError("unknown measure source '" + opt.measure_kind + "'");
}

template <class T>
json cmd_dominate(const Options& opt) {
  Dist<T> y = opt.y_path.empty() ? measure_source<T>(opt)
                                 : dist_from_parsed<T>(read_dist_file(opt.y_path));
  Dist<T> x;
  if (!opt.x_path.empty()) {
    x = dist_from_parsed<T>(read_dist_file(opt.x_path));
  } else if (!opt.c_text.empty()) {
    x = product_dist(Vec<T>(y.n, parse_scalar<T>(opt.c_text)));
  } else if (!opt.c_json.empty()) {
    json cj = json::parse(opt.c_json, nullptr, false);
    if (cj.is_discarded() || !cj.is_array() || static_cast<int>(cj.size()) != y.n)
      throw ParseError("--c-json must be an array matching the field size");
    Vec<T> c;
    for (const auto& e : cj)
      c.push_back(e.is_string() ? parse_scalar<T>(e.get<std::string>())
                                : parse_scalar<T>(e.dump()));
    x = product_dist(c);
  } else {
    throw ParseError("dominate needs --x, --c, or --c-json");
  }
  StrassenResult<T> r = strassen_dominates(y, x);
  json j;
  j["backend"] = backend_tag(scalar_traits<T>::backend);
  j["command"] = "dominate";
  j["dominates"] = r.dominates;
  if (r.dominates && opt.emit_plan) j["plan"] = json::parse(coupling_to_json(r.plan));
  if (!r.dominates) {
    json u = json::array();
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << r.violating.n); ++c)
      if (r.violating.member[c]) u.push_back(c);
    j["violating_upset"] = u;
  }
  return j;
}

template <class T>
json cmd_sigma(const Options& opt) {
  Dist<T> d = measure_source<T>(opt);
  T sigma = dominated_value(d);
  json j;
  j["backend"] = backend_tag(scalar_traits<T>::backend);
  j["command"] = "sigma";
  j["sigma"] = value_json(sigma);
  j["sigma_float"] = to_double(sigma);
  return j;
}

template <class T>
json cmd_counterexample(const Options& opt) {
  Graph g = load_graph_source(opt.family, opt.graph_path);
  Vec<T> p = parse_params<T>(opt, g.size());
  Counterexample<T> c = counterexample(g, p);
  json j = json::parse(dist_to_json(c.dist));
  j["command"] = "counterexample";
  j["t"] = value_json(c.t);
  j["r"] = vec_json(c.r);
  j["x"] = vec_json(c.x);
  return j;
}

json cmd_sample(const Options& opt) {
  if (opt.dist_path.empty()) throw ParseError("sample needs --dist");
  Dist<double> d = read_dist_file(opt.dist_path).float_dist;
  auto draws = sample(d, opt.seed, opt.count);
  json j;
  j["backend"] = "float";
  j["command"] = "sample";
  j["seed"] = opt.seed;
  j["draws"] = draws;
  return j;
}

json cmd_russo(const Options& opt) {
  Graph g = load_graph_source(opt.family, opt.graph_path);
  VecD p;
  {
    Options tmp = opt;
    for (double x : parse_params<double>(tmp, g.size())) p.push_back(x);
  }
  MeasureResult<double> m = construct_measure(g, p);
  if (!m.is_probability()) throw OutsideRegion("russo: parameters outside the region");
  VecD floor;
  if (!opt.floor_json.empty()) {
    json fj = json::parse(opt.floor_json, nullptr, false);
    if (fj.is_discarded() || !fj.is_array() || static_cast<int>(fj.size()) != g.size())
      throw ParseError("--floor-json must be an array matching the graph size");
    for (const auto& e : fj) floor.push_back(e.get<double>());
  } else {
    floor = uniformly_dominated_vector(g, p, VertexSubset(g.size()));
  }
  auto pairs = russo_sample(make_cond_oracle(to_float_dist(m.dist)), floor, opt.seed, opt.count);
  int ordered = 0;
  VecD x_freq(g.size(), 0.0);
  for (auto [z, x] : pairs) {
    if ((z & x) == x) ++ordered;
    for (int v = 0; v < g.size(); ++v)
      if (x >> v & 1) x_freq[v] += 1.0;
  }
  for (double& f : x_freq) f /= static_cast<double>(pairs.size());
  json j;
  j["backend"] = "float";
  j["command"] = "russo";
  j["count"] = opt.count;
  j["seed"] = opt.seed;
  j["ordered"] = ordered;
  j["floor"] = floor;
  j["x_freq"] = x_freq;
  if (opt.include_pairs) {
    json pj = json::array();
    for (auto [z, x] : pairs) pj.push_back(json::array({z, x}));
    j["pairs"] = pj;
  }
  return j;
}

template <class T>
json cmd_grid(const Options& opt) {
  json j;
  j["backend"] = backend_tag(scalar_traits<T>::backend);
  j["command"] = "grid";
  j["op"] = opt.op;
  if (opt.op == "spiral") {
    json order = json::array();
    for (auto [x, y] : spiral_order(opt.box)) order.push_back(json::array({x, y}));
    j["N"] = opt.box;
    j["order"] = order;
    return j;
  }
  if (opt.op == "logdensity") {
    T p = parse_scalar<T>(opt.p_text);
    j["N"] = opt.box;
    j["p"] = value_json(p);
    j["value"] = xi_log_density(opt.box, p);
    return j;
  }
  if (opt.op == "shapeovoep") {
    auto [n, k, l] = parse_triple(opt.shape_text, "--shape");
    T p = parse_scalar<T>(opt.p_text);
    j["shape"] = json::array({n, k, l});
    j["p"] = value_json(p);
    j["value"] = value_json(shape_ovoep(GridShape{n, k, l}, p));
    return j;
  }
  if (opt.op == "aestimate") {
    auto caps = parse_triple(opt.caps_text, "--caps");
    T p = parse_scalar<T>(opt.p_text);
    AEstimate<T> a = a_estimate(p, caps[0], caps[1], caps[2]);
    j["p"] = value_json(p);
    j["caps"] = json::array({caps[0], caps[1], caps[2]});
    j["value"] = value_json(a.value);
    j["argmin"] = json::array({a.argmin[0], a.argmin[1], a.argmin[2]});
    j["lower_bound"] = value_json(a.lower_bound);
    j["note"] = "upper bound on the true infimum";
    return j;
  }
  throw ParseError("unknown grid op '" + opt.op + "'");
}

json run_command(const std::string& name, const Options& opt) {
  Backend b = opt.backend();
  auto pick = [&](auto f_float, auto f_rational) {
    return b == Backend::Float ? f_float(opt) : f_rational(opt);
  };
  if (name == "xi") return pick(cmd_xi<double>, cmd_xi<Rational>);
  if (name == "member") return pick(cmd_member<double>, cmd_member<Rational>);
  if (name == "boundary") return pick(cmd_boundary<double>, cmd_boundary<Rational>);
  if (name == "measure") return pick(cmd_measure<double>, cmd_measure<Rational>);
  if (name == "ovoep") return pick(cmd_ovoep<double>, cmd_ovoep<Rational>);
  if (name == "bounds") return pick(cmd_bounds<double>, cmd_bounds<Rational>);
  if (name == "dominate") return pick(cmd_dominate<double>, cmd_dominate<Rational>);
  if (name == "sigma") return pick(cmd_sigma<double>, cmd_sigma<Rational>);
  if (name == "counterexample")
    return pick(cmd_counterexample<double>, cmd_counterexample<Rational>);
  if (name == "sample") return cmd_sample(opt);
  if (name == "russo") return cmd_russo(opt);
  if (name == "grid") return pick(cmd_grid<double>, cmd_grid<Rational>);
  throw ParseError("unknown command '" + name + "'");
}

std::string flatten_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

int run_sweep(const Options& opt, std::ostream& out, const std::string& cmdline) {
  if (opt.inner_command.empty()) throw ParseError("sweep needs --command");
  if (opt.p_step <= 0) throw ParseError("sweep needs a positive --p-step");
  std::vector<double> points;
  for (double p = opt.p_from; p <= opt.p_to + 1e-12; p += opt.p_step) points.push_back(p);
  // Points run in a pool; rows are assembled in parameter order regardless
  // of completion order.
  std::vector<std::future<std::map<std::string, std::string>>> futures;
  for (double p : points) {
    futures.push_back(std::async(std::launch::async, [&, p] {
      Options local = opt;
      std::ostringstream ps;
      ps.precision(17);
      ps << p;
      local.p_text = ps.str();
      local.p_json.clear();
      std::map<std::string, std::string> row;
      try {
        json j = run_command(opt.inner_command, local);
        for (auto& [key, value] : j.items())
          if (!value.is_structured()) row[key] = flatten_scalar(value);
      } catch (const std::exception& e) {
        row["error"] = e.what();
      }
      return row;
    }));
  }
  std::vector<std::map<std::string, std::string>> rows;
  rows.reserve(points.size());
  for (auto& f : futures) rows.push_back(f.get());
  std::set<std::string> keys;
  for (const auto& row : rows)
    for (const auto& [k, v] : row) keys.insert(k);
  keys.erase("command");
  out << "# " << cmdline << "\n";
  out << "p";
  for (const auto& k : keys) out << ',' << k;
  out << "\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << json(points[i]).dump();
    for (const auto& k : keys) {
      auto it = rows[i].find(k);
      out << ',' << (it == rows[i].end() ? "" : it->second);
    }
    out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shearer measures, critical functions, and domination oracles"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool graph, bool params) {
    sub->add_option("--backend", opt.backend_text, "float or rational");
    sub->add_option("--out", opt.out_path, "output file (default stdout)");
    sub->add_option("--format", opt.format, "json or csv");
    if (graph) {
      sub->add_option("--family", opt.family, "family spec, e.g. path:n=5, kfuzz:k=2,n=9");
      sub->add_option("--graph", opt.graph_path, "graph file (JSON or edge list)");
    }
    if (params) {
      sub->add_option("--p", opt.p_text, "homogeneous parameter");
      sub->add_option("--p-json", opt.p_json, "per-vertex parameter JSON array");
    }
  };

  std::vector<std::string> names = {"xi", "member", "boundary", "measure", "counterexample"};
  for (const auto& n : names) add_common(app.add_subcommand(n), true, true);

  auto* ov = app.add_subcommand("ovoep");
  add_common(ov, true, true);
  ov->add_option("--w", opt.w_text, "conditioning vertices, comma separated");
  ov->add_option("--v", opt.v, "extension vertex");

  auto* bd = app.add_subcommand("bounds");
  add_common(bd, true, true);
  bd->add_option("--op", opt.op)->required();
  bd->add_option("--k", opt.k);
  bd->add_option("--D", opt.degree);
  bd->add_option("--d", opt.dim);
  bd->add_option("--p-arg", opt.p2_text, "scalar argument for lss bounds");

  auto* dom = app.add_subcommand("dominate");
  add_common(dom, true, true);
  dom->add_option("--y", opt.y_path, "dominating law file");
  dom->add_option("--x", opt.x_path, "dominated law file");
  dom->add_option("--c", opt.c_text, "homogeneous product parameter");
  dom->add_option("--c-json", opt.c_json, "per-vertex product parameters");
  dom->add_option("--measure", opt.measure_kind, "shearer|file|halfball for --y default");
  dom->add_option("--dist", opt.dist_path, "law file for --measure file");
  dom->add_option("--k", opt.k, "halfball parameter");
  dom->add_flag("--emit-plan", opt.emit_plan, "include the coupling plan");

  auto* sg = app.add_subcommand("sigma");
  add_common(sg, true, true);
  sg->add_option("--measure", opt.measure_kind, "shearer|file|halfball");
  sg->add_option("--dist", opt.dist_path);
  sg->add_option("--k", opt.k, "halfball parameter");

  auto* sp = app.add_subcommand("sample");
  add_common(sp, false, false);
  sp->add_option("--dist", opt.dist_path)->required();
  sp->add_option("--count", opt.count);
  sp->add_option("--seed", opt.seed);

  auto* ru = app.add_subcommand("russo");
  add_common(ru, true, true);
  ru->add_option("--floor-json", opt.floor_json, "coupling floor (default: the uniformly dominated vector)");
  ru->add_option("--count", opt.count);
  ru->add_option("--seed", opt.seed);
  ru->add_flag("--include-pairs", opt.include_pairs);

  auto* gr = app.add_subcommand("grid");
  add_common(gr, false, true);
  gr->add_option("--op", opt.op)->required();
  gr->add_option("--N", opt.box);
  gr->add_option("--shape", opt.shape_text, "n,k,l");
  gr->add_option("--caps", opt.caps_text, "n_max,k_max,l_max");

  auto* sw = app.add_subcommand("sweep");
  add_common(sw, true, false);
  sw->add_option("--command", opt.inner_command)->required();
  sw->add_option("--p-from", opt.p_from)->required();
  sw->add_option("--p-to", opt.p_to)->required();
  sw->add_option("--p-step", opt.p_step)->required();
  sw->add_option("--w", opt.w_text);
  sw->add_option("--v", opt.v);
  sw->add_option("--measure", opt.measure_kind);
  sw->add_option("--k", opt.k);
  sw->add_option("--op", opt.op);
  sw->add_option("--N", opt.box);
  sw->add_option("--shape", opt.shape_text);
  sw->add_option("--caps", opt.caps_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!opt.out_path.empty()) {
    file_out.open(opt.out_path);
    if (!file_out) {
      std::cerr << "cannot open output file " << opt.out_path << "\n";
      return 2;
    }
    out = &file_out;
  }

  try {
    std::string name = app.get_subcommands().front()->get_name();
    if (name == "sweep") {
      std::ostringstream cmdline;
      cmdline << "shearer";
      for (int i = 1; i < argc; ++i) cmdline << ' ' << argv[i];
      return run_sweep(opt, *out, cmdline.str());
    }
    json j = run_command(name, opt);
    if (opt.format == "csv" && name == "bounds") {
      *out << "name,kind,value\n"
           << j["name"].get<std::string>() << ',' << j["kind"].get<std::string>() << ','
           << flatten_scalar(j["value"]) << "\n";
    } else if (opt.format == "csv" && name == "grid" && j.contains("value")) {
      if (opt.op == "logdensity")
        *out << "N,p,xi_log_density\n"
             << j["N"].get<int>() << ',' << flatten_scalar(j["p"]) << ','
             << flatten_scalar(j["value"]) << "\n";
      else if (opt.op == "shapeovoep")
        *out << "n,k,l,p,ovoep\n"
             << j["shape"][0].get<int>() << ',' << j["shape"][1].get<int>() << ','
             << j["shape"][2].get<int>() << ',' << flatten_scalar(j["p"]) << ','
             << flatten_scalar(j["value"]) << "\n";
      else
        *out << j.dump(2) << "\n";
    } else {
      *out << j.dump(2) << "\n";
    }
    return 0;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
