#include "shearer/io.hpp"

#include "shearer/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace shearer {

namespace {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  if (!j.contains("n")) throw ParseError("graph JSON is missing 'n'");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j["n"].get<int>(), edges);
}

Graph graph_from_text(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "n") throw ParseError("edge list must start with 'n <count>'");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty graph input");
  if (text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed graph JSON");
    return graph_from_json(j);
  }
  std::istringstream s(text);
  return graph_from_text(s);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.size();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  return j.dump();
}

Graph load_graph_source(const std::string& family_spec, const std::string& file_path) {
  if (!family_spec.empty() && !file_path.empty())
    throw ParseError("give exactly one graph source (family or file)");
  if (!family_spec.empty()) return make_family(family_spec);
  if (!file_path.empty()) return read_graph_file(file_path);
  throw ParseError("a graph source is required (family or file)");
}

std::string dist_to_json(const Dist<double>& d) {
  json j;
  j["n"] = d.n;
  j["backend"] = "float";
  j["mass"] = d.mass;
  return j.dump();
}

std::string dist_to_json(const Dist<Rational>& d) {
  json j;
  j["n"] = d.n;
  j["backend"] = "rational";
  json mass = json::array();
  for (const Rational& m : d.mass) mass.push_back(rational_to_string(m));
  j["mass"] = mass;
  return j.dump();
}

ParsedDist read_dist(std::istream& in) {
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed distribution JSON");
  if (!j.contains("n") || !j.contains("mass")) throw ParseError("distribution needs 'n' and 'mass'");
  int n = j["n"].get<int>();
  const auto& mass = j["mass"];
  if (mass.size() != (std::size_t(1) << n)) throw ParseError("mass table size mismatch");
  ParsedDist out;
  std::string backend = j.value("backend", "float");
  if (backend == "rational") {
    out.backend = Backend::Rational;
    std::vector<Rational> m;
    m.reserve(mass.size());
    for (const auto& x : mass) m.push_back(rational_from_decimal(x.get<std::string>()));
    out.rational_dist = Dist<Rational>(n, std::move(m));
    out.float_dist = to_float_dist(out.rational_dist);
  } else if (backend == "float") {
    out.backend = Backend::Float;
    std::vector<double> m;
    m.reserve(mass.size());
    for (const auto& x : mass) m.push_back(x.get<double>());
    out.float_dist = Dist<double>(n, std::move(m));
  } else {
    throw ParseError("unknown backend '" + backend + "'");
  }
  return out;
}

ParsedDist read_dist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open distribution file '" + path + "'");
  return read_dist(in);
}

std::string coupling_to_json(const CouplingPlan<double>& plan) {
  json j = json::array();
  for (const auto& [y, x, m] : plan.entries) j.push_back(json::array({y, x, m}));
  return j.dump();
}

std::string coupling_to_json(const CouplingPlan<Rational>& plan) {
  json j = json::array();
  for (const auto& [y, x, m] : plan.entries)
    j.push_back(json::array({y, x, rational_to_string(m)}));
  return j.dump();
}

namespace {

template <class T>
json bound_report_json(const BoundReport<T>& r) {
  json j;
  j["name"] = r.name;
  j["kind"] = bound_kind_name(r.kind);
  if constexpr (scalar_traits<T>::exact) {
    j["backend"] = "rational";
    j["value"] = rational_to_string(r.value);
    j["value_float"] = to_double(r.value);
  } else {
    j["backend"] = "float";
    j["value"] = r.value;
  }
  json inputs;
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  return j;
}

}  // namespace

std::string bound_report_to_json(const BoundReport<double>& r) {
  return bound_report_json(r).dump();
}
std::string bound_report_to_json(const BoundReport<Rational>& r) {
  return bound_report_json(r).dump();
}

std::string bound_report_to_csv_row(const BoundReport<double>& r) {
  std::ostringstream s;
  s << r.name << ',' << bound_kind_name(r.kind) << ',' << r.value;
  for (const auto& [k, v] : r.inputs) s << ',' << k << '=' << v;
  return s.str();
}

}  // namespace shearer
