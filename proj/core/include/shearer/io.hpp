#pragma once

#include "shearer/bounds.hpp"
#include "shearer/dist.hpp"
#include "shearer/domination.hpp"
#include "shearer/graph.hpp"

#include <iosfwd>
#include <string>

namespace shearer {

/// Graph from JSON {"n": int, "edges": [[u,v],...]} or plain text whose
/// first line is "n <count>" followed by "u v" lines. Dispatches on content.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string graph_to_json(const Graph& g);

/// Either source accepted by the command line: a family spec ("path:n=5")
/// or a file path.
Graph load_graph_source(const std::string& family_spec, const std::string& file_path);

std::string dist_to_json(const Dist<double>& d);
std::string dist_to_json(const Dist<Rational>& d);

/// Reads either backend; the rational form is exact, the float form is not.
struct ParsedDist {
  Backend backend = Backend::Float;
  Dist<double> float_dist;
  Dist<Rational> rational_dist;
};
ParsedDist read_dist(std::istream& in);
ParsedDist read_dist_file(const std::string& path);

std::string coupling_to_json(const CouplingPlan<double>& plan);
std::string coupling_to_json(const CouplingPlan<Rational>& plan);

std::string bound_report_to_json(const BoundReport<double>& r);
std::string bound_report_to_json(const BoundReport<Rational>& r);
std::string bound_report_to_csv_row(const BoundReport<double>& r);

}  // namespace shearer
