#ifndef QWB_JSON_IO_HPP
#define QWB_JSON_IO_HPP

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "qwb/graph.hpp"
#include "qwb/inequalities.hpp"
#include "qwb/involutions.hpp"
#include "qwb/pipeline.hpp"
#include "qwb/quartic.hpp"
#include "qwb/untwisting.hpp"

namespace qwb {

using json = nlohmann::ordered_json;

enum class ArithmeticTrack { Exact, Complex, Auto };

struct WorkbenchConfig {
  double tolerance = 1e-10;
  double separation = 1e-6;
  std::map<std::string, std::int64_t> scan_bounds{{"n_max", 30}, {"s0_max", 40}, {"s1_max", 120}, {"chain_max", 200}};
  ArithmeticTrack arithmetic_track = ArithmeticTrack::Auto;
  std::uint64_t seed = 0;

  /// Throws InputError unless 0 < tolerance < separation and bounds are positive.
  void validate() const;
  std::int64_t bound(const std::string& name) const;
};

WorkbenchConfig config_from_json(const json& j);
json to_json(const WorkbenchConfig& c);
std::string to_string(ArithmeticTrack t);

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
json read_json_file(const std::string& path);

/// Coefficient: "p/q", decimal string, integer, or {"re": .., "im": ..}.
GaussianRational coefficient_from_json(const json& j);
json to_json(const GaussianRational& z);
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"q2": [{"exp": [2,0,0,0], "coef": "1"}, ...], "q3": [...], "q4": [...]}.
QuarticData quartic_from_json(const json& j);
json to_json(const QuarticData& data);

json to_json(const Complex& z);
json to_json(const ComplexPoint& p);
json to_json(const ExactPoint& p);
ComplexPoint complex_point_from_text(const std::string& text);
ExactPoint exact_point_from_text(const std::string& text);

json to_json(const LineThroughO& line);
json to_json(const GenericityReport& report);

/// {"K": 5, "L": 3, "arrows": [[2,1], ...], "nu": ["5/2", ...], "n": "2",
///  "cycle": {"m": [...], "beta": .., "nu_B": .., "d_B": ..}}; the cycle is
/// optional for graph-only commands.
ResolutionGraph graph_from_json(const json& j);
MultiplicityVector multiplicities_from_json(const json& j);
CycleData cycle_from_json(const json& j);
PipelineInput pipeline_input_from_json(const json& j);
json to_json(const ResolutionGraph& g);
json to_json(const PipelineInput& input);
json to_json(const PipelineVerdict& v);
json to_json(const PipelineBatch& b);

json to_json(const RatioScan& scan);
json to_json(const FeasibilityResult& result, std::size_t row_limit);

json to_json(const DegreeState& s);

/// The report envelope written by every command.
json make_report(const std::string& command, const json& arguments, const WorkbenchConfig& config,
                 const std::string& check, const json& results, bool passed, double seconds);

}  // namespace qwb

#endif
