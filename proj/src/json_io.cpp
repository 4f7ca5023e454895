#include "qwb/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qwb/errors.hpp"

namespace qwb {

void WorkbenchConfig::validate() const {
  if (!(tolerance > 0) || !(separation > 0)) throw InputError("tolerance and separation must be positive");
  if (!(tolerance < separation)) throw InputError("tolerance must be smaller than separation");
  for (const auto& [name, value] : scan_bounds)
    if (value < 1) throw InputError("scan bound '" + name + "' must be positive");
}

std::int64_t WorkbenchConfig::bound(const std::string& name) const {
  auto it = scan_bounds.find(name);
  if (it == scan_bounds.end()) throw InputError("unknown scan bound '" + name + "'");
  return it->second;
}

std::string to_string(ArithmeticTrack t) {
  switch (t) {
    case ArithmeticTrack::Exact: return "exact";
    case ArithmeticTrack::Complex: return "complex";
    case ArithmeticTrack::Auto: return "auto";
  }
  return "auto";
}

WorkbenchConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  WorkbenchConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "tolerance") {
        c.tolerance = value.get<double>();
      } else if (key == "separation") {
        c.separation = value.get<double>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "arithmetic_track") {
        const auto t = value.get<std::string>();
        if (t == "exact") c.arithmetic_track = ArithmeticTrack::Exact;
        else if (t == "complex") c.arithmetic_track = ArithmeticTrack::Complex;
        else if (t == "auto") c.arithmetic_track = ArithmeticTrack::Auto;
        else throw InputError("arithmetic_track must be exact, complex or auto");
      } else if (key == "scan_bounds") {
        for (const auto& [name, v] : value.items()) c.scan_bounds[name] = v.get<std::int64_t>();
      } else {
        throw InputError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad config value: ") + e.what());
  }
  c.validate();
  return c;
}

json to_json(const WorkbenchConfig& c) {
  json bounds = json::object();
  for (const auto& [name, value] : c.scan_bounds) bounds[name] = value;
  return {{"tolerance", c.tolerance},
          {"separation", c.separation},
          {"scan_bounds", bounds},
          {"arithmetic_track", to_string(c.arithmetic_track)},
          {"seed", c.seed}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as an integer or a string, got " + j.dump());
}

GaussianRational coefficient_from_json(const json& j) {
  if (j.is_object()) {
    GaussianRational z;
    if (j.contains("re")) z.re = rational_from_json(j.at("re"));
    if (j.contains("im")) z.im = rational_from_json(j.at("im"));
    for (const auto& [key, _] : j.items())
      if (key != "re" && key != "im") throw InputError("unexpected key '" + key + "' in a coefficient");
    return z;
  }
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
  throw InputError("bad coefficient " + j.dump());
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

namespace {

HomogeneousForm form_from_json(const json& terms, int degree, const char* name) {
  if (!terms.is_array()) throw InputError(std::string(name) + " must be an array of terms");
  HomogeneousForm form(4, degree);
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
      throw InputError(std::string("each term of ") + name + " needs 'exp' and 'coef'");
    const auto& e = t.at("exp");
    if (!e.is_array() || e.size() != 4) throw InputError(std::string("exponents of ") + name + " need 4 entries");
    std::array<int, 4> exp{};
    for (int k = 0; k < 4; ++k) {
      if (!e[k].is_number_integer() || e[k].get<int>() < 0) throw InputError("exponents must be nonnegative integers");
      exp[k] = e[k].get<int>();
    }
    form.add_term(exp, coefficient_from_json(t.at("coef")));
  }
  return form;
}

json form_to_json(const HomogeneousForm& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({{"exp", {e[0], e[1], e[2], e[3]}}, {"coef", to_json(c)}});
  return out;
}

}  // namespace

QuarticData quartic_from_json(const json& j) {
  if (!j.is_object()) throw InputError("quartic must be a JSON object");
  for (const char* key : {"q2", "q3", "q4"})
    if (!j.contains(key)) throw InputError(std::string("quartic is missing '") + key + "'");
  return QuarticData::make(form_from_json(j.at("q2"), 2, "q2"), form_from_json(j.at("q3"), 3, "q3"),
                           form_from_json(j.at("q4"), 4, "q4"));
}

json to_json(const QuarticData& data) {
  return {{"q2", form_to_json(data.q2)}, {"q3", form_to_json(data.q3)}, {"q4", form_to_json(data.q4)}};
}

json to_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const ComplexPoint& p) {
  json out = json::array();
  for (const auto& z : p) out.push_back(to_json(z));
  return out;
}

json to_json(const ExactPoint& p) {
  json out = json::array();
  for (const auto& z : p) out.push_back(to_json(z));
  return out;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

ComplexPoint complex_point_from_text(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 4) throw InputError("a point needs 4 comma-separated coordinates");
  ComplexPoint p;
  for (int k = 0; k < 4; ++k) p[k] = parse_complex(parts[k]);
  return p;
}

ExactPoint exact_point_from_text(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 4) throw InputError("a point needs 4 comma-separated coordinates");
  ExactPoint p;
  for (int k = 0; k < 4; ++k) p[k] = parse_gaussian(parts[k]);
  return p;
}

json to_json(const LineThroughO& line) {
  return {{"direction", to_json(line.direction)},
          {"residuals", line.residuals},
          {"simple", line.simple},
          {"margin", line.margin},
          {"resultant_derivative", line.resultant_derivative},
          {"ambiguous_recovery", line.ambiguous_recovery}};
}

json to_json(const GenericityReport& r) {
  json lines = json::array();
  for (const auto& l : r.lines) lines.push_back(to_json(l));
  return {{"rank_q2", r.rank_q2},
          {"vertex_ok", r.vertex_ok},
          {"line_count", r.line_count},
          {"distinct", r.distinct},
          {"resultant_degree", r.resultant_degree},
          {"min_separation", r.min_separation},
          {"cluster_sizes", r.cluster_sizes},
          {"failures", r.failures},
          {"lines", lines}};
}

ResolutionGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph must be a JSON object");
  try {
    const int K = j.at("K").get<int>();
    const int L = j.at("L").get<int>();
    if (K < 1) throw InputError("K must be at least 1");
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw InputError("arrows are pairs [i, j]");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return ResolutionGraph::make(K, L, arrows);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad graph: ") + e.what());
  }
}

MultiplicityVector multiplicities_from_json(const json& j) {
  if (!j.contains("nu") || !j.contains("n")) throw InputError("graph data needs 'nu' and 'n'");
  std::vector<Rational> nu;
  for (const auto& v : j.at("nu")) nu.push_back(rational_from_json(v));
  MultiplicityVector m = MultiplicityVector::make(std::move(nu), rational_from_json(j.at("n")));
  auto problems = m.violations();
  if (!problems.empty()) {
    std::string msg = "invalid multiplicities:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InputError(msg);
  }
  return m;
}

CycleData cycle_from_json(const json& j) {
  if (!j.is_object()) throw InputError("cycle must be a JSON object");
  CycleData c;
  if (j.contains("m"))
    for (const auto& v : j.at("m")) c.m_values.push_back(rational_from_json(v));
  if (j.contains("beta")) c.beta = rational_from_json(j.at("beta"));
  if (j.contains("nu_B")) c.nu_b = rational_from_json(j.at("nu_B"));
  if (j.contains("d_B")) c.d_b = rational_from_json(j.at("d_B"));
  return c;
}

PipelineInput pipeline_input_from_json(const json& j) {
  PipelineInput in{graph_from_json(j), multiplicities_from_json(j), {}};
  if (!j.contains("cycle")) throw InputError("the pipeline needs 'cycle' data");
  in.cycle = cycle_from_json(j.at("cycle"));
  validate(in);
  return in;
}

json to_json(const ResolutionGraph& g) {
  json arrows = json::array();
  for (auto [i, k] : g.arrows()) arrows.push_back({i, k});
  return {{"K", g.K()}, {"L", g.L()}, {"arrows", arrows}};
}

json to_json(const PipelineInput& in) {
  json out = to_json(in.graph);
  json nu = json::array();
  for (int i = 1; i <= in.mult.K(); ++i) nu.push_back(to_string(in.mult.nu[i]));
  out["nu"] = nu;
  out["n"] = to_string(in.mult.n);
  json cycle = json::object();
  json m = json::array();
  for (const auto& v : in.cycle.m_values) m.push_back(to_string(v));
  cycle["m"] = m;
  if (in.cycle.beta) cycle["beta"] = to_string(*in.cycle.beta);
  if (in.cycle.nu_b) cycle["nu_B"] = to_string(*in.cycle.nu_b);
  if (in.cycle.d_b) cycle["d_B"] = to_string(*in.cycle.d_b);
  out["cycle"] = cycle;
  return out;
}

json to_json(const PipelineVerdict& v) {
  json steps = json::array();
  for (const auto& s : v.steps) steps.push_back({{"step", s.name}, {"status", to_string(s.status)}, {"detail", s.detail}});
  json r = json::array();
  for (std::size_t i = 1; i < v.r.size(); ++i) r.push_back(v.r[i]);
  return {{"outcome", to_string(v.outcome)},
          {"deciding_step", v.deciding_step},
          {"maximal_vertex", v.maximal_vertex},
          {"r", r},
          {"steps", steps}};
}

json to_json(const PipelineBatch& b) {
  json steps = json::object(), outcomes = json::object();
  for (const auto& [k, v] : b.deciding_steps) steps[k] = v;
  for (const auto& [k, v] : b.outcomes) outcomes[k] = v;
  return {{"instances", b.instances},
          {"outcomes", outcomes},
          {"deciding_steps", steps},
          {"non_contradicted", b.non_contradicted}};
}

json to_json(const RatioScan& scan) {
  return {{"checked", scan.checked}, {"counterexamples", scan.counterexamples}, {"equality_cases", scan.equality_cases}};
}

json to_json(const FeasibilityResult& r, std::size_t row_limit) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.feasible.size() && i < row_limit; ++i) rows.push_back(r.feasible[i]);
  return {{"form", to_string(r.form)},
          {"columns", r.columns},
          {"checked", r.checked},
          {"feasible_count", r.feasible.size()},
          {"feasible", rows},
          {"truncated", r.feasible.size() > row_limit},
          {"claim", r.claim},
          {"claim_holds", r.claim_holds},
          {"claim_violations", r.claim_violations}};
}

json to_json(const DegreeState& s) {
  auto opt = [](const std::optional<std::int64_t>& v) -> json { return v ? json(*v) : json("?"); };
  json mu = json::array();
  for (const auto& v : s.mu) mu.push_back(opt(v));
  return {{"n", s.n}, {"m", opt(s.m)}, {"mu", mu}, {"clamped", s.clamped}, {"text", render_state(s)}};
}

json make_report(const std::string& command, const json& arguments, const WorkbenchConfig& config,
                 const std::string& check, const json& results, bool passed, double seconds) {
  return {{"command", command},
          {"arguments", arguments},
          {"config", to_json(config)},
          {"check", check},
          {"passed", passed},
          {"results", results},
          {"timing", {{"seconds", seconds}}}};
}

}  // namespace qwb
