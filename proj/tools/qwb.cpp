// Command-line front end. Every command prints a JSON report on stdout and a
// one-line summary on stderr. Exit codes: 0 pass, 1 failed check, 2 bad input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "qwb/errors.hpp"
#include "qwb/graph.hpp"
#include "qwb/inequalities.hpp"
#include "qwb/involutions.hpp"
#include "qwb/json_io.hpp"
#include "qwb/picard.hpp"
#include "qwb/pipeline.hpp"
#include "qwb/quartic.hpp"
#include "qwb/untwisting.hpp"

using namespace qwb;

namespace {

std::string sci(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x;
  return os.str();
}

struct CommandResult {
  std::string check;
  json results;
  bool passed = true;
  std::string summary;
};

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::string json_path;
  WorkbenchConfig config;
};

constexpr double kRoundTrip = 1e-8;

QuarticData load_quartic(const std::string& path) {
  return path.empty() ? bundled_quartic() : quartic_from_json(read_json_file(path));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("'" + item + "' is not an integer");
    }
  }
  return out;
}

LineSearchOptions line_options(const WorkbenchConfig& c) {
  LineSearchOptions o;
  o.tolerance = c.tolerance;
  o.separation = c.separation;
  o.seed = c.seed;
  return o;
}

double distance(const ComplexPoint& a, const ComplexPoint& b) {
  double s = 0, t = 0;
  for (int k = 0; k < 4; ++k) {
    s += std::norm(a[k] - b[k]);
    t += std::norm(a[k]);
  }
  return std::sqrt(s) / std::max(1.0, std::sqrt(t));
}

// ---- quartic commands ------------------------------------------------------

CommandResult cmd_genericity(const Globals& g, const std::string& file) {
  GenericityReport r = check_genericity(load_quartic(file), line_options(g.config));
  CommandResult out{"quartic genericity: rank 3 quadric cone, q3 nonzero at its vertex, 24 distinct simple lines",
                    to_json(r), false, ""};
  out.passed = r.failures.empty() && r.distinct && r.line_count == 24;
  out.summary = "rank " + std::to_string(r.rank_q2) + ", vertex " + (r.vertex_ok ? "ok" : "fails") + ", " +
                std::to_string(r.line_count) + " lines" +
                (r.failures.empty() ? "" : ", failures: " + json(r.failures).dump());
  return out;
}

CommandResult cmd_lines(const Globals& g, const std::string& file) {
  GenericityReport r = find_lines(load_quartic(file), line_options(g.config));
  json lines = json::array();
  for (std::size_t i = 0; i < r.lines.size(); ++i) {
    json l = to_json(r.lines[i]);
    l["index"] = i + 1;
    lines.push_back(l);
  }
  CommandResult out{"lines through the double point", {{"line_count", r.line_count}, {"distinct", r.distinct}, {"lines", lines}},
                    r.distinct && r.line_count == 24, ""};
  out.summary = std::to_string(r.line_count) + " lines, " + (r.distinct ? "distinct" : "not distinct");
  return out;
}

CommandResult cmd_tau0(const Globals& g, const std::string& file, const std::string& point) {
  QuarticData data = load_quartic(file);
  const auto track = g.config.arithmetic_track;
  bool exact = track == ArithmeticTrack::Exact;
  ExactPoint xe{};
  if (track != ArithmeticTrack::Complex) {
    try {
      xe = exact_point_from_text(point);
      exact = true;
    } catch (const InputError&) {
      if (track == ArithmeticTrack::Exact) throw;
    }
  }
  if (exact) {
    if (!data.f(xe).is_zero()) throw InputError("the point does not lie on the quartic");
    const GaussianRational t = second_vieta_root(data, xe);
    const ExactPoint image = apply_galois_involution(data, xe);
    const ExactPoint back = apply_galois_involution(data, image);
    const bool fixed = t == GaussianRational(1);
    CommandResult out{"Galois involution x -> (q2/q4)(x) x, exact",
                      {{"track", "exact"},
                       {"point", to_json(xe)},
                       {"image", to_json(image)},
                       {"second_root", to_json(t)},
                       {"fixed_point", fixed},
                       {"involutive", back == xe},
                       {"image_on_quartic", data.f(image).is_zero()}},
                      back == xe && data.f(image).is_zero() && (fixed == (image == xe)), ""};
    out.summary = std::string("image computed exactly, ") + (fixed ? "fixed point" : "not fixed") +
                  (out.passed ? ", involutive" : ", NOT involutive");
    return out;
  }
  const ComplexPoint x = complex_point_from_text(point);
  const double scale = std::max(1.0, std::pow(std::sqrt(std::norm(x[0]) + std::norm(x[1]) + std::norm(x[2]) + std::norm(x[3])), 4));
  if (std::abs(data.f(x)) > 1e-9 * scale) throw InputError("the point does not lie on the quartic");
  const ComplexPoint image = apply_galois_involution(data, x);
  const ComplexPoint back = apply_galois_involution(data, image, 1e-6);
  const double err = distance(back, x);
  const double fres = std::abs(data.f(image));
  CommandResult out{"Galois involution x -> (q2/q4)(x) x, complex",
                    {{"track", "complex"}, {"point", to_json(x)}, {"image", to_json(image)}, {"f_image", fres},
                     {"round_trip", err}},
                    err < kRoundTrip, ""};
  out.summary = "round trip " + sci(err);
  return out;
}

CommandResult cmd_tau_line(const Globals& g, const std::string& file, int line, const std::string& point) {
  QuarticData data = load_quartic(file);
  GenericityReport r = find_lines(data, line_options(g.config));
  if (line < 1 || line > static_cast<int>(r.lines.size()))
    throw InputError("line index must lie in 1.." + std::to_string(r.lines.size()));
  const ComplexPoint dir = r.lines[line - 1].direction;
  const ComplexPoint x = complex_point_from_text(point);
  LineInvolutionResult first = apply_line_involution(data, dir, x);
  LineInvolutionResult second = apply_line_involution(data, dir, first.image);
  const double err = distance(second.image, x);
  const double plane = plane_distance(dir, x, first.image);
  const auto& f = first.fibre;
  CommandResult out{"line involution: reflection in the residual plane cubic",
                    {{"line", line},
                     {"direction", to_json(dir)},
                     {"point", to_json(x)},
                     {"image", to_json(first.image)},
                     {"f_image", first.f_residual},
                     {"plane_distance", plane},
                     {"round_trip", err},
                     {"origin_tangential", first.origin_tangential},
                     {"fibre",
                      {{"division_residue", f.division_residue},
                       {"line_multiplicity", f.line_multiplicity},
                       {"origin_gradient", f.origin_gradient},
                       {"relative_discriminant", f.relative_discriminant}}}},
                    err < kRoundTrip && first.f_residual < kRoundTrip && plane < kRoundTrip, ""};
  out.summary = "round trip " + sci(err) + ", |f(image)| " + sci(first.f_residual);
  return out;
}

// ---- Picard, untwisting, words --------------------------------------------

CommandResult cmd_pic(const std::string& state) {
  auto v = parse_int_list(state);
  const auto& gm = galois_pullback_matrix();
  const auto& lm = line_pullback_matrix();
  json matrices = {{"galois", gm.entries}, {"line", lm.entries}};
  if (v.size() == 2) {
    PicClass c = PicClass::mobile(v[0], v[1]);
    PicClass image = galois_involution_pullback(c);
    const bool ok = gm.is_involution() && galois_involution_pullback(image) == c &&
                    image.n() == degree_after(0, v[0], v[1]);
    CommandResult out{"pullback by the Galois involution, degree 3n - 2m",
                      {{"class", render(c)}, {"image", render(image)}, {"degree_after", degree_after(0, v[0], v[1])},
                       {"matrices", matrices}, {"involution", gm.is_involution()}},
                      ok, ""};
    out.summary = render(c) + " -> " + render(image);
    return out;
  }
  if (v.size() == 3) {
    PicClassLine c = PicClassLine::mobile(v[0], v[1], v[2]);
    PicClassLine image = line_involution_pullback(c);
    const bool ok = lm.is_involution() && line_involution_pullback(image) == c &&
                    image.coef_h == degree_after(1, v[0], v[2]);
    CommandResult out{"pullback by a line involution, degree 11n - 10mu",
                      {{"class", render(c, 1)}, {"image", render(image, 1)}, {"degree_after", degree_after(1, v[0], v[2])},
                       {"matrices", matrices}, {"involution", lm.is_involution()}},
                      ok, ""};
    out.summary = render(c, 1) + " -> " + render(image, 1);
    return out;
  }
  throw InputError("--state needs n,m or n,m,mu");
}

CommandResult cmd_untwist(const std::string& state) {
  DegreeState s = parse_state(state);
  UntwistRun run = untwist_run(s);
  json steps = json::array();
  for (const auto& [gen, st] : run.steps) steps.push_back({{"generator", gen}, {"state", to_json(st)}});
  json results = {{"start", to_json(s)},
                  {"steps", steps},
                  {"final_class", to_string(run.final_class.kind)},
                  {"final_state", to_json(run.final_state)},
                  {"terminal_clamp", run.terminal_clamp}};
  bool known = true;
  for (const auto& mu : run.final_state.mu) known = known && mu.has_value();
  if (known) {
    PlaneSectionReport p = check_plane_section(run.final_state);
    results["plane_section"] = {{"flagged", p.flagged}, {"two_excess", p.two_excess}};
  }
  CommandResult out{"untwisting by the unique excess generator until canonical", results, true, ""};
  out.summary = std::to_string(run.steps.size()) + " steps, final " + to_string(run.final_class.kind) + " at n = " +
                std::to_string(run.final_state.n);
  return out;
}

CommandResult cmd_word(const std::string& reduce, const std::string& local_max) {
  json results = json::object();
  std::string summary;
  if (!reduce.empty() || local_max.empty()) {
    auto raw = parse_int_list(reduce);
    std::vector<int> word;
    for (auto v : raw) {
      if (v < 0 || v >= kGeneratorCount) throw InputError("letters must lie in 0..24");
      word.push_back(static_cast<int>(v));
    }
    auto reduced = word_reduce(word);
    results["reduced"] = reduced;
    results["is_reduced"] = is_reduced(reduced);
    summary = "reduced word " + json(reduced).dump();
  }
  if (!local_max.empty()) {
    auto idx = find_local_max(parse_int_list(local_max));
    results["local_max"] = idx ? json(*idx) : json(nullptr);
    summary += (summary.empty() ? "" : ", ") + std::string("local maximum ") + (idx ? std::to_string(*idx) : "none");
  }
  return {"free-product word reduction and local maxima of degree sequences", results, true, summary};
}

// ---- graphs, scans, pipeline -----------------------------------------------

CommandResult cmd_graph(const std::string& file, bool nf, bool modify, bool pipeline) {
  json j = read_json_file(file);
  ResolutionGraph g = graph_from_json(j);
  if (!nf && !modify && !pipeline) nf = modify = true;
  const int K = g.K();
  PathCounts p = path_counts(g);
  json counts = json::array();
  for (int i = 1; i <= K; ++i) {
    json row = json::array();
    for (int k = 1; k <= K; ++k) row.push_back(p(i, k));
    counts.push_back(row);
  }
  json delta = json::array();
  for (int i = 1; i <= K; ++i) delta.push_back(g.delta(i));
  json results = {{"graph", to_json(g)}, {"delta", delta}, {"path_counts", counts}};
  bool passed = true;
  std::string summary = "K=" + std::to_string(K) + " L=" + std::to_string(g.L());
  std::optional<MultiplicityVector> mult;
  if (j.contains("nu")) mult = multiplicities_from_json(j);
  if (nf) {
    if (!mult) throw InputError("--nf needs 'nu' and 'n'");
    NoetherFano r = noether_fano_check(g, *mult);
    results["noether_fano"] = {{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"holds", r.holds}};
    summary += std::string(", inequality ") + (r.holds ? "holds" : "fails");
    if (r.holds) {
      Descent d = descend_to_strict(g, *mult);
      results["descent"] = {{"vertex", d.vertex}, {"trail", d.trail}};
    }
  }
  if (modify) {
    ResolutionGraph m = modify_graph(g);
    PathCounts pm = path_counts(m);
    bool counts_ok = true;
    for (int i = 1; i <= K; ++i) counts_ok = counts_ok && (i > g.L() ? pm(K, i) == p(K, i) : pm(K, i) <= p(K, i));
    auto r = r_values(g);
    std::vector<Rational> a;
    for (int i = 1; i <= g.L(); ++i) a.emplace_back(static_cast<unsigned long>(r[i]));
    const bool compatible = compatible_check(g, a);
    json rv(std::vector<std::uint64_t>(r.begin() + 1, r.end()));
    results["modified"] = {{"graph", to_json(m)}, {"r", rv}, {"path_counts_ok", counts_ok}, {"r_compatible", compatible}};
    passed = passed && counts_ok && compatible;
    if (mult) {
      ModifiedNoetherFano mn = modified_nf_check(g, *mult);
      results["modified"]["noether_fano"] = {
          {"holds", mn.holds ? json(*mn.holds) : json(nullptr)}, {"refusal", mn.refusal},
          {"lhs", to_json(mn.values.lhs)}, {"rhs", to_json(mn.values.rhs)}};
      if (mn.holds && !*mn.holds) passed = false;
    }
    summary += ", r = " + rv.dump();
  }
  if (pipeline) {
    PipelineVerdict v = exclusion_pipeline(pipeline_input_from_json(j));
    results["pipeline"] = to_json(v);
    passed = passed && (v.outcome == qwb::Outcome::Contradiction || v.outcome == qwb::Outcome::QuadricMaximal);
    summary += ", pipeline " + to_string(v.outcome) + (v.deciding_step.empty() ? "" : " at " + v.deciding_step);
  }
  return {"resolution graph calculus: path counts, inequality, modification, exclusion pipeline", results, passed,
          summary};
}

CommandResult cmd_scan(const Globals& g, const std::string& form, std::int64_t nmax, std::int64_t max, std::int64_t s0max,
                 std::int64_t s1max, std::size_t rows, bool serial) {
  const bool parallel = !serial;
  if (form == "pair_sum") {
    const std::int64_t a = s0max > 0 ? s0max : g.config.bound("s0_max");
    const std::int64_t b = s1max > 0 ? s1max : g.config.bound("s1_max");
    RatioScan s = pair_sum_scan(a, b, parallel);
    bool eq_ok = true;
    for (const auto& t : s.equality_cases) eq_ok = eq_ok && t[0] == t[1] && t[2] == 0;
    json r = to_json(s);
    r["bounds"] = {{"s0_max", a}, {"s1_max", b}};
    r["equality_only_at_c_c_0"] = eq_ok;
    return {"pair-sum ratio 2(r1+2S0+S1)^2/((r1+S0)(r1+2S0+2S1)) >= 3 for 1 <= r1 <= S0", r,
            s.counterexamples.empty() && eq_ok,
            std::to_string(s.checked) + " triples, " + std::to_string(s.counterexamples.size()) + " counterexamples"};
  }
  if (form == "long_chain") {
    const std::int64_t a = max > 0 ? max : g.config.bound("chain_max");
    RatioScan s = long_chain_scan(a, parallel);
    json r = to_json(s);
    r["bounds"] = {{"max", a}};
    return {"long-chain ratio (r1+2S0+S1)^2/((r1+S0)(r1+2S0+2S1)) >= 2 for S1 > r1 + 2 S0", r,
            s.counterexamples.empty(),
            std::to_string(s.checked) + " triples, " + std::to_string(s.counterexamples.size()) + " counterexamples"};
  }
  if (form == "lattice") {
    const int kmax = max > 0 ? static_cast<int>(max) : 6;
    LatticeScan s = modified_nf_lattice_scan(kmax, 4, 2, parallel);
    return {"inequality on the original graph implies it on the modified graph (lattice nu in Z/2, n = 4)",
            {{"max_K", kmax}, {"graphs", s.graphs}, {"instances", s.instances}, {"premise", s.premise},
             {"counterexamples", s.counterexamples}},
            s.counterexamples.empty(),
            std::to_string(s.premise) + " premises, " + std::to_string(s.counterexamples.size()) + " counterexamples"};
  }
  FeasibilityForm f = parse_feasibility_form(form);
  FeasibilityBounds b;
  b.n_max = nmax > 0 ? nmax : g.config.bound("n_max");
  FeasibilityResult r = feasibility_scan(f, b, parallel);
  json payload = to_json(r, rows);
  payload["bounds"] = {{"n_max", b.n_max}};
  return {"feasibility scan " + to_string(f) + ": " + r.claim, payload, r.claim_holds,
          std::to_string(r.feasible.size()) + " feasible of " + std::to_string(r.checked) + ", claim " +
              (r.claim_holds ? "holds" : "fails")};
}

CommandResult cmd_pipeline(const Globals& g, const std::string& file, std::int64_t random, bool serial) {
  if (!file.empty()) {
    PipelineVerdict v = exclusion_pipeline(pipeline_input_from_json(read_json_file(file)));
    const bool ok = v.outcome == qwb::Outcome::Contradiction || v.outcome == qwb::Outcome::QuadricMaximal;
    return {"exclusion argument: every candidate is contradicted or has a maximal quadric", to_json(v), ok,
            to_string(v.outcome) + (v.deciding_step.empty() ? "" : " at " + v.deciding_step)};
  }
  if (random < 1) throw InputError("pipeline needs --file or --random N");
  PipelineBatch b = run_pipeline_batch(random, g.config.seed, {}, !serial);
  json r = to_json(b);
  r["seed"] = g.config.seed;
  return {"exclusion argument on random candidates with nu_1 <= n: none survives", r, b.non_contradicted.empty(),
          std::to_string(b.instances) + " candidates, " + std::to_string(b.non_contradicted.size()) +
              " not contradicted"};
}

CommandResult cmd_report(const Globals& g) {
  json checks = json::array();
  bool all = true;
  auto add = [&](const CommandResult& o) {
    checks.push_back({{"check", o.check}, {"passed", o.passed}, {"summary", o.summary}});
    all = all && o.passed;
  };
  add(cmd_genericity(g, ""));
  add(cmd_pic("7,3"));
  add(cmd_pic("7,1,1"));
  add(cmd_scan(g, "pair_sum", 0, 0, 0, 0, 0, false));
  add(cmd_scan(g, "long_chain", 0, 0, 0, 0, 0, false));
  for (const char* f : {"twisted_cubic", "plane_pair", "section_bound", "self_intersection"})
    add(cmd_scan(g, f, 0, 0, 0, 0, 0, false));
  add(cmd_scan(g, "lattice", 0, 5, 0, 0, 0, false));
  add(cmd_pipeline(g, "", 1000, false));
  return {"workbench summary over the bundled fixtures", {{"checks", checks}}, all,
          std::to_string(checks.size()) + " checks, " + (all ? "all pass" : "some fail")};
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("QWB_THREADS")) {
    const int t = std::atoi(threads);
    if (t > 0) omp_set_num_threads(t);
  }

  CLI::App app{"Workbench for a quartic threefold with a double point"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "JSON config file");
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_option("--tolerance", g.tolerance, "numerical tolerance");
  app.add_option("--json", g.json_path, "also write the report to this file");

  std::string file, point, state, reduce, local_max, form;
  int line = 0;
  bool nf = false, modify = false, pipeline = false, serial = false;
  std::int64_t nmax = 0, max = 0, s0max = 0, s1max = 0, random = 0;
  std::size_t rows = 50;
  std::function<CommandResult()> run;

  auto* genericity = app.add_subcommand("genericity", "check the genericity conditions");
  genericity->add_option("--file", file, "quartic JSON (default: bundled fixture)");
  genericity->callback([&] { run = [&] { return cmd_genericity(g, file); }; });

  auto* lines = app.add_subcommand("lines", "list the lines through the double point");
  lines->add_option("--file", file, "quartic JSON (default: bundled fixture)");
  lines->callback([&] { run = [&] { return cmd_lines(g, file); }; });

  auto* tau0 = app.add_subcommand("tau0", "apply the Galois involution");
  tau0->add_option("--file", file, "quartic JSON (default: bundled fixture)");
  tau0->add_option("--point", point, "z1,z2,z3,z4")->required();
  tau0->callback([&] { run = [&] { return cmd_tau0(g, file, point); }; });

  auto* tau_line = app.add_subcommand("tau-line", "apply the involution attached to a line");
  tau_line->add_option("--file", file, "quartic JSON (default: bundled fixture)");
  tau_line->add_option("--line", line, "line index 1..24")->required();
  tau_line->add_option("--point", point, "z1,z2,z3,z4")->required();
  tau_line->callback([&] { run = [&] { return cmd_tau_line(g, file, line, point); }; });

  auto* pic = app.add_subcommand("pic", "pull back a mobile class");
  pic->add_option("--state", state, "n,m (Galois) or n,m,mu (line)")->required();
  pic->callback([&] { run = [&] { return cmd_pic(state); }; });

  auto* untwist = app.add_subcommand("untwist", "run the untwisting loop");
  untwist->add_option("--state", state, "n,m,mu1,...,mu24 with ? for unknown")->required();
  untwist->callback([&] { run = [&] { return cmd_untwist(state); }; });

  auto* word = app.add_subcommand("word", "reduce a word or find a local maximum");
  word->add_option("--reduce", reduce, "comma-separated letters 0..24");
  word->add_option("--local-max", local_max, "comma-separated degree sequence");
  word->callback([&] { run = [&] { return cmd_word(reduce, local_max); }; });

  auto* graph = app.add_subcommand("graph", "resolution graph calculus");
  graph->add_option("--file", file, "graph JSON")->required();
  graph->add_flag("--nf", nf, "evaluate the inequality and descend");
  graph->add_flag("--modify", modify, "modify the graph and check path counts");
  graph->add_flag("--pipeline", pipeline, "run the exclusion pipeline (needs cycle data)");
  graph->callback([&] { run = [&] { return cmd_graph(file, nf, modify, pipeline); }; });

  auto* scan = app.add_subcommand("scan", "exhaustive inequality scans");
  scan->add_option("--form", form,
                   "twisted_cubic|plane_pair|section_bound|self_intersection (a-d), pair_sum, long_chain, lattice")
      ->required();
  scan->add_option("--nmax", nmax, "largest n for feasibility forms");
  scan->add_option("--max", max, "bound for long_chain; max K for lattice");
  scan->add_option("--s0max", s0max, "bound on S0 for pair_sum");
  scan->add_option("--s1max", s1max, "bound on S1 for pair_sum");
  scan->add_option("--rows", rows, "feasible rows to print");
  scan->add_flag("--serial", serial, "use the serial kernel");
  scan->callback([&] { run = [&] { return cmd_scan(g, form, nmax, max, s0max, s1max, rows, serial); }; });

  auto* pipe = app.add_subcommand("pipeline", "exclusion pipeline on a file or random candidates");
  pipe->add_option("--file", file, "graph JSON with cycle data");
  pipe->add_option("--random", random, "number of random candidates");
  pipe->add_flag("--serial", serial, "run the batch serially");
  pipe->callback([&] { run = [&] { return cmd_pipeline(g, file, random, serial); }; });

  auto* report = app.add_subcommand("report", "run the main checks on the bundled fixtures");
  report->callback([&] { run = [&] { return cmd_report(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json arguments = json::array();
  for (int i = 1; i < argc; ++i) arguments.push_back(argv[i]);

  try {
    if (!g.config_path.empty()) g.config = config_from_json(read_json_file(g.config_path));
    if (g.seed) g.config.seed = *g.seed;
    if (g.tolerance) g.config.tolerance = *g.tolerance;
    g.config.validate();

    const auto t0 = std::chrono::steady_clock::now();
    CommandResult o = run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json out = make_report(command, arguments, g.config, o.check, o.results, o.passed, seconds);
    const std::string text = out.dump(2);
    std::cout << text << "\n";
    if (!g.json_path.empty()) {
      std::ofstream f(g.json_path);
      if (!f) throw InputError("cannot write '" + g.json_path + "'");
      f << text << "\n";
    }
    std::cerr << command << ": " << (o.passed ? "PASS" : "FAIL") << " - " << o.summary << "\n";
    return o.passed ? 0 : 1;
  } catch (const InputError& e) {
    std::cout << json{{"command", command}, {"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << command << ": input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cout << json{{"command", command}, {"error", "domain"}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << command << ": " << e.what() << "\n";
    return 1;
  }
}
