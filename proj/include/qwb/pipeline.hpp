#ifndef QWB_PIPELINE_HPP
#define QWB_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qwb/graph.hpp"

namespace qwb {

enum class StepStatus {
  Passed,
  Contradiction,  // the data violates a geometric constraint
  Inconsistent,   // a derived inequality failed although its inputs passed
  Refused,        // data needed by the step is missing
};

enum class Outcome { Contradiction, QuadricMaximal, Survived, Inconsistent, Incomplete };

std::string to_string(StepStatus s);
std::string to_string(Outcome o);

struct PipelineStep {
  std::string name;
  StepStatus status = StepStatus::Passed;
  std::string detail;
};

struct PipelineVerdict {
  Outcome outcome = Outcome::Survived;
  std::string deciding_step;  // empty when every step passed
  std::vector<PipelineStep> steps;
  int maximal_vertex = 0;     // after the descent, 0 if not reached
  std::vector<std::uint64_t> r;  // r_1..r_K of the truncated graph, index 0 unused
};

struct PipelineInput {
  ResolutionGraph graph;
  MultiplicityVector mult;
  CycleData cycle;
};

/// Throws InputError when the data breaks a type invariant.
void validate(const PipelineInput& input);

/// Runs the exclusion argument step by step:
///   input, quadric_maximal, noether_fano, descend, centre_is_point,
///   modified_nf, compatible, counting_bound, quadratic_minimum, pair_sum,
///   line_component, line_multiplicity, section_inequality, theta_bound,
///   chain_length, long_chain_ratio, degree_bound.
/// Stops at the first step that does not pass.
PipelineVerdict exclusion_pipeline(const PipelineInput& input);

struct CandidateOptions {
  int max_K = 7;
  int max_n = 12;
  double adversarial_share = 0.5;  // fraction of candidates tuned to pass the early gates
};

/// Random data meeting every type invariant with nu_1 <= n. Deterministic in
/// (seed, index).
PipelineInput random_candidate(std::uint64_t seed, std::uint64_t index, const CandidateOptions& options = {});

struct PipelineBatch {
  std::int64_t instances = 0;
  std::map<std::string, std::int64_t> deciding_steps;  // step name -> count
  std::map<std::string, std::int64_t> outcomes;
  std::vector<std::uint64_t> non_contradicted;  // candidate indices
};

PipelineBatch run_pipeline_batch(std::int64_t count, std::uint64_t seed, const CandidateOptions& options = {},
                                 bool parallel = true);

}  // namespace qwb

#endif
