#include "qwb/untwisting.hpp"

#include <charconv>

#include "qwb/errors.hpp"
#include "qwb/picard.hpp"

namespace qwb {

DegreeState DegreeState::uniform(std::int64_t n, std::int64_t m, std::int64_t mu_all) {
  DegreeState s;
  s.n = n;
  s.m = m;
  for (auto& v : s.mu) v = mu_all;
  return s;
}

DegreeState parse_state(std::string_view text) {
  std::vector<std::optional<std::int64_t>> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "?") {
      values.emplace_back();
    } else {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size())
        throw InputError("bad state entry '" + std::string(item) + "'");
      values.emplace_back(v);
    }
    start = comma + 1;
  }
  if (values.size() < 2 || values.size() > 2 + kLineCount)
    throw InputError("state needs n, m and at most 24 line multiplicities");
  if (!values[0] || *values[0] < 1) throw InputError("n must be a known positive integer");
  DegreeState s;
  s.n = *values[0];
  s.m = values[1];
  for (std::size_t k = 2; k < values.size(); ++k) s.mu[k - 2] = values[k];
  for (int g = 0; g < kGeneratorCount; ++g)
    if (s.entry(g) && *s.entry(g) < 0) throw InputError("multiplicities must be nonnegative");
  return s;
}

std::string render_state(const DegreeState& s) {
  auto show = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("?"); };
  std::string out = std::to_string(s.n) + "," + show(s.m);
  for (const auto& v : s.mu) out += "," + show(v);
  return out;
}

std::string to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Canonical: return "canonical";
    case Classification::Kind::Untwist: return "untwist";
    case Classification::Kind::Invalid: return "invalid";
    case Classification::Kind::Blocked: return "blocked";
  }
  return "?";
}

Classification classify(const DegreeState& state) {
  Classification c;
  bool unknown = false;
  for (int g = 0; g < kGeneratorCount; ++g) {
    const auto& v = state.entry(g);
    if (!v)
      unknown = true;
    else if (*v > state.n)
      c.excess.push_back(g);
  }
  if (c.excess.size() >= 2) {
    c.kind = Classification::Kind::Invalid;
  } else if (c.excess.size() == 1) {
    c.kind = Classification::Kind::Untwist;
    c.generator = c.excess.front();
  } else {
    c.kind = unknown ? Classification::Kind::Blocked : Classification::Kind::Canonical;
  }
  return c;
}

DegreeState untwist_step(const DegreeState& state) {
  Classification c = classify(state);
  if (c.kind != Classification::Kind::Untwist) throw DomainError("untwist_step needs exactly one excess entry");
  const int a = c.generator;
  const std::int64_t n = state.n;
  DegreeState next;
  next.mu.fill(std::nullopt);
  auto clamp = [&](std::int64_t v) {
    if (v < 0) {
      next.clamped = true;
      return std::int64_t{0};
    }
    return v;
  };
  if (a == 0) {
    const std::int64_t m = *state.m;
    next.n = degree_after(0, n, m);
    next.m = 4 * n - 3 * m;
  } else {
    const std::int64_t mu = *state.mu[a - 1];
    next.n = degree_after(a, n, mu);
    next.mu[a - 1] = 12 * n - 11 * mu;
    if (state.m) next.m = 6 * n + *state.m - 6 * mu;
  }
  if (next.n < 1)
    throw DomainError("untwisting gives degree " + std::to_string(next.n) +
                      "; the state cannot come from a mobile system");
  if (next.m) next.m = clamp(*next.m);
  for (auto& v : next.mu)
    if (v) v = clamp(*v);
  return next;
}

UntwistRun untwist_run(const DegreeState& state) {
  UntwistRun run;
  DegreeState current = state;
  for (;;) {
    Classification c = classify(current);
    if (c.kind != Classification::Kind::Untwist || current.clamped) {
      run.final_class = c;
      break;
    }
    DegreeState next = untwist_step(current);
    if (next.n >= current.n) throw DomainError("untwisting failed to decrease the degree");
    run.steps.emplace_back(c.generator, next);
    current = next;
  }
  run.final_state = current;
  run.terminal_clamp = current.clamped;
  return run;
}

std::vector<int> word_reduce(const std::vector<int>& word) {
  std::vector<int> stack;
  for (int letter : word) {
    if (!stack.empty() && stack.back() == letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return stack;
}

bool is_reduced(const std::vector<int>& word) {
  for (std::size_t k = 1; k < word.size(); ++k)
    if (word[k] == word[k - 1]) return false;
  return true;
}

std::optional<std::size_t> find_local_max(const std::vector<std::int64_t>& seq) {
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (seq[k] == seq[k - 1]) throw InputError("adjacent entries of the degree sequence coincide");
  for (std::size_t e = 1; e + 1 < seq.size(); ++e)
    if (seq[e] > seq[e - 1] && seq[e] > seq[e + 1]) return e;
  return std::nullopt;
}

PlaneSectionReport check_plane_section(const DegreeState& state) {
  PlaneSectionReport report;
  for (const auto& v : state.mu)
    if (!v) throw InputError("plane-section check needs every line multiplicity");
  for (int i = 0; i < kLineCount; ++i)
    for (int j = i + 1; j < kLineCount; ++j) {
      std::int64_t a = *state.mu[i], b = *state.mu[j];
      if (a + b > 2 * state.n) {
        report.flagged.emplace_back(i + 1, j + 1);
        if (a > state.n && b > state.n) report.two_excess = true;
      }
    }
  return report;
}

}  // namespace qwb
