#ifndef QWB_UNTWISTING_HPP
#define QWB_UNTWISTING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwb {

inline constexpr int kLineCount = 24;
inline constexpr int kGeneratorCount = 25;

/// Numerical data of a mobile system: degree n, multiplicity m along the
/// exceptional quadric and mu_i along the 24 lines. std::nullopt is UNKNOWN.
struct DegreeState {
  std::int64_t n = 1;
  std::optional<std::int64_t> m;
  std::array<std::optional<std::int64_t>, kLineCount> mu{};
  /// Set when an update produced a negative multiplicity that was clamped.
  bool clamped = false;

  /// Entry by generator index: 0 is m, a >= 1 is mu_a.
  const std::optional<std::int64_t>& entry(int generator) const { return generator == 0 ? m : mu[generator - 1]; }
  std::optional<std::int64_t>& entry(int generator) { return generator == 0 ? m : mu[generator - 1]; }

  static DegreeState uniform(std::int64_t n, std::int64_t m, std::int64_t mu_all);
  friend bool operator==(const DegreeState&, const DegreeState&) = default;
};

/// Parses "n,m,mu1,...,mu24" with "?" for UNKNOWN; trailing mu's may be
/// omitted and are then UNKNOWN.
DegreeState parse_state(std::string_view text);
std::string render_state(const DegreeState& s);

struct Classification {
  enum class Kind { Canonical, Untwist, Invalid, Blocked };
  Kind kind = Kind::Canonical;
  int generator = -1;  // for Untwist
  std::vector<int> excess;  // generators whose entry exceeds n
};

std::string to_string(Classification::Kind k);

/// Untwist(a) when exactly one known entry exceeds n; Invalid when two or
/// more do; Canonical when all entries are known and <= n; Blocked when
/// nothing exceeds n but some entry is UNKNOWN.
Classification classify(const DegreeState& state);

/// One untwisting step by the unique excess generator. Negative updated
/// multiplicities are clamped to 0 and `clamped` is set. Throws DomainError
/// when the state is not Untwist or the new degree is below 1.
DegreeState untwist_step(const DegreeState& state);

struct UntwistRun {
  std::vector<std::pair<int, DegreeState>> steps;
  Classification final_class;
  DegreeState final_state;
  bool terminal_clamp = false;
};

UntwistRun untwist_run(const DegreeState& state);

/// Cancels adjacent equal letters until none remain.
std::vector<int> word_reduce(const std::vector<int>& word);
bool is_reduced(const std::vector<int>& word);

/// Smallest interior index e with seq[e] > seq[e-1] and seq[e] > seq[e+1].
/// Throws InputError on adjacent equal entries.
std::optional<std::size_t> find_local_max(const std::vector<std::int64_t>& seq);

struct PlaneSectionReport {
  std::vector<std::pair<int, int>> flagged;  // 1-based line indices
  bool two_excess = false;                   // a flagged pair with both mu > n
};

/// Flags every pair of lines with mu_i + mu_j > 2n. Throws InputError when
/// some mu is UNKNOWN.
PlaneSectionReport check_plane_section(const DegreeState& state);

}  // namespace qwb

#endif
