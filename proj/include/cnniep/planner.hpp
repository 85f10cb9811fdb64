#pragma once

// Chooses and runs a construction for a normalized spectrum.
//
// Constructions, in the order "auto" tries them:
//   four_by_four     {lambda0, lambda1, z}                         order 4
//   one_pair         n >= 1 negative reals, one pair                order n + 3
//   three_pairs_8x8  one negative real, three pairs                 order 8
//   circulant_pair   one negative real, an even number 2s of pairs  order 4s + 2
//   three_pairs      n >= 1 negative reals, three pairs             order n + 7
//   even_pairs       n >= 1 negative reals, an even number of pairs order n + 2m + 1
//   four_reals       three negative reals, m >= 1 pairs             order 2m + 4
//   general          n >= 3 negative reals, m >= 1 pairs            order n + 2m + 1
//
// Zero eigenvalues are split off before planning and re-attached in pairs
// around the finished matrix; with an odd count one zero stays in the core.

#include <optional>
#include <string>
#include <vector>

#include "cnniep/errors.hpp"
#include "cnniep/partition.hpp"
#include "cnniep/realization.hpp"
#include "cnniep/spectral.hpp"
#include "cnniep/spectrum.hpp"

namespace cnniep {

/// A construction applies when its margin is at least -kApplicabilityThreshold.
inline constexpr double kApplicabilityThreshold = 1e-12;

/// |lambda| at or below this counts as a zero eigenvalue.
inline constexpr double kZeroTolerance = 1e-12;

const std::vector<std::string>& construction_names();

struct ConditionEntry {
  std::string name;
  bool applicable = false;
  /// Most binding inequality's margin; empty when the spectrum does not
  /// have the shape the construction needs.
  std::optional<double> margin;
  std::string reason;
};

struct ConditionReport {
  std::vector<ConditionEntry> entries;
  std::size_t real_count = 0;  // excluding the Perron root
  std::size_t pair_count = 0;
  std::size_t zero_count = 0;
  /// Zeros re-attached around the core construction (always even).
  std::size_t padded_zeros = 0;
  /// The core is the single value lambda0.
  bool trivially_realizable = false;
  std::string note;

  bool any_applicable() const;
  const ConditionEntry* find(const std::string& name) const;
};

/// The spectrum a construction runs on: zeros split off as described above.
struct PlanningCore {
  Spectrum core;
  std::size_t padded_zeros = 0;
};
PlanningCore planning_core(const Spectrum& s);

ConditionReport condition_report(const Spectrum& s);

struct PlanOptions {
  /// "auto" or one of construction_names().
  std::string preference = "auto";
  VerificationTolerances tolerances{};
  bool verify = true;
};

struct PlanResult {
  Realization realization;
  /// "singleton" for the trivial case, "partition" for partition-based results.
  std::string construction;
  /// Filled when verification ran.
  std::optional<VerificationReport> report;
};

/// No construction's sufficient condition holds (or the requested one does not).
class NoSufficientCondition : public Error {
 public:
  NoSufficientCondition(const std::string& what, ConditionReport report)
      : Error(what), report_(std::move(report)) {}
  const ConditionReport& report() const noexcept { return report_; }

 private:
  ConditionReport report_;
};

/// A construction finished but its output failed verification.
class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(PlanResult result)
      : Error("realization failed verification"), result_(std::move(result)) {}
  const PlanResult& result() const noexcept { return result_; }

 private:
  PlanResult result_;
};

PlanResult plan_and_realize(const Spectrum& s, const PlanOptions& opts = {});

/// Realizes `s` from a caller-given partition: each block's Gamma_j is
/// realized by its supplied matrix or planned on its own, then the blocks
/// are coupled through spec.coupling.
PlanResult realize_with_partition(const Spectrum& s, const PartitionSpec& spec,
                                  const PlanOptions& opts = {});

}  // namespace cnniep
