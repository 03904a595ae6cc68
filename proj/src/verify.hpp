#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "poset.hpp"

namespace charposet {

struct TheoremReport {
  std::string group;
  int order = 0;
  int p = 0;
  int e = 0;
  int i_order = 0;
  int iz_order = 0;
  int irr_i = 0;
  int components = 0;
  bool bounds_hold = false;
  bool connected_iff_i_trivial = false;
  /// Extra checks that run when I ∩ Z(G) is nontrivial.
  bool central_checks_run = false;
  bool central_map_ok = false;
  std::optional<int> abelian_count;
  /// Empty unless the report was aborted.
  std::string error;
  std::optional<ErrorCode> error_code;
  double seconds = 0.0;

  bool ok() const noexcept {
    return error.empty() && bounds_hold && connected_iff_i_trivial &&
           (!central_checks_run || central_map_ok);
  }
};

/// Intersection of all subgroups of order p^{e+1}; normality in G is asserted.
Subgroup compute_i(const GroupPtr& g, int p, int e, const Limits& limits = {});

/// Full report; throws BoundViolation or CriterionViolation if the component
/// bounds or the connectivity criterion fail.
TheoremReport theorem_report(std::shared_ptr<const CharacterRegistry> registry, int p, int e);

/// Same computation, but failures are recorded in the report instead of thrown.
TheoremReport try_theorem_report(std::shared_ptr<const CharacterRegistry> registry, int p, int e);

struct SweepOptions {
  int max_order = 0;           ///< 0 = no bound
  std::vector<int> primes;     ///< empty = any prime
  std::optional<int> e;        ///< unset = every valid e
  Limits limits;
};

/// One report per (group, e); ordered by (|G|, name, e). Errors are recorded
/// per group and do not stop the sweep.
std::vector<TheoremReport> sweep(const std::vector<std::string>& sources, const SweepOptions& opts);

std::vector<TheoremReport> verify_group(const GroupPtr& g, const SweepOptions& opts);

}  // namespace charposet
