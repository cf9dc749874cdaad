#pragma once

#include <vector>

#include "trioscan/group.hpp"
#include "trioscan/setops.hpp"
#include "trioscan/subset.hpp"

namespace trioscan {

inline constexpr int kMaxSystemSets = 8;

/// Ordered system (A_1, ..., A_n) of subsets of one group, 1 <= n <= 8.
/// Sets may be empty unless an operation says otherwise.
class SetSystem {
 public:
  SetSystem(Group g, std::vector<Subset> sets);

  const Group& group() const { return g_; }
  int count() const { return static_cast<int>(sets_.size()); }
  const Subset& set(int i) const { return sets_[static_cast<std::size_t>(i)]; }
  const std::vector<Subset>& sets() const { return sets_; }

  std::vector<int> sizes() const;

  bool operator==(const SetSystem& o) const { return sets_ == o.sets_; }

 private:
  Group g_;
  std::vector<Subset> sets_;
};

struct TransformOutcome {
  SetSystem output;              // tau_1 down to tau_n, nested descending
  std::vector<int> multiplicity; // per element: in how many input sets it lies
};

/// n-transform: tau_i = { x : x lies in at least i input sets }.  The
/// outcome invariants are checked on every call and a breach throws
/// TheoremViolationError: nesting, tau_1 = union, tau_n = intersection,
/// per-element multiplicity preservation, prefix-sum majorization of the
/// size vector with equal totals.
TransformOutcome tau(const SetSystem& sys);

/// True iff A_1 contains A_2 contains ...; asserted equivalent to the system
/// being a fixed point of tau.
bool is_nested(const SetSystem& sys);

/// Certificate produced by the stop-condition dichotomy.
struct StopCertificate {
  enum class Kind { improving_translation, nested_cosets };
  Kind kind = Kind::nested_cosets;
  /// improving_translation: the chosen a_k (one per set, a_k in A_k).
  std::vector<int> translations;
  /// improving_translation: tau(A_1 - a_1, ..., A_n - a_n) output sets,
  /// whose size vector strictly majorizes the input size vector.
  std::vector<Subset> transformed;
};

/// Searches translations (a_1, ..., a_n), a_k in A_k, for one whose
/// transform strictly majorizes the input size vector (prefix sums >=, total
/// equal, at least one strict).  The full product is scanned in lexicographic
/// element order and the first hit wins; pinning a_1 would lose witnesses,
/// since shifting a witness into a pinned slice can move other components out
/// of their sets.  If no translation improves, validates and returns the
/// nested-coset certificate (A_k - A_k inside pi(A_{k-1}) for all k in
/// [2, n]); if that fails too, throws TheoremViolationError carrying the
/// witness system.
StopCertificate find_improving_translation(const SetSystem& sys);

/// Inclusion of the transformed n-fold sumset in the input n-fold sumset.
/// All sets must be non-empty; an empty tau_n makes the left side empty and
/// the inclusion vacuously true (still reported as true).
bool sumset_inclusion_check(const SetSystem& sys);

/// Number of tuples (y_1, ..., y_n), y_i in A_i, with sum x.
long long representation_count(const SetSystem& sys, int x);

/// Companion check: representation counts never increase under tau.
bool rep_domination(const SetSystem& sys, int x);

}  // namespace trioscan
