#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trioscan/group.hpp"
#include "trioscan/setops.hpp"
#include "trioscan/subset.hpp"
#include "trioscan/transform.hpp"
#include "trioscan/trio.hpp"

namespace trioscan {

/// Closed enumeration of checkable properties.
enum class Property {
  kneser,
  trio_bound,
  maxdef,
  iwml,
  box,
  tau_major,
  tau_stab,
  tau_stopcond,
  tau_sumset,
  rep_domination,
  complement_identity,
  deficient_characterization,
};

const char* property_name(Property p);
std::optional<Property> parse_property(const std::string& name);
std::vector<Property> all_properties();

struct Verdict {
  Property property = Property::kneser;
  std::string inputs;  // rendered set literals; filled for direct checks and witnesses
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
  bool tight = false;    // lhs = rhs where the property is an inequality
  bool vacuous = false;  // precondition unmet; counts as a pass
  std::string reason = "-";
};

/// |A+B| >= |A| + |B| - |pi(A+B)|.
Verdict check_kneser(const Group& g, const Subset& a, const Subset& b);

/// |A|+|B|+|C| <= |G| + |pi(A+B+C)| when A+B+C != G; vacuous otherwise.
/// The deficiency form (delta <= |pi|) is asserted to agree.
Verdict check_trio_bound(const Group& g, const Subset& a, const Subset& b, const Subset& c);

/// Maximal deficient trios satisfy delta = |pi(A+B+C)| exactly; vacuous with
/// a reason when t is not maximal or not deficient.
Verdict check_maxdef(const Trio& t);

/// For an aperiodic maximal deficient trio and (A*,B*,C*) = tau(A,B,C) with
/// H = pi(A*+B*+C*):  rho = sum of |(S*+H) minus S*| >= |H| - 1.  Vacuous
/// when the precondition fails or when C* (the triple intersection) is empty.
Verdict check_iwml(const Trio& t);

/// Slice bound: for every coset triple x+y+z = g0 (mod h), an occupied slice
/// of one component bounds the other two slice sizes by |h| (three variants).
Verdict check_box_slices(const Trio& t, const Subgroup& h, int g0);

/// Kneser's bound obtained through the trio bound with C := -comp(A+B); each
/// intermediate identity is asserted, and the final pass is asserted equal to
/// check_kneser(g, a, b).pass.
Verdict derive_kneser_from_trio(const Group& g, const Subset& a, const Subset& b);

/// The trio bound obtained through Kneser's bound: verifies the chain
/// delta(A,B,C) <= |B|+|C|-|B+C| <= |pi(B+C)| <= |pi(A+B+C)| step by step.
Verdict derive_trio_from_kneser(const Trio& t, int g0);

/// A trio is deficient iff some completion is deficient with removal count
/// strictly below the completed period size; tested over every g0 in missing.
Verdict check_deficient_characterization(const Trio& t);

/// Claim: S - comp(S) = comp(S) - S = comp(pi(S)), with matching periods.
Verdict check_complement_identity(const Group& g, const Subset& s);

/// Every maximal trio of g, each exactly once, sorted by component masks.
/// Generator: A := g0 - comp(B+C) over all non-empty (B,C) with B+C != G and
/// all g0, completed and deduplicated.
std::vector<Trio> enumerate_maximal_trios(const Group& g, int max_order = 12);

struct ScanOptions {
  int workers = 1;
  std::uint64_t budget = 100'000'000;  // exhaustive tuple budget
  bool canonicalize = false;           // pin min element of first two sets to 0
  int arity = 3;                       // system size for the tau properties
};

struct ScanReport {
  std::string group_literal;
  Property property = Property::kneser;
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t cases_checked = 0;
  std::uint64_t tight_count = 0;
  std::uint64_t vacuous_count = 0;
  /// Failing non-vacuous verdicts with their enumeration index, ascending.
  std::vector<std::pair<std::uint64_t, Verdict>> violations;
  double elapsed_ms = 0.0;
};

/// Enumerates every non-empty subset tuple for the property (pairs for
/// kneser, triples for the trio properties, single sets for the complement
/// identity, arity-sized systems for the tau properties; box enumerates
/// maximal trios against all subgroups and anchors).  canonicalize pins the
/// minimum element of each of the first two sets to 0.  The estimated case
/// count is checked against the budget first.
ScanReport exhaustive_scan(const Group& g, Property p, const ScanOptions& opt = {});

/// Samples tuples with each element included independently with probability
/// 1/2, resampling empty sets.  Each case is determined by (seed, index)
/// alone, so reports are identical for any worker count.
ScanReport random_scan(const Group& g, Property p, std::uint64_t samples, std::uint64_t seed,
                       const ScanOptions& opt = {});

/// Single-tuple evaluation used by scans and the direct CLI path.  The tuple
/// arity must match the property.  probe (element index, or -1 for "all
/// elements") applies to rep-domination only.  with_inputs controls whether
/// the literals are rendered into the verdict.
Verdict evaluate_property(const Group& g, Property p, std::span<const Subset> sets,
                          bool with_inputs, int probe = -1);

/// Tuple size for a property; tau properties take their size from arity.
int property_arity(Property p, int arity);

}  // namespace trioscan
