#pragma once

#include <span>

#include "trioscan/group.hpp"
#include "trioscan/subset.hpp"

namespace trioscan {

/// A + B = { a + b : a in A, b in B }.  Folds translated copies of the larger
/// operand over the smaller one; empty operands give the empty set.
Subset sumset(const Group& g, const Subset& a, const Subset& b);

/// n-fold sumset A1 + ... + Ak; requires at least one set.
Subset sumset_all(const Group& g, std::span<const Subset> sets);

/// S + x.
Subset translate(const Group& g, const Subset& s, int x);

/// -S = { -s : s in S }.
Subset negate_set(const Group& g, const Subset& s);

/// x - S = { x - s : s in S }.
Subset point_minus(const Group& g, int x, const Subset& s);

/// Period (stabilizer) pi(S) = { h : S + h = S }, always a subgroup.
/// Computed as the intersection of S - s over s in S, using whichever of S
/// and its complement is smaller (their periods coincide).  By the empty
/// intersection convention pi(empty) = G, and pi(G) = G.
Subgroup period(const Group& g, const Subset& s);

/// Subgroup generated by the elements of S; {0} for the empty set.
Subgroup generated_subgroup(const Group& g, const Subset& s);

/// Outcome of the identity S - comp(S) = comp(S) - S = comp(pi(S)) together
/// with pi(S - comp(S)) = pi(S).  Degenerate inputs (S empty or S = G) give a
/// vacuous-pass record.
struct ComplementIdentityRecord {
  bool vacuous = false;
  Subset diff;       // S - comp(S)
  Subset diff_rev;   // comp(S) - S
  Subset expected;   // comp(pi(S))
  bool sets_match = false;
  bool period_match = false;
  bool pass = false;
};

ComplementIdentityRecord complement_identity_check(const Group& g, const Subset& s);

}  // namespace trioscan
