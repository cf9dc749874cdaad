#pragma once

#include "trioscan/group.hpp"
#include "trioscan/setops.hpp"
#include "trioscan/subset.hpp"

namespace trioscan {

struct TrioStats {
  int deficiency = 0;
  int period_size = 0;
  bool is_deficient = false;
  bool is_aperiodic = false;
  bool is_maximal = false;
};

/// Triple (A,B,C) of non-empty subsets with A+B+C != G.  Immutable; the sum,
/// its complement ("missing"), and the period pi(A+B+C) are cached at
/// construction.  missing is non-empty and is a union of period-cosets.
class Trio {
 public:
  /// Throws NotATrioError when a component is empty or the sum covers G.
  static Trio make(const Group& g, Subset a, Subset b, Subset c);

  const Group& group() const { return g_; }
  const Subset& a() const { return a_; }
  const Subset& b() const { return b_; }
  const Subset& c() const { return c_; }
  const Subset& sum() const { return sum_; }
  const Subset& missing() const { return missing_; }
  const Subgroup& period() const { return period_; }

  /// |A|+|B|+|C|-|G|; asserted equal to -|comp(A)|+|B|+|C|.
  int deficiency() const;
  bool is_deficient() const { return deficiency() > 0; }
  bool is_aperiodic() const { return period_.size == 1; }

  /// True iff g0 is outside A+B+C.
  bool is_g_trio(int g0) const;

  /// Maximality: A = g0 - comp(B+C), B = g0 - comp(C+A), C = g0 - comp(A+B).
  /// The equalities are g0-independent across missing; this checks every
  /// g0 in missing and throws TheoremViolationError if they disagree.
  bool is_maximal() const;

  TrioStats stats() const;

  bool operator==(const Trio& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

 private:
  Trio(Group g, Subset a, Subset b, Subset c, Subset sum, Subset missing, Subgroup period)
      : g_(std::move(g)),
        a_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)),
        sum_(std::move(sum)),
        missing_(std::move(missing)),
        period_(std::move(period)) {}

  Group g_;
  Subset a_, b_, c_;
  Subset sum_, missing_;
  Subgroup period_;
};

/// Three-step maximal completion at g0 in t.missing:
///   A' := g0 - comp(B+C), then B' := g0 - comp(A'+C), then C' := g0 - comp(A'+B').
/// Postconditions asserted (throwing TheoremViolationError on breach):
/// componentwise containment, the result is a maximal g0-trio, the result
/// period is a subgroup of the input period, and an aperiodic result has
/// sum = G minus {g0}.  Maximal trios are fixed points.
Trio complete_to_maximal(const Trio& t, int g0);

/// Projects the trio through G/h, h a subgroup of the trio period.  When
/// h equals the period the image trio is aperiodic (asserted).
Trio quotient_trio(const Trio& t, const Subgroup& h);

/// Extends the third component to C' := g0 - comp(A+B).  Asserts C is
/// contained in C', the result period is a subgroup of the input period, and
/// the completed-component consequences: result.sum = G minus (g0 + H') and
/// pi(C') = H', where H' is the result period.
Trio khinchin_extend(const Trio& t, int g0);

}  // namespace trioscan
