#include "trioscan/trio.hpp"

#include <string>

#include "trioscan/error.hpp"

namespace trioscan {

namespace {

std::string describe(const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace

Trio Trio::make(const Group& g, Subset a, Subset b, Subset c) {
  g.check_universe(a);
  g.check_universe(b);
  g.check_universe(c);
  if (a.empty() || b.empty() || c.empty()) {
    throw NotATrioError("trio components must be non-empty");
  }
  Subset sum = sumset(g, sumset(g, a, b), c);
  if (sum.is_full()) throw NotATrioError("A+B+C covers the whole group");
  Subset missing = sum.complement();
  Subgroup pi = trioscan::period(g, sum);
  return Trio(g, std::move(a), std::move(b), std::move(c), std::move(sum), std::move(missing),
              std::move(pi));
}

int Trio::deficiency() const {
  const int n = g_.order();
  int primary = a_.size() + b_.size() + c_.size() - n;
  int via_complement = -(n - a_.size()) + b_.size() + c_.size();
  if (primary != via_complement) {
    throw TheoremViolationError("deficiency formulas disagree: " + std::to_string(primary) +
                                " vs " + std::to_string(via_complement));
  }
  return primary;
}

bool Trio::is_g_trio(int g0) const {
  if (g0 < 0 || g0 >= g_.order()) throw ContractError("element out of range");
  return missing_.contains(g0);
}

bool Trio::is_maximal() const {
  const Subset bc = sumset(g_, b_, c_);
  const Subset ca = sumset(g_, c_, a_);
  const Subset ab = sumset(g_, a_, b_);
  const Subset comp_bc = bc.complement();
  const Subset comp_ca = ca.complement();
  const Subset comp_ab = ab.complement();
  bool first = true;
  bool value = false;
  bool disagreement = false;
  missing_.for_each([&](int g0) {
    bool here = a_ == point_minus(g_, g0, comp_bc) && b_ == point_minus(g_, g0, comp_ca) &&
                c_ == point_minus(g_, g0, comp_ab);
    if (first) {
      value = here;
      first = false;
    } else if (here != value) {
      disagreement = true;
    }
  });
  if (disagreement) {
    throw TheoremViolationError("maximality equalities disagree across g0 in missing for (" +
                                describe(a_) + "," + describe(b_) + "," + describe(c_) + ")");
  }
  return value;
}

TrioStats Trio::stats() const {
  TrioStats s;
  s.deficiency = deficiency();
  s.period_size = period_.size;
  s.is_deficient = s.deficiency > 0;
  s.is_aperiodic = s.period_size == 1;
  s.is_maximal = is_maximal();
  return s;
}

Trio complete_to_maximal(const Trio& t, int g0) {
  if (!t.is_g_trio(g0)) {
    throw ContractError("completion anchor " + std::to_string(g0) + " lies in A+B+C");
  }
  const Group& g = t.group();
  Subset a1 = point_minus(g, g0, sumset(g, t.b(), t.c()).complement());
  Subset b1 = point_minus(g, g0, sumset(g, a1, t.c()).complement());
  Subset c1 = point_minus(g, g0, sumset(g, a1, b1).complement());
  Trio r = Trio::make(g, std::move(a1), std::move(b1), std::move(c1));
  if (!t.a().subset_of(r.a()) || !t.b().subset_of(r.b()) || !t.c().subset_of(r.c())) {
    throw TheoremViolationError("completion lost elements at g0=" + std::to_string(g0) +
                                " for (" + describe(t.a()) + "," + describe(t.b()) + "," +
                                describe(t.c()) + ")");
  }
  if (!r.is_g_trio(g0) || !r.is_maximal()) {
    throw TheoremViolationError("completion is not a maximal g0-trio at g0=" +
                                std::to_string(g0));
  }
  if (!r.period().members.subset_of(t.period().members)) {
    throw TheoremViolationError("completion grew the period at g0=" + std::to_string(g0));
  }
  if (r.is_aperiodic()) {
    Subset expected = Subset::of(g.order(), {g0}).complement();
    if (r.sum() != expected) {
      throw TheoremViolationError("aperiodic completion must miss exactly g0=" +
                                  std::to_string(g0));
    }
  }
  return r;
}

Trio quotient_trio(const Trio& t, const Subgroup& h) {
  const Group& g = t.group();
  g.check_universe(h.members);
  if (!is_subgroup(g, h.members)) throw ContractError("quotient kernel is not a subgroup");
  if (!h.members.subset_of(t.period().members)) {
    throw ContractError("kernel is not below the trio period");
  }
  QuotientView view = quotient(g, h);
  Subset qa = project_subset(view, t.a());
  Subset qb = project_subset(view, t.b());
  Subset qc = project_subset(view, t.c());
  Trio r = Trio::make(view.quotient, std::move(qa), std::move(qb), std::move(qc));
  // The image of the sum is the sum of the images.
  if (r.sum() != project_subset(view, t.sum())) {
    throw TheoremViolationError("quotient trio sum differs from the projected sum");
  }
  if (h.size == t.period().size && !r.is_aperiodic()) {
    throw TheoremViolationError("quotient by the full period must be aperiodic");
  }
  return r;
}

Trio khinchin_extend(const Trio& t, int g0) {
  if (!t.is_g_trio(g0)) {
    throw ContractError("extension anchor " + std::to_string(g0) + " lies in A+B+C");
  }
  const Group& g = t.group();
  Subset c1 = point_minus(g, g0, sumset(g, t.a(), t.b()).complement());
  Trio r = Trio::make(g, t.a(), t.b(), std::move(c1));
  if (!t.c().subset_of(r.c())) {
    throw TheoremViolationError("extension lost elements of C at g0=" + std::to_string(g0));
  }
  if (!r.period().members.subset_of(t.period().members)) {
    throw TheoremViolationError("extension grew the period at g0=" + std::to_string(g0));
  }
  // Completed third component: sum misses exactly the coset g0 + H', and C'
  // has period exactly H'.
  const Subgroup& h1 = r.period();
  if (r.sum() != translate(g, h1.members, g0).complement()) {
    throw TheoremViolationError("extended sum is not G minus (g0 + H') at g0=" +
                                std::to_string(g0));
  }
  if (period(g, r.c()).members != h1.members) {
    throw TheoremViolationError("extended component period differs from the sum period at g0=" +
                                std::to_string(g0));
  }
  return r;
}

}  // namespace trioscan
