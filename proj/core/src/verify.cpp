#include "trioscan/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "trioscan/error.hpp"
#include "trioscan/literals.hpp"

namespace trioscan {

namespace {

struct PropertyRow {
  Property p;
  const char* name;
  int arity;  // -1: system-sized, taken from ScanOptions::arity
};

constexpr PropertyRow kProperties[] = {
    {Property::kneser, "kneser", 2},
    {Property::trio_bound, "trio-bound", 3},
    {Property::maxdef, "maxdef", 3},
    {Property::iwml, "iwml", 3},
    {Property::box, "box", 3},
    {Property::tau_major, "tau-major", -1},
    {Property::tau_stab, "tau-stab", -1},
    {Property::tau_stopcond, "tau-stopcond", -1},
    {Property::tau_sumset, "tau-sumset", -1},
    {Property::rep_domination, "rep-domination", -1},
    {Property::complement_identity, "complement-identity", 1},
    {Property::deficient_characterization, "deficient-characterization", 3},
};

const PropertyRow& row_of(Property p) {
  for (const PropertyRow& r : kProperties) {
    if (r.p == p) return r;
  }
  throw ContractError("unknown property enumerator");
}

bool is_system_property(Property p) { return row_of(p).arity < 0; }

Verdict make_vacuous(Property p, const char* reason, long long lhs = 0, long long rhs = 0) {
  Verdict v;
  v.property = p;
  v.lhs = lhs;
  v.rhs = rhs;
  v.pass = true;
  v.vacuous = true;
  v.reason = reason;
  return v;
}

std::string describe_pair(const Subset& a, const Subset& b) {
  const Subset sets[] = {a, b};
  return render_sets(sets);
}

std::string describe_triple(const Subset& a, const Subset& b, const Subset& c) {
  const Subset sets[] = {a, b, c};
  return render_sets(sets);
}

/// Shared bound logic; ab, when given, must equal sumset(g, a, b).
Verdict trio_bound_impl(const Group& g, const Subset& a, const Subset& b, const Subset& c,
                        const Subset* ab) {
  const long long n = g.order();
  const long long total =
      static_cast<long long>(a.size()) + b.size() + c.size();
  Subset sum = ab ? sumset(g, *ab, c) : sumset(g, sumset(g, a, b), c);
  if (sum.is_full()) return make_vacuous(Property::trio_bound, "not-a-trio", total, 2 * n);
  Subgroup pi = period(g, sum);
  Verdict v;
  v.property = Property::trio_bound;
  v.lhs = total;
  v.rhs = n + pi.size;
  v.pass = v.lhs <= v.rhs;
  v.tight = v.lhs == v.rhs;
  if ((total - n <= pi.size) != v.pass) {
    throw TheoremViolationError("trio bound and deficiency form disagree on " +
                                describe_triple(a, b, c));
  }
  return v;
}

std::optional<Trio> try_trio(const Group& g, const Subset& a, const Subset& b, const Subset& c) {
  // callers guarantee non-empty components, so failure means the sum covers G
  try {
    return Trio::make(g, a, b, c);
  } catch (const NotATrioError&) {
    return std::nullopt;
  }
}

/// One verdict over all (subgroup, anchor) choices for a sampled trio: lhs is
/// the worst slice margin max(size sum - |h|), non-positive exactly when
/// every individual box check passes.
Verdict eval_box_folded(const Trio& t) {
  const Group& g = t.group();
  std::vector<Subgroup> subs = list_subgroups(g);
  long long worst = 0;
  bool first = true;
  t.missing().for_each([&](int g0) {
    for (const Subgroup& h : subs) {
      Verdict one = check_box_slices(t, h, g0);
      long long margin = one.lhs - one.rhs;
      if (first || margin > worst) {
        worst = margin;
        first = false;
      }
    }
  });
  Verdict v;
  v.property = Property::box;
  v.lhs = worst;
  v.rhs = 0;
  v.pass = worst <= 0;
  v.tight = worst == 0;
  return v;
}

Verdict eval_tau_major(const SetSystem& sys) {
  TransformOutcome out = tau(sys);  // majorization invariants checked inside
  long long in_prefix = 0;
  long long out_prefix = 0;
  bool all_equal = true;
  for (int i = 0; i < sys.count(); ++i) {
    in_prefix += sys.set(i).size();
    out_prefix += out.output.set(i).size();
    if (in_prefix != out_prefix) all_equal = false;
  }
  Verdict v;
  v.property = Property::tau_major;
  v.lhs = out_prefix;
  v.rhs = in_prefix;
  // equality diagnosis: all prefix sums equal forces a nested input
  v.pass = !all_equal || is_nested(sys);
  v.tight = all_equal;
  return v;
}

Verdict eval_tau_stab(const SetSystem& sys) {
  bool nested = is_nested(sys);  // asserts agreement with the fixed-point test
  bool fixed = tau(sys).output == sys;
  Verdict v;
  v.property = Property::tau_stab;
  v.lhs = nested ? 1 : 0;
  v.rhs = fixed ? 1 : 0;
  v.pass = nested == fixed;
  return v;
}

Verdict eval_tau_stopcond(const SetSystem& sys) {
  StopCertificate cert = find_improving_translation(sys);
  bool improving = cert.kind == StopCertificate::Kind::improving_translation;
  Verdict v;
  v.property = Property::tau_stopcond;
  v.lhs = improving ? 1 : 0;
  v.rhs = v.lhs;
  v.pass = true;  // a dichotomy failure would have thrown
  v.reason = improving ? "improving-translation" : "nested-cosets";
  return v;
}

Verdict eval_tau_sumset(const SetSystem& sys) {
  TransformOutcome out = tau(sys);
  Subset transformed = sumset_all(sys.group(), out.output.sets());
  Subset original = sumset_all(sys.group(), sys.sets());
  Verdict v;
  v.property = Property::tau_sumset;
  v.lhs = transformed.size();
  v.rhs = original.size();
  v.pass = transformed.subset_of(original);
  v.tight = v.pass && transformed == original;
  return v;
}

Verdict eval_rep_domination(const SetSystem& sys, int probe) {
  const Group& g = sys.group();
  TransformOutcome out = tau(sys);
  Verdict v;
  v.property = Property::rep_domination;
  if (probe >= 0) {
    if (probe >= g.order()) throw ContractError("probe element out of range");
    v.lhs = representation_count(out.output, probe);
    v.rhs = representation_count(sys, probe);
  } else {
    // report the element with the worst domination margin
    bool first = true;
    for (int x = 0; x < g.order(); ++x) {
      long long lt = representation_count(out.output, x);
      long long ls = representation_count(sys, x);
      if (first || lt - ls > v.lhs - v.rhs) {
        v.lhs = lt;
        v.rhs = ls;
        first = false;
      }
    }
  }
  v.pass = v.lhs <= v.rhs;
  v.tight = v.lhs == v.rhs;
  return v;
}

Verdict eval_complement_identity(const Group& g, const Subset& s) {
  ComplementIdentityRecord rec = complement_identity_check(g, s);
  if (rec.vacuous) return make_vacuous(Property::complement_identity, "not-proper");
  Verdict v;
  v.property = Property::complement_identity;
  v.lhs = rec.diff.size();
  v.rhs = rec.expected.size();
  v.pass = rec.pass;
  v.tight = rec.pass;
  return v;
}

void require_nonempty(Property p, std::span<const Subset> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) {
      throw ContractError(std::string(property_name(p)) + ": set " + std::to_string(i + 1) +
                          " is empty; non-empty sets required");
    }
  }
}

// ---------------------------------------------------------------------------
// Scan plumbing

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Per-case stream: every sampled tuple depends on (seed, index) alone, so a
/// scan is reproducible for any worker partition.
std::uint64_t case_state(std::uint64_t seed, std::uint64_t index) {
  return seed ^ (0x9e3779b97f4a7c15ull * (index + 0x632be59bd9b4e019ull));
}

Subset draw_nonempty(const Group& g, std::uint64_t& state) {
  const int n = g.order();
  const int words = (n + 63) / 64;
  for (;;) {
    Subset::Words w;
    w.resize(static_cast<std::size_t>(words));
    for (int i = 0; i < words; ++i) w[static_cast<std::size_t>(i)] = splitmix64(state);
    Subset s = Subset::from_words(n, std::move(w));
    if (!s.empty()) return s;
  }
}

struct WorkerTally {
  std::uint64_t cases = 0;
  std::uint64_t tight = 0;
  std::uint64_t vacuous = 0;
  std::vector<std::pair<std::uint64_t, Verdict>> violations;
};

template <typename InputsFn>
void consume(WorkerTally& tally, std::uint64_t index, Verdict&& v, InputsFn&& inputs) {
  ++tally.cases;
  if (v.vacuous) {
    ++tally.vacuous;
    return;
  }
  if (!v.pass) {
    v.inputs = inputs();
    tally.violations.emplace_back(index, std::move(v));
    return;
  }
  if (v.tight) ++tally.tight;
}

/// Runs body(lo, hi, tally) over a contiguous partition of [0, total) and
/// merges tallies in index order, so the report is worker-count independent.
template <typename Body>
void run_partitioned(std::uint64_t total, int workers, ScanReport& rep, Body&& body) {
  if (total == 0) return;
  const int w = workers;
  const std::uint64_t chunk = (total + static_cast<std::uint64_t>(w) - 1) / static_cast<std::uint64_t>(w);
  std::vector<WorkerTally> tallies(static_cast<std::size_t>(w));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
  auto run_range = [&](int wi) {
    const std::uint64_t lo = chunk * static_cast<std::uint64_t>(wi);
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) return;
    try {
      body(lo, hi, tallies[static_cast<std::size_t>(wi)]);
    } catch (...) {
      errors[static_cast<std::size_t>(wi)] = std::current_exception();
    }
  };
  if (w == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    for (int wi = 0; wi < w; ++wi) threads.emplace_back(run_range, wi);
    for (std::thread& t : threads) t.join();
  }
  for (int wi = 0; wi < w; ++wi) {
    if (errors[static_cast<std::size_t>(wi)]) {
      std::rethrow_exception(errors[static_cast<std::size_t>(wi)]);
    }
  }
  for (WorkerTally& t : tallies) {
    rep.cases_checked += t.cases;
    rep.tight_count += t.tight;
    rep.vacuous_count += t.vacuous;
    for (auto& pv : t.violations) rep.violations.push_back(std::move(pv));
  }
}

struct SlotPlan {
  std::uint64_t count = 0;
  bool canonical = false;  // mask 2i+1 (contains 0) instead of i+1
};

Subset slot_subset(int n, const SlotPlan& slot, std::uint64_t i) {
  return Subset::from_word(n, slot.canonical ? 2 * i + 1 : i + 1);
}

/// Saturating multiply; sets overflowed when the product leaves uint64 range.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, bool& overflowed) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    overflowed = true;
    return ~std::uint64_t{0};
  }
  return out;
}

void check_budget(const Group& g, Property p, std::uint64_t estimated, bool overflowed,
                  std::uint64_t budget) {
  if (overflowed || estimated > budget) {
    std::string count = overflowed ? ("more than " + std::to_string(~std::uint64_t{0}))
                                   : std::to_string(estimated);
    throw CapabilityError(std::string("exhaustive ") + property_name(p) + " scan over " +
                          g.literal() + " needs " + count + " cases, over the budget of " +
                          std::to_string(budget));
  }
}

int scan_arity(Property p, const ScanOptions& opt) {
  if (!is_system_property(p)) return row_of(p).arity;
  if (opt.arity < 2 || opt.arity > kMaxSystemSets) {
    throw ContractError("system arity must be between 2 and " + std::to_string(kMaxSystemSets) +
                        ", got " + std::to_string(opt.arity));
  }
  return opt.arity;
}

Verdict guarded_eval(const Group& g, Property p, std::span<const Subset> sets,
                     const Subset* memo_ab) {
  try {
    if (p == Property::trio_bound && memo_ab != nullptr) {
      return trio_bound_impl(g, sets[0], sets[1], sets[2], memo_ab);
    }
    return evaluate_property(g, p, sets, false);
  } catch (const TheoremViolationError&) {
    // surfaced as a failing verdict so scans report it instead of aborting
    Verdict v;
    v.property = p;
    v.pass = false;
    v.reason = "theorem-violation";
    return v;
  }
}

void scan_tuples(const Group& g, Property p, int arity, bool canonicalize, ScanReport& rep,
                 const ScanOptions& opt) {
  const int n = g.order();
  std::vector<SlotPlan> slots(static_cast<std::size_t>(arity));
  bool overflowed = false;
  std::uint64_t total = 1;
  for (int k = 0; k < arity; ++k) {
    SlotPlan& slot = slots[static_cast<std::size_t>(k)];
    slot.canonical = canonicalize && k < 2;
    if (n >= 65) {
      overflowed = true;
      slot.count = ~std::uint64_t{0};
    } else if (slot.canonical) {
      slot.count = std::uint64_t{1} << (n - 1);
    } else if (n == 64) {
      slot.count = ~std::uint64_t{0};
    } else {
      slot.count = (std::uint64_t{1} << n) - 1;
    }
    total = sat_mul(total, slot.count, overflowed);
  }
  check_budget(g, p, total, overflowed, opt.budget);

  auto body = [&](std::uint64_t lo, std::uint64_t hi, WorkerTally& tally) {
    const int ar = static_cast<int>(slots.size());
    std::vector<std::uint64_t> pos(static_cast<std::size_t>(ar), 0);
    std::uint64_t rest = lo;
    for (int k = ar - 1; k >= 0; --k) {
      pos[static_cast<std::size_t>(k)] = rest % slots[static_cast<std::size_t>(k)].count;
      rest /= slots[static_cast<std::size_t>(k)].count;
    }
    std::vector<Subset> sets(static_cast<std::size_t>(ar));
    for (int k = 0; k < ar; ++k) {
      sets[static_cast<std::size_t>(k)] =
          slot_subset(n, slots[static_cast<std::size_t>(k)], pos[static_cast<std::size_t>(k)]);
    }
    Subset memo_ab;
    bool memo_ok = false;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (idx != lo) {
        // odometer step, last slot fastest
        for (int k = ar - 1; k >= 0; --k) {
          std::size_t ki = static_cast<std::size_t>(k);
          if (++pos[ki] < slots[ki].count) {
            sets[ki] = slot_subset(n, slots[ki], pos[ki]);
            break;
          }
          pos[ki] = 0;
          sets[ki] = slot_subset(n, slots[ki], 0);
        }
        // a wrap of the last slot is exactly when some earlier slot moved
        if (ar >= 2 && pos[static_cast<std::size_t>(ar - 1)] == 0) memo_ok = false;
      }
      Verdict v;
      if (p == Property::trio_bound) {
        if (!memo_ok) {
          memo_ab = sumset(g, sets[0], sets[1]);
          memo_ok = true;
        }
        v = guarded_eval(g, p, sets, &memo_ab);
      } else {
        v = guarded_eval(g, p, sets, nullptr);
      }
      consume(tally, idx, std::move(v), [&] { return render_sets(sets); });
    }
  };
  run_partitioned(total, opt.workers, rep, body);
}

void scan_box_exhaustive(const Group& g, ScanReport& rep, const ScanOptions& opt) {
  std::vector<Trio> trios = enumerate_maximal_trios(g);
  std::vector<Subgroup> subs = list_subgroups(g);
  std::vector<std::vector<int>> anchors;
  std::vector<std::uint64_t> offset{0};
  anchors.reserve(trios.size());
  for (const Trio& t : trios) {
    anchors.push_back(t.missing().elements());
    offset.push_back(offset.back() + subs.size() * anchors.back().size());
  }
  const std::uint64_t total = offset.back();
  check_budget(g, Property::box, total, false, opt.budget);

  auto body = [&](std::uint64_t lo, std::uint64_t hi, WorkerTally& tally) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const std::size_t ti =
          static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), idx) -
                                   offset.begin()) -
          1;
      const std::uint64_t rest = idx - offset[ti];
      const std::size_t anchor_count = anchors[ti].size();
      const Subgroup& h = subs[static_cast<std::size_t>(rest / anchor_count)];
      const int g0 = anchors[ti][static_cast<std::size_t>(rest % anchor_count)];
      const Trio& t = trios[ti];
      Verdict v;
      try {
        v = check_box_slices(t, h, g0);
      } catch (const TheoremViolationError&) {
        v.property = Property::box;
        v.pass = false;
        v.reason = "theorem-violation";
      }
      consume(tally, idx, std::move(v), [&] {
        return describe_triple(t.a(), t.b(), t.c()) + "|h=" + render_set(h.members) +
               "|g0=" + std::to_string(g0);
      });
    }
  };
  run_partitioned(total, opt.workers, rep, body);
}

void validate_workers(const ScanOptions& opt) {
  if (opt.workers < 1) throw ContractError("workers must be >= 1");
}

}  // namespace

const char* property_name(Property p) { return row_of(p).name; }

std::optional<Property> parse_property(const std::string& name) {
  for (const PropertyRow& r : kProperties) {
    if (name == r.name) return r.p;
  }
  return std::nullopt;
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (const PropertyRow& r : kProperties) out.push_back(r.p);
  return out;
}

int property_arity(Property p, int arity) {
  const int fixed = row_of(p).arity;
  return fixed >= 0 ? fixed : arity;
}

Verdict check_kneser(const Group& g, const Subset& a, const Subset& b) {
  g.check_universe(a);
  g.check_universe(b);
  if (a.empty() || b.empty()) throw ContractError("check_kneser: empty input set");
  Subset s = sumset(g, a, b);
  Subgroup pi = period(g, s);
  Verdict v;
  v.property = Property::kneser;
  v.lhs = s.size();
  v.rhs = static_cast<long long>(a.size()) + b.size() - pi.size;
  v.pass = v.lhs >= v.rhs;
  v.tight = v.lhs == v.rhs;
  return v;
}

Verdict check_trio_bound(const Group& g, const Subset& a, const Subset& b, const Subset& c) {
  g.check_universe(a);
  g.check_universe(b);
  g.check_universe(c);
  if (a.empty() || b.empty() || c.empty()) {
    throw ContractError("check_trio_bound: empty input set");
  }
  return trio_bound_impl(g, a, b, c, nullptr);
}

Verdict check_maxdef(const Trio& t) {
  if (!t.is_maximal()) return make_vacuous(Property::maxdef, "not-maximal");
  if (!t.is_deficient()) return make_vacuous(Property::maxdef, "not-deficient");
  Verdict v;
  v.property = Property::maxdef;
  v.lhs = t.deficiency();
  v.rhs = t.period().size;
  v.pass = v.lhs == v.rhs;
  v.tight = v.pass;
  return v;
}

Verdict check_iwml(const Trio& t) {
  if (!t.is_aperiodic()) return make_vacuous(Property::iwml, "not-aperiodic");
  if (!t.is_maximal()) return make_vacuous(Property::iwml, "not-maximal");
  if (!t.is_deficient()) return make_vacuous(Property::iwml, "not-deficient");
  const Group& g = t.group();
  SetSystem sys(g, {t.a(), t.b(), t.c()});
  TransformOutcome out = tau(sys);
  if (out.output.set(2).empty()) return make_vacuous(Property::iwml, "empty-intersection");
  Subset star_sum = sumset_all(g, out.output.sets());
  Subgroup h = period(g, star_sum);
  long long rho = 0;
  for (int i = 0; i < 3; ++i) {
    const Subset& s = out.output.set(i);
    rho += sumset(g, s, h.members).size() - s.size();  // |(S*+H) \ S*|, S* inside S*+H
  }
  Verdict v;
  v.property = Property::iwml;
  v.lhs = rho;
  v.rhs = h.size - 1;
  v.pass = v.lhs >= v.rhs;
  v.tight = v.lhs == v.rhs;
  return v;
}

Verdict check_box_slices(const Trio& t, const Subgroup& h, int g0) {
  const Group& g = t.group();
  g.check_universe(h.members);
  if (!is_subgroup(g, h.members)) {
    throw ContractError("check_box_slices: h is not a subgroup");
  }
  if (g0 < 0 || g0 >= g.order() || !t.missing().contains(g0)) {
    throw ContractError("check_box_slices: g0 = " + std::to_string(g0) +
                        " is not outside A+B+C");
  }
  const int n = g.order();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<int> rep;
  for (int e = 0; e < n; ++e) {
    if (cls[static_cast<std::size_t>(e)] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(e);
    h.members.for_each([&](int d) { cls[static_cast<std::size_t>(g.add(e, d))] = id; });
  }
  const int q = static_cast<int>(rep.size());
  std::vector<int> sa(static_cast<std::size_t>(q), 0);
  std::vector<int> sb(static_cast<std::size_t>(q), 0);
  std::vector<int> sc(static_cast<std::size_t>(q), 0);
  t.a().for_each([&](int e) { ++sa[static_cast<std::size_t>(cls[static_cast<std::size_t>(e)])]; });
  t.b().for_each([&](int e) { ++sb[static_cast<std::size_t>(cls[static_cast<std::size_t>(e)])]; });
  t.c().for_each([&](int e) { ++sc[static_cast<std::size_t>(cls[static_cast<std::size_t>(e)])]; });
  // every coset triple x+y+z = g0 (mod h) arises as (x, y, cls(g0-x-y))
  long long worst = -1;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      const int z = cls[static_cast<std::size_t>(g.sub(g.sub(g0, rep[static_cast<std::size_t>(x)]),
                                                       rep[static_cast<std::size_t>(y)]))];
      const long long ax = sa[static_cast<std::size_t>(x)];
      const long long by = sb[static_cast<std::size_t>(y)];
      const long long cz = sc[static_cast<std::size_t>(z)];
      if (ax > 0) worst = std::max(worst, by + cz);
      if (by > 0) worst = std::max(worst, ax + cz);
      if (cz > 0) worst = std::max(worst, ax + by);
    }
  }
  Verdict v;
  v.property = Property::box;
  v.lhs = worst;
  v.rhs = h.size;
  v.pass = v.lhs <= v.rhs;
  v.tight = v.lhs == v.rhs;
  return v;
}

Verdict derive_kneser_from_trio(const Group& g, const Subset& a, const Subset& b) {
  g.check_universe(a);
  g.check_universe(b);
  if (a.empty() || b.empty()) throw ContractError("derive_kneser_from_trio: empty input set");
  Verdict direct = check_kneser(g, a, b);
  Subset s = sumset(g, a, b);
  if (s.is_full()) {
    // nothing to adjoin; the bound holds outright since rhs <= |G|
    if (!direct.pass) {
      throw TheoremViolationError("full sumset fails the Kneser bound on " + describe_pair(a, b));
    }
    return direct;
  }
  Subset c = negate_set(g, s.complement());
  Trio t = Trio::make(g, a, b, c);
  if (!t.is_g_trio(0)) {
    throw TheoremViolationError("adjoined complement is not a 0-trio on " + describe_pair(a, b));
  }
  const long long delta = t.deficiency();
  const long long via_sumset = static_cast<long long>(a.size()) + b.size() - s.size();
  if (delta != via_sumset) {
    throw TheoremViolationError("deficiency " + std::to_string(delta) +
                                " differs from |A|+|B|-|A+B| = " + std::to_string(via_sumset) +
                                " on " + describe_pair(a, b));
  }
  Subgroup pi_s = period(g, s);
  if (t.period().members != pi_s.members) {
    throw TheoremViolationError("pi(A+B+C) differs from pi(A+B) on " + describe_pair(a, b));
  }
  Verdict via_trio = check_trio_bound(g, a, b, c);
  Verdict v;
  v.property = Property::kneser;
  v.lhs = direct.lhs;
  v.rhs = direct.rhs;
  v.pass = via_trio.pass;
  v.tight = via_trio.tight;
  if (v.pass != direct.pass || v.tight != direct.tight) {
    throw TheoremViolationError("trio-derived Kneser verdict disagrees with the direct check on " +
                                describe_pair(a, b));
  }
  return v;
}

Verdict derive_trio_from_kneser(const Trio& t, int g0) {
  const Group& g = t.group();
  if (g0 < 0 || g0 >= g.order() || !t.missing().contains(g0)) {
    throw ContractError("derive_trio_from_kneser: g0 = " + std::to_string(g0) +
                        " is not outside A+B+C");
  }
  const long long n = g.order();
  Subset bc = sumset(g, t.b(), t.c());
  const long long delta = t.deficiency();
  const long long mid = static_cast<long long>(t.b().size()) + t.c().size() - bc.size();
  // delta <= mid amounts to A fitting inside g0 - comp(B+C)
  const bool step_fit = static_cast<long long>(t.a().size()) <= n - bc.size();
  Verdict kn = check_kneser(g, t.b(), t.c());
  Subgroup pi_bc = period(g, bc);
  const bool step_kneser = mid <= pi_bc.size;
  if (step_kneser != kn.pass) {
    throw TheoremViolationError("chain middle step disagrees with check_kneser on " +
                                describe_pair(t.b(), t.c()));
  }
  const bool step_period = pi_bc.members.subset_of(t.period().members);
  Verdict v;
  v.property = Property::trio_bound;
  v.lhs = delta;
  v.rhs = t.period().size;
  v.pass = step_fit && step_kneser && step_period;
  v.tight = v.pass && v.lhs == v.rhs;
  return v;
}

Verdict check_deficient_characterization(const Trio& t) {
  const bool deficient = t.is_deficient();
  bool witness = false;
  bool forward_ok = true;
  t.missing().for_each([&](int g0) {
    Trio done = complete_to_maximal(t, g0);
    const long long removal = static_cast<long long>(done.a().size() - t.a().size()) +
                              (done.b().size() - t.b().size()) +
                              (done.c().size() - t.c().size());
    const bool w = done.is_deficient() && removal < static_cast<long long>(done.period().size);
    witness = witness || w;
    if (deficient && !w) forward_ok = false;
  });
  Verdict v;
  v.property = Property::deficient_characterization;
  v.lhs = deficient ? 1 : 0;
  v.rhs = witness ? 1 : 0;
  v.pass = deficient ? (forward_ok && witness) : !witness;
  return v;
}

Verdict check_complement_identity(const Group& g, const Subset& s) {
  g.check_universe(s);
  return eval_complement_identity(g, s);
}

std::vector<Trio> enumerate_maximal_trios(const Group& g, int max_order) {
  const int n = g.order();
  const int cap = std::min(max_order, 64);
  if (n > cap) {
    throw CapabilityError("maximal-trio enumeration supports order <= " + std::to_string(cap) +
                          ", got " + std::to_string(n));
  }
  std::vector<Trio> out;
  if (n <= 1) return out;  // the trivial group has no trios
  const std::uint64_t limit = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::set<std::array<std::uint64_t, 3>> seen;
  for (std::uint64_t mb = 1; mb <= limit; ++mb) {
    Subset b = Subset::from_word(n, mb);
    for (std::uint64_t mc = 1; mc <= limit; ++mc) {
      Subset c = Subset::from_word(n, mc);
      Subset s = sumset(g, b, c);
      if (s.is_full()) continue;
      Subset base = negate_set(g, s.complement());  // g0 - comp(B+C) at g0 = 0
      for (int g0 = 0; g0 < n; ++g0) {
        Subset a1 = translate(g, base, g0);
        Subset b1 = point_minus(g, g0, sumset(g, a1, c).complement());
        Subset c1 = point_minus(g, g0, sumset(g, a1, b1).complement());
        if (!seen.insert({a1.word(0), b1.word(0), c1.word(0)}).second) continue;
        Trio t = Trio::make(g, std::move(a1), std::move(b1), std::move(c1));
        if (t.is_maximal()) out.push_back(std::move(t));
      }
      if (mc == ~std::uint64_t{0}) break;
    }
    if (mb == ~std::uint64_t{0}) break;
  }
  std::sort(out.begin(), out.end(), [](const Trio& x, const Trio& y) {
    if (x.a() != y.a()) return x.a().mask_less(y.a());
    if (x.b() != y.b()) return x.b().mask_less(y.b());
    return x.c().mask_less(y.c());
  });
  return out;
}

Verdict evaluate_property(const Group& g, Property p, std::span<const Subset> sets,
                          bool with_inputs, int probe) {
  const int fixed = row_of(p).arity;
  if (fixed >= 0) {
    if (static_cast<int>(sets.size()) != fixed) {
      throw ContractError(std::string(property_name(p)) + " expects " + std::to_string(fixed) +
                          " sets, got " + std::to_string(sets.size()));
    }
  } else if (static_cast<int>(sets.size()) < 2 ||
             static_cast<int>(sets.size()) > kMaxSystemSets) {
    throw ContractError(std::string(property_name(p)) + " expects between 2 and " +
                        std::to_string(kMaxSystemSets) + " sets, got " +
                        std::to_string(sets.size()));
  }
  for (const Subset& s : sets) g.check_universe(s);
  require_nonempty(p, sets);
  Verdict v;
  switch (p) {
    case Property::kneser:
      v = check_kneser(g, sets[0], sets[1]);
      break;
    case Property::trio_bound:
      v = trio_bound_impl(g, sets[0], sets[1], sets[2], nullptr);
      break;
    case Property::maxdef:
    case Property::iwml:
    case Property::box:
    case Property::deficient_characterization: {
      std::optional<Trio> t = try_trio(g, sets[0], sets[1], sets[2]);
      if (!t) {
        const long long total =
            static_cast<long long>(sets[0].size()) + sets[1].size() + sets[2].size();
        v = make_vacuous(p, "not-a-trio", total, 2ll * g.order());
        break;
      }
      if (p == Property::maxdef) {
        v = check_maxdef(*t);
      } else if (p == Property::iwml) {
        v = check_iwml(*t);
      } else if (p == Property::box) {
        v = eval_box_folded(*t);
      } else {
        v = check_deficient_characterization(*t);
      }
      break;
    }
    case Property::complement_identity:
      v = eval_complement_identity(g, sets[0]);
      break;
    default: {
      SetSystem sys(g, std::vector<Subset>(sets.begin(), sets.end()));
      if (p == Property::tau_major) {
        v = eval_tau_major(sys);
      } else if (p == Property::tau_stab) {
        v = eval_tau_stab(sys);
      } else if (p == Property::tau_stopcond) {
        v = eval_tau_stopcond(sys);
      } else if (p == Property::tau_sumset) {
        v = eval_tau_sumset(sys);
      } else {
        v = eval_rep_domination(sys, probe);
      }
      break;
    }
  }
  if (with_inputs) v.inputs = render_sets(sets);
  return v;
}

ScanReport exhaustive_scan(const Group& g, Property p, const ScanOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  validate_workers(opt);
  ScanReport rep;
  rep.group_literal = g.literal();
  rep.property = p;
  rep.exhaustive = true;
  if (p == Property::box) {
    scan_box_exhaustive(g, rep, opt);
  } else {
    scan_tuples(g, p, scan_arity(p, opt), opt.canonicalize, rep, opt);
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

ScanReport random_scan(const Group& g, Property p, std::uint64_t samples, std::uint64_t seed,
                       const ScanOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  validate_workers(opt);
  if (samples < 1) throw ContractError("random scan requires samples >= 1");
  ScanReport rep;
  rep.group_literal = g.literal();
  rep.property = p;
  rep.exhaustive = false;
  rep.samples = samples;
  rep.seed = seed;
  const int arity = scan_arity(p, opt);
  auto body = [&](std::uint64_t lo, std::uint64_t hi, WorkerTally& tally) {
    std::vector<Subset> sets(static_cast<std::size_t>(arity));
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t state = case_state(seed, idx);
      for (int k = 0; k < arity; ++k) {
        sets[static_cast<std::size_t>(k)] = draw_nonempty(g, state);
      }
      Verdict v = guarded_eval(g, p, sets, nullptr);
      consume(tally, idx, std::move(v), [&] { return render_sets(sets); });
    }
  };
  run_partitioned(samples, opt.workers, rep, body);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace trioscan
