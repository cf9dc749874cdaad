// Acceptance suite: nine end-to-end criteria, one PASS/FAIL line each.
// Every theorem check expects zero violations; counts and bounds are exact.
// Exit status 0 iff all criteria pass.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trioscan/cli.hpp"
#include "trioscan/error.hpp"
#include "trioscan/group.hpp"
#include "trioscan/literals.hpp"
#include "trioscan/setops.hpp"
#include "trioscan/subset.hpp"
#include "trioscan/trio.hpp"
#include "trioscan/verify.hpp"

using namespace trioscan;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  bool ok = true;
  std::string detail;
};

Tally fail(std::string why) { return Tally{false, std::move(why)}; }

std::string render_trio(const Trio& t) {
  const Subset parts[] = {t.a(), t.b(), t.c()};
  return render_sets(parts);
}

/// Cyclic groups of orders 2..10 plus the small product types.
std::vector<Group> small_groups() {
  std::vector<Group> out;
  for (int n = 2; n <= 10; ++n) out.push_back(make_group({n}));
  out.push_back(make_group({2, 2}));
  out.push_back(make_group({2, 4}));
  out.push_back(make_group({3, 3}));
  out.push_back(make_group({2, 2, 2}));
  return out;
}

/// One representative per abelian isomorphism type of order 2..16.
std::vector<Group> types_up_to_16() {
  static const std::vector<std::vector<int>> factors = {
      {2},          {3},    {4},    {2, 2},    {5},    {6},          {7},
      {8},          {2, 4}, {2, 2, 2}, {9},    {3, 3}, {10},         {11},
      {12},         {2, 2, 3}, {13}, {14},     {15},   {16},         {2, 8},
      {4, 4},       {2, 2, 4}, {2, 2, 2, 2}};
  std::vector<Group> out;
  for (const auto& f : factors) out.push_back(make_group(f));
  return out;
}

/// Maximal-trio lists shared between the maxdef and IWML criteria.
std::map<std::string, std::vector<Trio>> g_maximal;

const std::vector<Trio>& maximal_of(const Group& g) {
  auto [it, fresh] = g_maximal.try_emplace(g.literal());
  if (fresh) it->second = enumerate_maximal_trios(g);
  return it->second;
}

// 1. Kneser's bound, exhaustive over all non-empty pairs, single worker.
Tally crit_kneser() {
  Clock::time_point t0 = Clock::now();
  ScanOptions opt;
  opt.workers = 1;
  std::uint64_t cases = 0;
  int groups = 0;
  for (const Group& g : small_groups()) {
    ScanReport r = exhaustive_scan(g, Property::kneser, opt);
    std::uint64_t m = (std::uint64_t{1} << g.order()) - 1;
    if (r.cases_checked != m * m) {
      return fail(g.literal() + ": checked " + std::to_string(r.cases_checked) +
                  " pairs, expected " + std::to_string(m * m));
    }
    if (!r.violations.empty()) {
      return fail(g.literal() + ": " + std::to_string(r.violations.size()) +
                  " violations, first inputs " + r.violations.front().second.inputs);
    }
    if (r.tight_count == 0) return fail(g.literal() + ": no tight case");
    cases += r.cases_checked;
    ++groups;
  }
  double wall = seconds_since(t0);
  if (wall >= 120.0) return fail("exceeded the 120s single-core bound");
  std::ostringstream os;
  os << groups << " groups, " << cases << " pairs, zero violations, tight case in every group";
  return Tally{true, os.str()};
}

// 2. Trio bound, exhaustive triples of Z2..Z8 and canonicalized Z10, 4 workers.
Tally crit_trio_bound() {
  Clock::time_point t0 = Clock::now();
  ScanOptions opt;
  opt.workers = 4;
  opt.budget = 300'000'000;
  std::uint64_t cases = 0;
  for (int n = 2; n <= 8; ++n) {
    Group g = make_group({n});
    ScanReport r = exhaustive_scan(g, Property::trio_bound, opt);
    std::uint64_t m = (std::uint64_t{1} << n) - 1;
    if (r.cases_checked != m * m * m) {
      return fail(g.literal() + ": checked " + std::to_string(r.cases_checked) +
                  " triples, expected " + std::to_string(m * m * m));
    }
    if (!r.violations.empty()) {
      return fail(g.literal() + ": " + std::to_string(r.violations.size()) +
                  " violations, first inputs " + r.violations.front().second.inputs);
    }
    cases += r.cases_checked;
  }
  ScanOptions canon = opt;
  canon.canonicalize = true;
  ScanReport r10 = exhaustive_scan(make_group({10}), Property::trio_bound, canon);
  if (r10.cases_checked != 268'173'312ull) {
    return fail("Z10 canonical count " + std::to_string(r10.cases_checked) +
                ", expected 268173312");
  }
  if (!r10.violations.empty()) {
    return fail("Z10: " + std::to_string(r10.violations.size()) + " violations");
  }
  cases += r10.cases_checked;
  double wall = seconds_since(t0);
  if (wall >= 600.0) return fail("exceeded the 600s bound on 4 workers");
  std::ostringstream os;
  os << cases << " triples across Z2..Z8 and canonicalized Z10, zero violations";
  return Tally{true, os.str()};
}

// 3. Every deficient maximal trio has deficiency exactly |period|; the
//    enumerator matches brute-force maximality filtering at small orders.
Tally crit_maxdef() {
  std::uint64_t trios = 0, deficient = 0;
  for (const Group& g : small_groups()) {
    for (const Trio& t : maximal_of(g)) {
      ++trios;
      if (!t.is_deficient()) continue;
      ++deficient;
      Verdict v = check_maxdef(t);
      if (!v.pass || v.vacuous) {
        return fail(g.literal() + " trio " + render_trio(t) + ": delta " +
                    std::to_string(v.lhs) + " vs period " + std::to_string(v.rhs));
      }
    }
  }
  static const std::vector<std::vector<int>> small = {{2}, {3}, {4}, {5}, {6}, {2, 2}};
  for (const auto& f : small) {
    Group g = make_group(f);
    const int n = g.order();
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    const Subset full = Subset::full_set(n);
    std::set<std::array<std::uint64_t, 3>> brute, listed;
    for (std::uint64_t a = 1; a <= m; ++a) {
      Subset sa = Subset::from_word(n, a);
      for (std::uint64_t b = 1; b <= m; ++b) {
        Subset sab = sumset(g, sa, Subset::from_word(n, b));
        for (std::uint64_t c = 1; c <= m; ++c) {
          Subset sc = Subset::from_word(n, c);
          if (sumset(g, sab, sc) == full) continue;
          Trio t = Trio::make(g, sa, Subset::from_word(n, b), sc);
          if (t.is_maximal()) brute.insert({a, b, c});
        }
      }
    }
    for (const Trio& t : maximal_of(g)) {
      listed.insert({t.a().word(0), t.b().word(0), t.c().word(0)});
    }
    if (brute != listed) {
      return fail(g.literal() + ": enumerator lists " + std::to_string(listed.size()) +
                  " maximal trios, brute force finds " + std::to_string(brute.size()));
    }
  }
  std::ostringstream os;
  os << trios << " maximal trios over 13 groups, " << deficient
     << " deficient, all with delta = |period|; enumerator matches brute force up to order 6";
  return Tally{true, os.str()};
}

// 4. IWML: rho >= |H| - 1 on every qualifying maximal trio up to order 10.
Tally crit_iwml() {
  std::uint64_t applied = 0, vacuous = 0;
  for (const Group& g : small_groups()) {
    for (const Trio& t : maximal_of(g)) {
      Verdict v = check_iwml(t);
      if (v.vacuous) {
        ++vacuous;
        continue;
      }
      ++applied;
      if (!v.pass) {
        return fail(g.literal() + " trio " + render_trio(t) + ": rho " +
                    std::to_string(v.lhs) + " < " + std::to_string(v.rhs));
      }
    }
  }
  g_maximal.clear();
  std::ostringstream os;
  os << applied << " non-vacuous checks passed (" << vacuous << " vacuous)";
  return Tally{true, os.str()};
}

// 5. Transform properties on >= 1e5 seeded random systems per property,
//    n in {2,3,4}, orders 16/24/32, plus exhaustive pairs of Z6.
Tally crit_transform() {
  static const Property props[] = {Property::tau_major, Property::tau_stab,
                                   Property::tau_stopcond, Property::tau_sumset,
                                   Property::rep_domination};
  const std::vector<Group> groups = {make_group({24}), make_group({2, 2, 2, 2}),
                                     make_group({32})};
  Group z6 = make_group({6});
  std::uint64_t seed = 100;
  std::uint64_t random_total = 0, exhaustive_total = 0;
  for (Property p : props) {
    std::uint64_t per_prop = 0;
    for (int arity : {2, 3, 4}) {
      for (const Group& g : groups) {
        ScanOptions opt;
        opt.arity = arity;
        ScanReport r = random_scan(g, p, 12'000, ++seed, opt);
        if (!r.violations.empty()) {
          return fail(std::string(property_name(p)) + " over " + g.literal() + " n=" +
                      std::to_string(arity) + ": " + std::to_string(r.violations.size()) +
                      " violations, first inputs " + r.violations.front().second.inputs);
        }
        per_prop += r.cases_checked;
      }
    }
    if (per_prop < 100'000) {
      return fail(std::string(property_name(p)) + ": only " + std::to_string(per_prop) +
                  " random systems");
    }
    random_total += per_prop;
    ScanOptions pairs;
    pairs.arity = 2;
    ScanReport r = exhaustive_scan(z6, p, pairs);
    if (r.cases_checked != 3969) {
      return fail(std::string(property_name(p)) + " exhaustive Z6: checked " +
                  std::to_string(r.cases_checked) + " pairs, expected 3969");
    }
    if (!r.violations.empty()) {
      return fail(std::string(property_name(p)) + " exhaustive Z6: " +
                  std::to_string(r.violations.size()) + " violations");
    }
    exhaustive_total += r.cases_checked;
  }
  std::ostringstream os;
  os << random_total << " random systems across 5 properties plus " << exhaustive_total
     << " exhaustive Z6 pairs, zero violations";
  return Tally{true, os.str()};
}

// 6. Reductions: the trio-bound derivation of Kneser agrees with the direct
//    check, and the Kneser derivation of the trio bound passes its chain.
Tally crit_reductions() {
  std::uint64_t pairs = 0;
  for (int n = 2; n <= 8; ++n) {
    Group g = make_group({n});
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t a = 1; a <= m; ++a) {
      Subset sa = Subset::from_word(n, a);
      for (std::uint64_t b = 1; b <= m; ++b) {
        Subset sb = Subset::from_word(n, b);
        Verdict derived = derive_kneser_from_trio(g, sa, sb);
        Verdict direct = check_kneser(g, sa, sb);
        if (!derived.pass || derived.pass != direct.pass) {
          return fail(g.literal() + " pair " + render_set(sa) + ";" + render_set(sb) +
                      ": derivation disagrees with the direct check");
        }
        ++pairs;
      }
    }
  }
  Group z24 = make_group({24});
  std::mt19937_64 rng(11);
  const std::uint64_t mask24 = (std::uint64_t{1} << 24) - 1;
  auto sample24 = [&] {
    std::uint64_t w = 0;
    while ((w = rng() & mask24) == 0) {
    }
    return Subset::from_word(24, w);
  };
  std::uint64_t sampled = 0;
  for (int i = 0; i < 10'000; ++i) {
    Subset a = sample24(), b = sample24();
    Verdict derived = derive_kneser_from_trio(z24, a, b);
    Verdict direct = check_kneser(z24, a, b);
    if (!derived.pass || derived.pass != direct.pass) {
      return fail("Z24 sample " + std::to_string(i) + ": derivation disagrees");
    }
    ++sampled;
  }
  std::uint64_t chains = 0;
  for (int n = 2; n <= 6; ++n) {
    Group g = make_group({n});
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    const Subset full = Subset::full_set(n);
    for (std::uint64_t a = 1; a <= m; ++a) {
      Subset sa = Subset::from_word(n, a);
      for (std::uint64_t b = 1; b <= m; ++b) {
        Subset sab = sumset(g, sa, Subset::from_word(n, b));
        for (std::uint64_t c = 1; c <= m; ++c) {
          Subset sc = Subset::from_word(n, c);
          if (sumset(g, sab, sc) == full) continue;
          Trio t = Trio::make(g, sa, Subset::from_word(n, b), sc);
          for (int g0 : t.missing().elements()) {
            Verdict v = derive_trio_from_kneser(t, g0);
            if (!v.pass || v.vacuous) {
              return fail(g.literal() + " trio " + render_trio(t) + " anchor " +
                          std::to_string(g0) + ": chain step failed");
            }
            ++chains;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << pairs << " exhaustive pairs and " << sampled
     << " Z24 samples agree with the direct Kneser check; " << chains
     << " derivation chains passed over all trios of Z2..Z6";
  return Tally{true, os.str()};
}

// 7. Complement identity on every non-empty proper subset of every abelian
//    type of order <= 16, plus 1e5 random subsets at order <= 32.
Tally crit_complement() {
  std::uint64_t checked = 0;
  for (const Group& g : types_up_to_16()) {
    const int n = g.order();
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t w = 1; w < m; ++w) {
      Verdict v = check_complement_identity(g, Subset::from_word(n, w));
      if (!v.pass || v.vacuous) {
        return fail(g.literal() + " subset word " + std::to_string(w) + ": identity failed");
      }
      ++checked;
    }
  }
  const std::vector<Group> wide = {make_group({32}), make_group({2, 4, 4}),
                                   make_group({24}), make_group({3, 3, 3})};
  std::uint64_t sampled = 0;
  std::uint64_t seed = 500;
  for (const Group& g : wide) {
    ScanReport r = random_scan(g, Property::complement_identity, 25'000, ++seed, {});
    if (!r.violations.empty()) {
      return fail(g.literal() + ": " + std::to_string(r.violations.size()) + " violations");
    }
    sampled += r.cases_checked;
  }
  std::ostringstream os;
  os << checked << " exhaustive subsets over 24 group types plus " << sampled
     << " random subsets, zero failures";
  return Tally{true, os.str()};
}

// 8. Box slice bound over every maximal trio, subgroup, and anchor, order <= 8.
Tally crit_box() {
  static const std::vector<std::vector<int>> factors = {
      {2}, {3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {2, 2, 2}};
  std::uint64_t cases = 0;
  for (const auto& f : factors) {
    Group g = make_group(f);
    ScanReport r = exhaustive_scan(g, Property::box, {});
    if (!r.violations.empty()) {
      return fail(g.literal() + ": " + std::to_string(r.violations.size()) +
                  " violations, first inputs " + r.violations.front().second.inputs);
    }
    cases += r.cases_checked;
  }
  std::ostringstream os;
  os << cases << " (trio, subgroup, anchor) cases across 10 groups, zero violations";
  return Tally{true, os.str()};
}

/// Lines output with the elapsed_ms field removed.
std::string strip_elapsed(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t at = line.find(" elapsed_ms=");
    out += at == std::string::npos ? line : line.substr(0, at);
    out += '\n';
  }
  return out;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// 9. Worker-count determinism of the lines format and the exit-code contract.
Tally crit_determinism() {
  std::vector<std::string> base = {"verify", "--group",   "24",     "--property",
                                   "trio-bound", "--samples", "100000", "--seed",
                                   "7",      "--format",  "lines"};
  std::vector<std::string> one = base, eight = base;
  one.insert(one.end(), {"--workers", "1"});
  eight.insert(eight.end(), {"--workers", "8"});
  CliRun a = run(one);
  CliRun b = run(eight);
  if (a.code != 0 || b.code != 0) {
    return fail("sampled scan exited " + std::to_string(a.code) + " / " + std::to_string(b.code));
  }
  if (strip_elapsed(a.out) != strip_elapsed(b.out)) {
    return fail("lines output differs between 1 and 8 workers");
  }
  if (a.out.find("seed=7") == std::string::npos ||
      a.out.find("violations=0") == std::string::npos) {
    return fail("summary record missing expected fields");
  }

  struct Case {
    std::vector<std::string> args;
    int expect;
  };
  const std::vector<Case> matrix = {
      {{"sumset", "--group", "5", "--sets", "0,1;0,1"}, 0},
      {{"verify", "--group", "4", "--property", "kneser", "--exhaustive"}, 0},
      {{"verify", "--group", "4", "--property", "kneser", "--sets", "0,1;0,1"}, 0},
      {{"verify", "--group", "4", "--property", "kneser", "--sets", "0,1;;"}, 2},
      {{"verify", "--group", "4", "--property", "nope", "--exhaustive"}, 2},
      {{"verify", "--group", "x4", "--property", "kneser", "--exhaustive"}, 2},
      {{"verify", "--group", "4", "--property", "kneser"}, 2},
      {{"verify", "--group", "4", "--property", "kneser", "--exhaustive", "--samples", "5"}, 2},
      {{"verify", "--group", "8", "--property", "trio-bound", "--exhaustive", "--budget",
        "1000"}, 3},
      {{"maximal-trios", "--group", "13"}, 3},
  };
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    CliRun r = run(matrix[i].args);
    if (r.code != matrix[i].expect) {
      return fail("matrix case " + std::to_string(i) + " exited " + std::to_string(r.code) +
                  ", expected " + std::to_string(matrix[i].expect));
    }
  }
  std::ostringstream os;
  os << "identical lines output for 1 vs 8 workers on 100000 samples; exit codes match on "
     << matrix.size() << " scripted invocations";
  return Tally{true, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Tally()> fn;
  };
  const std::vector<Criterion> suite = {
      {"kneser exhaustive", crit_kneser},
      {"trio bound exhaustive", crit_trio_bound},
      {"maximal deficient trios", crit_maxdef},
      {"intermediate main lemma", crit_iwml},
      {"transform suite", crit_transform},
      {"equivalence reductions", crit_reductions},
      {"complement identity", crit_complement},
      {"box slice bound", crit_box},
      {"determinism and exit codes", crit_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    Clock::time_point t0 = Clock::now();
    Tally t;
    try {
      t = suite[i].fn();
    } catch (const std::exception& e) {
      t = fail(std::string("unexpected exception: ") + e.what());
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << (i + 1) << " " << (t.ok ? "PASS" : "FAIL") << " "
         << suite[i].label << ": " << t.detail << " [" << seconds_since(t0) << "s]";
    std::cout << line.str() << std::endl;
    all = all && t.ok;
  }
  std::cout << (all ? "acceptance: 9/9 criteria passed" : "acceptance: FAILURES present")
            << std::endl;
  return all ? 0 : 1;
}
