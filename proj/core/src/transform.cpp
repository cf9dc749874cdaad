#include "trioscan/transform.hpp"

#include <string>

#include "trioscan/error.hpp"

namespace trioscan {

namespace {

std::string describe_system(const SetSystem& sys) {
  std::string out;
  for (int i = 0; i < sys.count(); ++i) {
    if (i) out += ';';
    bool first = true;
    sys.set(i).for_each([&](int e) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    });
  }
  return out;
}

// Strict majorization: prefix sums of out dominate prefix sums of in, totals
// equal, and at least one prefix strictly larger.
bool strictly_majorizes(const std::vector<int>& out, const std::vector<int>& in) {
  long long po = 0, pi = 0;
  bool strict = false;
  for (std::size_t k = 0; k < in.size(); ++k) {
    po += out[k];
    pi += in[k];
    if (po < pi) return false;
    if (k + 1 < in.size() && po > pi) strict = true;
  }
  return po == pi && strict;
}

}  // namespace

SetSystem::SetSystem(Group g, std::vector<Subset> sets) : g_(std::move(g)), sets_(std::move(sets)) {
  if (sets_.empty()) throw ContractError("set system needs at least one set");
  if (static_cast<int>(sets_.size()) > kMaxSystemSets) {
    throw CapabilityError("set system bounded at " + std::to_string(kMaxSystemSets) + " sets");
  }
  for (const Subset& s : sets_) g_.check_universe(s);
}

std::vector<int> SetSystem::sizes() const {
  std::vector<int> out;
  out.reserve(sets_.size());
  for (const Subset& s : sets_) out.push_back(s.size());
  return out;
}

TransformOutcome tau(const SetSystem& sys) {
  const int n = sys.count();
  const int order = sys.group().order();
  std::vector<int> mult(static_cast<std::size_t>(order), 0);
  for (int i = 0; i < n; ++i) {
    sys.set(i).for_each([&](int e) { ++mult[static_cast<std::size_t>(e)]; });
  }
  std::vector<Subset::Words> words(static_cast<std::size_t>(n));
  const auto word_count = static_cast<std::size_t>((order + 63) / 64);
  for (auto& w : words) w.resize(word_count, 0);
  for (int e = 0; e < order; ++e) {
    const int m = mult[static_cast<std::size_t>(e)];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    const std::size_t wi = static_cast<unsigned>(e) >> 6;
    for (int i = 0; i < m; ++i) words[static_cast<std::size_t>(i)][wi] |= bit;
  }
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(Subset::from_words(order, std::move(words[static_cast<std::size_t>(i)])));
  }

  // Outcome invariants; each is a theorem about the construction.
  Subset uni(order), inter = Subset::full_set(order);
  for (const Subset& s : sys.sets()) {
    uni = uni | s;
    inter = inter & s;
  }
  if (out.front() != uni || out.back() != inter) {
    throw TheoremViolationError("tau endpoints differ from union/intersection for " +
                                describe_system(sys));
  }
  long long prefix_in = 0, prefix_out = 0;
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n && !out[static_cast<std::size_t>(i + 1)].subset_of(out[static_cast<std::size_t>(i)])) {
      throw TheoremViolationError("tau output is not nested for " + describe_system(sys));
    }
    prefix_in += sys.set(i).size();
    prefix_out += out[static_cast<std::size_t>(i)].size();
    if (prefix_out < prefix_in) {
      throw TheoremViolationError("tau prefix majorization fails at position " +
                                  std::to_string(i + 1) + " for " + describe_system(sys));
    }
  }
  if (prefix_in != prefix_out) {
    throw TheoremViolationError("tau does not preserve the size total for " +
                                describe_system(sys));
  }
  for (int e = 0; e < order; ++e) {
    int count = 0;
    for (const Subset& s : out) count += s.contains(e) ? 1 : 0;
    if (count != mult[static_cast<std::size_t>(e)]) {
      throw TheoremViolationError("tau multiplicity not preserved at element " +
                                  std::to_string(e) + " for " + describe_system(sys));
    }
  }
  return TransformOutcome{SetSystem(sys.group(), std::move(out)), std::move(mult)};
}

bool is_nested(const SetSystem& sys) {
  bool nested = true;
  for (int i = 0; i + 1 < sys.count(); ++i) {
    if (!sys.set(i + 1).subset_of(sys.set(i))) {
      nested = false;
      break;
    }
  }
  const bool fixed_point = tau(sys).output == sys;
  if (nested != fixed_point) {
    throw TheoremViolationError("nesting and tau-stability disagree for " +
                                describe_system(sys));
  }
  return nested;
}

StopCertificate find_improving_translation(const SetSystem& sys) {
  const int n = sys.count();
  if (n < 2) throw ContractError("translation search needs at least two sets");
  for (const Subset& s : sys.sets()) {
    if (s.empty()) throw ContractError("translation search requires non-empty sets");
  }
  const Group& g = sys.group();
  const std::vector<int> in_sizes = sys.sizes();

  // The full product A_1 x ... x A_n must be searched.  Joint shifts do keep
  // every |tau_i| unchanged, but shifting a witness into an a_1-pinned slice
  // can move the other components out of their sets, so pinning a_1 loses
  // witnesses (e.g. ({0,1,2},{0,2},{0}) in Z_4 improves only at (1,0,0)).
  // Early exit keeps the typical cost at a handful of tau evaluations.
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) candidates[static_cast<std::size_t>(k)] = sys.set(k).elements();

  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  std::vector<Subset> shifted(static_cast<std::size_t>(n), Subset(g.order()));
  for (;;) {
    for (int k = 0; k < n; ++k) {
      int ak = candidates[static_cast<std::size_t>(k)][pos[static_cast<std::size_t>(k)]];
      shifted[static_cast<std::size_t>(k)] = translate(g, sys.set(k), g.neg(ak));
    }
    TransformOutcome outcome = tau(SetSystem(g, shifted));
    if (strictly_majorizes(outcome.output.sizes(), in_sizes)) {
      StopCertificate cert;
      cert.kind = StopCertificate::Kind::improving_translation;
      cert.translations.reserve(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        cert.translations.push_back(
            candidates[static_cast<std::size_t>(k)][pos[static_cast<std::size_t>(k)]]);
      }
      cert.transformed = outcome.output.sets();
      return cert;
    }
    // Lexicographic odometer over (a_1, ..., a_n), last position fastest.
    int k = n - 1;
    while (k >= 0 && ++pos[static_cast<std::size_t>(k)] ==
                         candidates[static_cast<std::size_t>(k)].size()) {
      pos[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }

  // No improvement anywhere: the dichotomy demands the coset certificate.
  for (int k = 1; k < n; ++k) {
    Subset diff = sumset(g, sys.set(k), negate_set(g, sys.set(k)));
    if (!diff.subset_of(period(g, sys.set(k - 1)).members)) {
      throw TheoremViolationError(
          "stop-condition dichotomy fails: no improving translation and A" +
          std::to_string(k + 1) + "-A" + std::to_string(k + 1) + " escapes pi(A" +
          std::to_string(k) + ") for " + describe_system(sys));
    }
  }
  StopCertificate cert;
  cert.kind = StopCertificate::Kind::nested_cosets;
  return cert;
}

bool sumset_inclusion_check(const SetSystem& sys) {
  for (const Subset& s : sys.sets()) {
    if (s.empty()) throw ContractError("sumset inclusion check requires non-empty sets");
  }
  const Group& g = sys.group();
  // An empty tau_n empties the left-hand sumset, which is vacuously included.
  const Subset lhs = sumset_all(g, tau(sys).output.sets());
  const Subset rhs = sumset_all(g, sys.sets());
  return lhs.subset_of(rhs);
}

long long representation_count(const SetSystem& sys, int x) {
  const Group& g = sys.group();
  if (x < 0 || x >= g.order()) throw ContractError("element out of range");
  const int n = sys.count();
  if (n == 1) return sys.set(0).contains(x) ? 1 : 0;
  std::vector<std::vector<int>> elems(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) elems[static_cast<std::size_t>(i)] = sys.set(i).elements();
  const Subset& last = sys.set(n - 1);
  long long count = 0;
  // Nested loops over the first n-1 sets; the last coordinate is forced.
  auto rec = [&](auto&& self, int level, int acc) -> void {
    if (level == n - 1) {
      count += last.contains(g.sub(x, acc)) ? 1 : 0;
      return;
    }
    for (int y : elems[static_cast<std::size_t>(level)]) self(self, level + 1, g.add(acc, y));
  };
  rec(rec, 0, 0);
  return count;
}

bool rep_domination(const SetSystem& sys, int x) {
  return representation_count(tau(sys).output, x) <= representation_count(sys, x);
}

}  // namespace trioscan
