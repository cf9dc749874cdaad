#include "trioscan/setops.hpp"

namespace trioscan {

namespace {

// Rotation implements translation by x on a single-word mask of a cyclic
// group: bit y moves to (y + x) mod n.
inline std::uint64_t rotate_mod(std::uint64_t m, int x, int n, std::uint64_t full) {
  if (x == 0) return m;
  return ((m << x) | (m >> (n - x))) & full;
}

inline std::uint64_t full_word(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline bool single_word_cyclic(const Group& g, const Subset& s) {
  return g.is_cyclic() && s.word_count() == 1;
}

Subset translate_generic(const Group& g, const Subset& s, int x) {
  Subset::Words words(static_cast<std::size_t>(s.word_count()), 0);
  auto row = g.add_row(x);
  s.for_each([&](int y) {
    int t = row[y];
    words[static_cast<unsigned>(t) >> 6] |= std::uint64_t{1} << (t & 63);
  });
  return Subset::from_words(g.order(), std::move(words));
}

}  // namespace

Subset translate(const Group& g, const Subset& s, int x) {
  g.check_universe(s);
  if (x < 0 || x >= g.order()) throw ContractError("translation element out of range");
  if (single_word_cyclic(g, s)) {
    return Subset::from_word(g.order(), rotate_mod(s.word(0), x, g.order(), full_word(g.order())));
  }
  return translate_generic(g, s, x);
}

Subset negate_set(const Group& g, const Subset& s) {
  g.check_universe(s);
  Subset::Words words(static_cast<std::size_t>(s.word_count()), 0);
  s.for_each([&](int y) {
    int t = g.neg(y);
    words[static_cast<unsigned>(t) >> 6] |= std::uint64_t{1} << (t & 63);
  });
  return Subset::from_words(g.order(), std::move(words));
}

Subset point_minus(const Group& g, int x, const Subset& s) {
  g.check_universe(s);
  if (x < 0 || x >= g.order()) throw ContractError("element out of range");
  Subset::Words words(static_cast<std::size_t>(s.word_count()), 0);
  s.for_each([&](int y) {
    int t = g.sub(x, y);
    words[static_cast<unsigned>(t) >> 6] |= std::uint64_t{1} << (t & 63);
  });
  return Subset::from_words(g.order(), std::move(words));
}

Subset sumset(const Group& g, const Subset& a, const Subset& b) {
  g.check_universe(a);
  g.check_universe(b);
  const int n = g.order();
  if (a.empty() || b.empty()) return Subset(n);
  const Subset& small = a.size() <= b.size() ? a : b;
  const Subset& big = a.size() <= b.size() ? b : a;
  if (single_word_cyclic(g, small)) {
    const std::uint64_t full = full_word(n);
    const std::uint64_t bw = big.word(0);
    std::uint64_t acc = 0;
    std::uint64_t w = small.word(0);
    while (w) {
      int e = std::countr_zero(w);
      w &= w - 1;
      acc |= rotate_mod(bw, e, n, full);
      if (acc == full) break;
    }
    return Subset::from_word(n, acc);
  }
  Subset::Words words(static_cast<std::size_t>(small.word_count()), 0);
  bool full = false;
  small.for_each([&](int e) {
    if (full) return;
    auto row = g.add_row(e);
    big.for_each([&](int y) {
      int t = row[y];
      words[static_cast<unsigned>(t) >> 6] |= std::uint64_t{1} << (t & 63);
    });
    int count = 0;
    for (std::uint64_t v : words) count += std::popcount(v);
    full = count == n;
  });
  return Subset::from_words(n, std::move(words));
}

Subset sumset_all(const Group& g, std::span<const Subset> sets) {
  if (sets.empty()) throw ContractError("n-fold sumset needs at least one set");
  Subset acc = sets[0];
  g.check_universe(acc);
  for (std::size_t i = 1; i < sets.size(); ++i) acc = sumset(g, acc, sets[i]);
  return acc;
}

Subgroup period(const Group& g, const Subset& s) {
  g.check_universe(s);
  const int n = g.order();
  // pi(S) = pi(comp(S)); iterate over the smaller of the two.
  const Subset t = s.size() * 2 <= n ? s : s.complement();
  Subset acc = Subset::full_set(n);
  bool done = t.empty();
  t.for_each([&](int e) {
    if (done) return;
    acc = acc & translate(g, t, g.neg(e));
    if (acc.size() == 1) done = true;  // only the identity stabilizes
  });
  return Subgroup{acc, acc.size()};
}

Subgroup generated_subgroup(const Group& g, const Subset& s) {
  g.check_universe(s);
  Subset m = Subset::of(g.order(), {0});
  s.for_each([&](int e) {
    for (;;) {
      Subset next = m | translate(g, m, e);
      if (next == m) break;
      m = std::move(next);
    }
  });
  return Subgroup{m, m.size()};
}

ComplementIdentityRecord complement_identity_check(const Group& g, const Subset& s) {
  g.check_universe(s);
  ComplementIdentityRecord rec;
  if (s.empty() || s.is_full()) {
    rec.vacuous = true;
    rec.pass = true;
    return rec;
  }
  const Subset comp = s.complement();
  rec.diff = sumset(g, s, negate_set(g, comp));
  rec.diff_rev = sumset(g, comp, negate_set(g, s));
  const Subgroup pi = period(g, s);
  rec.expected = pi.members.complement();
  rec.sets_match = rec.diff == rec.expected && rec.diff_rev == rec.expected;
  rec.period_match = period(g, rec.diff).members == pi.members;
  rec.pass = rec.sets_match && rec.period_match;
  return rec;
}

}  // namespace trioscan
