#include "trioscan/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "trioscan/setops.hpp"

namespace trioscan {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Group Group::cyclic_product(const std::vector<int>& orders) {
  if (orders.empty()) throw ContractError("cyclic product needs at least one factor");
  long long n = 1;
  for (int f : orders) {
    if (f < 1) throw ContractError("cyclic factor must be positive, got " + std::to_string(f));
    n *= f;
    if (n > kMaxGroupOrder) {
      throw CapabilityError("group order exceeds bound " + std::to_string(kMaxGroupOrder));
    }
  }
  auto d = std::make_shared<Data>();
  d->n = static_cast<int>(n);
  d->factors = orders;

  // Decode every index once, then fill the addition table coordinatewise.
  const int k = static_cast<int>(orders.size());
  std::vector<int> co(static_cast<std::size_t>(d->n) * k);
  for (int e = 0; e < d->n; ++e) {
    int rest = e;
    for (int i = 0; i < k; ++i) {
      co[static_cast<std::size_t>(e) * k + i] = rest % orders[i];
      rest /= orders[i];
    }
  }
  d->add.resize(static_cast<std::size_t>(d->n) * d->n);
  std::vector<int> sum(k);
  for (int a = 0; a < d->n; ++a) {
    const int* ca = &co[static_cast<std::size_t>(a) * k];
    for (int b = 0; b < d->n; ++b) {
      const int* cb = &co[static_cast<std::size_t>(b) * k];
      int idx = 0;
      for (int i = k - 1; i >= 0; --i) {
        int c = ca[i] + cb[i];
        if (c >= orders[i]) c -= orders[i];
        idx = idx * orders[i] + c;
      }
      d->add[static_cast<std::size_t>(a) * d->n + b] = static_cast<std::uint16_t>(idx);
    }
  }
  d->neg.resize(static_cast<std::size_t>(d->n));
  for (int a = 0; a < d->n; ++a) {
    const int* ca = &co[static_cast<std::size_t>(a) * k];
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) {
      int c = ca[i] == 0 ? 0 : orders[i] - ca[i];
      idx = idx * orders[i] + c;
    }
    d->neg[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(idx);
  }
  return Group(std::move(d));
}

Group Group::from_tables(int n, std::vector<std::uint16_t> add_table,
                         std::vector<std::uint16_t> neg_table) {
  if (n < 1 || n > kMaxGroupOrder) {
    throw CapabilityError("table group order " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxGroupOrder) + "]");
  }
  if (add_table.size() != static_cast<std::size_t>(n) * n || neg_table.size() != static_cast<std::size_t>(n)) {
    throw ContractError("table sizes do not match order " + std::to_string(n));
  }
  for (std::uint16_t v : add_table) {
    if (v >= n) throw ContractError("addition table entry out of range");
  }
  for (std::uint16_t v : neg_table) {
    if (v >= n) throw ContractError("negation table entry out of range");
  }
  auto d = std::make_shared<Data>();
  d->n = n;
  d->add = std::move(add_table);
  d->neg = std::move(neg_table);
  Group g(std::move(d));
  verify_group_laws(g);
  return g;
}

std::vector<int> Group::coords(int e) const {
  if (d_->factors.empty()) throw ContractError("coords requires the cyclic product realization");
  if (e < 0 || e >= d_->n) throw ContractError("element out of range");
  std::vector<int> out(d_->factors.size());
  for (std::size_t i = 0; i < d_->factors.size(); ++i) {
    out[i] = e % d_->factors[i];
    e /= d_->factors[i];
  }
  return out;
}

int Group::index_of(const std::vector<int>& coords) const {
  if (d_->factors.empty()) throw ContractError("index_of requires the cyclic product realization");
  if (coords.size() != d_->factors.size()) throw ContractError("coordinate count mismatch");
  int idx = 0;
  for (std::size_t i = d_->factors.size(); i-- > 0;) {
    if (coords[i] < 0 || coords[i] >= d_->factors[i]) throw ContractError("coordinate out of range");
    idx = idx * d_->factors[i] + coords[i];
  }
  return idx;
}

std::string Group::literal() const {
  if (d_->factors.empty()) return "table(" + std::to_string(d_->n) + ")";
  std::string out;
  for (std::size_t i = 0; i < d_->factors.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(d_->factors[i]);
  }
  return out;
}

Group make_group(const std::vector<int>& orders) { return Group::cyclic_product(orders); }

void verify_group_laws(const Group& g, int exhaustive_limit) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.add(0, a) != a || g.add(a, 0) != a) {
      throw ContractError("identity law fails at element " + std::to_string(a));
    }
    if (g.add(a, g.neg(a)) != 0) {
      throw ContractError("negation law fails at element " + std::to_string(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.add(a, b) != g.add(b, a)) {
        throw ContractError("commutativity fails at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
      }
    }
  }
  auto check_assoc = [&](int a, int b, int c) {
    if (g.add(g.add(a, b), c) != g.add(a, g.add(b, c))) {
      throw ContractError("associativity fails at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (n <= exhaustive_limit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_assoc(a, b, c);
  } else {
    std::uint64_t s = 0x5eed0f00du;
    for (int i = 0; i < 200000; ++i) {
      s = splitmix64(s);
      int a = static_cast<int>(s % n);
      int b = static_cast<int>((s >> 20) % n);
      int c = static_cast<int>((s >> 40) % n);
      check_assoc(a, b, c);
    }
  }
}

bool is_subgroup(const Group& g, const Subset& members) {
  g.check_universe(members);
  if (!members.contains(0)) return false;
  bool closed = true;
  members.for_each([&](int a) {
    if (!closed) return;
    auto row = g.add_row(a);
    members.for_each([&](int b) {
      if (closed && !members.contains(row[b])) closed = false;
    });
  });
  return closed;
}

namespace {

// H union (H + x) union (H + 2x) ...; for subgroup H this is the subgroup
// generated by H and x (the group is abelian).
Subset close_with(const Group& g, const Subset& h, int x) {
  Subset m = h;
  for (;;) {
    Subset next = m | translate(g, m, x);
    if (next == m) return m;
    m = std::move(next);
  }
}

}  // namespace

std::vector<Subgroup> list_subgroups(const Group& g, int max_order) {
  if (g.order() > max_order) {
    throw CapabilityError("subgroup enumeration bounded at order " + std::to_string(max_order) +
                          ", group has order " + std::to_string(g.order()));
  }
  std::map<std::vector<std::uint64_t>, Subset> seen;
  auto key_of = [](const Subset& s) {
    std::vector<std::uint64_t> k(static_cast<std::size_t>(s.word_count()));
    for (int i = 0; i < s.word_count(); ++i) k[static_cast<std::size_t>(i)] = s.word(i);
    return k;
  };
  Subset trivial = Subset::of(g.order(), {0});
  seen.emplace(key_of(trivial), trivial);
  std::vector<Subset> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& h : frontier) {
      for (int x = 0; x < g.order(); ++x) {
        if (h.contains(x)) continue;
        Subset k = close_with(g, h, x);
        auto [it, inserted] = seen.emplace(key_of(k), k);
        if (inserted) next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& [k, s] : seen) out.push_back(Subgroup{s, s.size()});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.members.mask_less(b.members);
  });
  return out;
}

QuotientView quotient(const Group& g, const Subgroup& h) {
  g.check_universe(h.members);
  if (h.size != h.members.size() || !is_subgroup(g, h.members)) {
    throw ContractError("quotient kernel is not a subgroup");
  }
  const int n = g.order();
  const int q = n / h.size;
  std::vector<std::uint16_t> proj(static_cast<std::size_t>(n), 0xffff);
  std::vector<int> reps;
  reps.reserve(static_cast<std::size_t>(q));
  for (int e = 0; e < n; ++e) {
    if (proj[static_cast<std::size_t>(e)] != 0xffff) continue;
    auto idx = static_cast<std::uint16_t>(reps.size());
    h.members.for_each([&](int m) { proj[static_cast<std::size_t>(g.add(e, m))] = idx; });
    reps.push_back(e);
  }
  std::vector<std::uint16_t> qadd(static_cast<std::size_t>(q) * q);
  std::vector<std::uint16_t> qneg(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      qadd[static_cast<std::size_t>(i) * q + j] = proj[static_cast<std::size_t>(g.add(reps[i], reps[j]))];
    }
    qneg[static_cast<std::size_t>(i)] = proj[static_cast<std::size_t>(g.neg(reps[i]))];
  }
  QuotientView view{Subgroup{h.members, h.size}, Group::from_tables(q, std::move(qadd), std::move(qneg)), std::move(proj)};

  // Projection must be a homomorphism; full check at small order, sampled above.
  auto check_pair = [&](int a, int b) {
    if (view.projection[static_cast<std::size_t>(g.add(a, b))] !=
        view.quotient.add(view.projection[static_cast<std::size_t>(a)],
                          view.projection[static_cast<std::size_t>(b)])) {
      throw TheoremViolationError("quotient projection is not a homomorphism at (" +
                                  std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) check_pair(a, b);
  } else {
    std::uint64_t s = 0xc05e7u;
    for (int i = 0; i < 200000; ++i) {
      s = splitmix64(s);
      check_pair(static_cast<int>(s % n), static_cast<int>((s >> 24) % n));
    }
  }
  return view;
}

Subset project_subset(const QuotientView& q, const Subset& s) {
  if (s.universe() != static_cast<int>(q.projection.size())) {
    throw ContractError("set universe does not match the quotient's parent order");
  }
  Subset out(q.quotient.order());
  s.for_each([&](int e) { out.insert(q.projection[static_cast<std::size_t>(e)]); });
  return out;
}

}  // namespace trioscan
