#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "trioscan/error.hpp"
#include "trioscan/subset.hpp"

namespace trioscan {

/// Largest supported group order.  The full addition table (the per-element
/// translation permutations) is precomputed at construction, so order n costs
/// n^2 table entries.
inline constexpr int kMaxGroupOrder = 4096;

/// Finite abelian group on element indices [0, n).  Cheap-to-copy handle over
/// immutable shared data.  Two realizations:
///  - cyclic product Z_{n1} x ... x Z_{nk}, elements encoded little-endian
///    mixed-radix: index = c1 + n1*(c2 + n2*(...)), identity at index 0;
///  - explicit tables (used for quotient groups), identity at index 0.
class Group {
 public:
  Group() = default;

  /// Cyclic product realization.  Orders must be positive; their product is
  /// the group order and must not exceed kMaxGroupOrder.
  static Group cyclic_product(const std::vector<int>& orders);

  /// Table realization from a row-major n x n addition table and a negation
  /// table.  The tables are checked: identity 0, commutativity, negation,
  /// associativity (full check for n <= 256, deterministic sample above).
  static Group from_tables(int n, std::vector<std::uint16_t> add_table,
                           std::vector<std::uint16_t> neg_table);

  bool valid() const { return d_ != nullptr; }
  int order() const { return d_->n; }

  int add(int a, int b) const { return d_->add[static_cast<std::size_t>(a) * d_->n + b]; }
  int neg(int a) const { return d_->neg[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  /// Row of the addition table: add_row(x)[y] = x + y.  Translation of a set
  /// by x is exactly this permutation applied to the mask.
  std::span<const std::uint16_t> add_row(int x) const {
    return {d_->add.data() + static_cast<std::size_t>(x) * d_->n,
            static_cast<std::size_t>(d_->n)};
  }

  /// True for a single-factor cyclic realization; translation on masks of at
  /// most one word is then a bit rotation.
  bool is_cyclic() const { return d_->factors.size() == 1; }

  /// Cyclic factor orders; empty for the table realization.
  const std::vector<int>& factors() const { return d_->factors; }

  /// Mixed-radix decode (cyclic product realization only).
  std::vector<int> coords(int e) const;
  /// Mixed-radix encode; inverse of coords.
  int index_of(const std::vector<int>& coords) const;

  /// "n1xn2x..." for cyclic products (a single factor prints bare), or
  /// "table(n)" for the table realization.
  std::string literal() const;

  /// Shared-data identity, not structural equality.
  bool same_as(const Group& o) const { return d_ == o.d_; }

  /// Contract check used by set operations.
  void check_universe(const Subset& s) const {
    if (s.universe() != d_->n) {
      throw ContractError("set universe " + std::to_string(s.universe()) +
                          " does not match group order " + std::to_string(d_->n));
    }
  }

 private:
  struct Data {
    int n = 0;
    std::vector<int> factors;  // empty for table realization
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> neg;
  };

  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// Builds the cyclic product group; bare order n means the cyclic group Z_n.
Group make_group(const std::vector<int>& orders);

struct Subgroup {
  Subset members;
  int size = 0;
};

/// Membership-based subgroup test: 0 present, closed under addition.
/// (Closure under negation follows in a finite group.)
bool is_subgroup(const Group& g, const Subset& members);

/// All subgroups of g, sorted by (size, mask).  Enumerated by closing known
/// subgroups with one extra generator until a fixed point; every subgroup is
/// reached because any chain of generators passes through intermediate
/// subgroups.  Guarded by max_order.
std::vector<Subgroup> list_subgroups(const Group& g, int max_order = 64);

struct QuotientView {
  Subgroup kernel;
  Group quotient;
  /// projection[e] is the quotient index of the coset e + kernel; projection
  /// of 0 is 0.
  std::vector<std::uint16_t> projection;
};

/// Quotient g / h.  h must be a subgroup of g.  The quotient is realized as a
/// table group on coset indices in order of first appearance, and the
/// projection is checked to be a homomorphism (full check for order <= 256,
/// deterministic sample above).
QuotientView quotient(const Group& g, const Subgroup& h);

/// Projects a subset through a quotient view: image = { projection[e] : e in s }.
Subset project_subset(const QuotientView& q, const Subset& s);

/// Group-law audit: identity at 0, commutativity, negation, associativity.
/// Associativity is checked in full when n <= exhaustive_limit, otherwise on
/// a deterministic sample of triples.  Throws ContractError naming the first
/// failing tuple.
void verify_group_laws(const Group& g, int exhaustive_limit = 256);

}  // namespace trioscan
