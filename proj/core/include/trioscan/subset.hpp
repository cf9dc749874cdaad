#pragma once

#include <absl/container/inlined_vector.h>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "trioscan/error.hpp"

namespace trioscan {

/// Subset of a fixed universe [0, n), one bit per element, 64 elements per
/// word.  Value type; the universe size is part of the value, and binary
/// operations require both operands to share it.  Unused tail bits of the
/// last word are always zero.
class Subset {
 public:
  using Words = absl::InlinedVector<std::uint64_t, 2>;

  Subset() = default;
  explicit Subset(int universe) : universe_(check_universe(universe)) {
    words_.resize(word_count_for(universe_), 0);
  }

  static Subset of(int universe, std::initializer_list<int> elems) {
    Subset s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  static Subset from_indices(int universe, std::span<const int> elems) {
    Subset s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  /// Takes ownership of raw words; tail bits beyond the universe are cleared.
  static Subset from_words(int universe, Words words) {
    Subset s;
    s.universe_ = check_universe(universe);
    words.resize(word_count_for(universe), 0);
    s.words_ = std::move(words);
    s.mask_tail();
    s.size_ = s.recount();
    return s;
  }

  /// Single-word convenience for universes of at most 64 elements.
  static Subset from_word(int universe, std::uint64_t word) {
    if (universe > 64) throw ContractError("from_word requires universe <= 64");
    return from_words(universe, Words{word});
  }

  static Subset empty_set(int universe) { return Subset(universe); }

  static Subset full_set(int universe) {
    Subset s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.mask_tail();
    s.size_ = universe;
    return s;
  }

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool is_full() const { return size_ == universe_; }

  bool contains(int e) const {
    return (words_[static_cast<unsigned>(e) >> 6] >> (e & 63)) & 1u;
  }

  void insert(int e) {
    check_element(e);
    std::uint64_t& w = words_[static_cast<unsigned>(e) >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (!(w & bit)) {
      w |= bit;
      ++size_;
    }
  }

  void erase(int e) {
    check_element(e);
    std::uint64_t& w = words_[static_cast<unsigned>(e) >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) {
      w &= ~bit;
      --size_;
    }
  }

  /// Smallest element, or -1 when empty.
  int min_element() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]);
    }
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      int base = static_cast<int>(i) * 64;
      while (w) {
        fn(base + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  int word_count() const { return static_cast<int>(words_.size()); }
  std::uint64_t word(int i) const { return words_[static_cast<std::size_t>(i)]; }

  Subset operator|(const Subset& o) const {
    Subset r = binary_shell(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    r.size_ = r.recount();
    return r;
  }

  Subset operator&(const Subset& o) const {
    Subset r = binary_shell(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    r.size_ = r.recount();
    return r;
  }

  /// Set difference: elements of *this not in o.
  Subset minus(const Subset& o) const {
    Subset r = binary_shell(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    r.size_ = r.recount();
    return r;
  }

  Subset complement() const {
    Subset r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.mask_tail();
    r.size_ = universe_ - size_;
    return r;
  }

  bool subset_of(const Subset& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const Subset& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool operator==(const Subset& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  /// Mask compared as a little-endian multiword integer; total order used for
  /// canonical listings.
  bool mask_less(const Subset& o) const {
    check_same_universe(o);
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    }
    return false;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(universe_);
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  void check_same_universe(const Subset& o) const {
    if (universe_ != o.universe_) {
      throw ContractError("subset universes differ: " + std::to_string(universe_) +
                          " vs " + std::to_string(o.universe_));
    }
  }

 private:
  static int check_universe(int universe) {
    if (universe < 0) throw ContractError("negative universe");
    return universe;
  }

  void check_element(int e) const {
    if (e < 0 || e >= universe_) {
      throw ContractError("element " + std::to_string(e) + " outside universe [0, " +
                          std::to_string(universe_) + ")");
    }
  }

  static std::size_t word_count_for(int universe) {
    return static_cast<std::size_t>((universe + 63) / 64);
  }

  Subset binary_shell(const Subset& o) const {
    check_same_universe(o);
    Subset r;
    r.universe_ = universe_;
    r.words_.resize(words_.size(), 0);
    return r;
  }

  void mask_tail() {
    int tail = universe_ & 63;
    if (tail != 0 && !words_.empty()) {
      words_.back() &= (~std::uint64_t{0}) >> (64 - tail);
    }
  }

  int recount() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  int universe_ = 0;
  int size_ = 0;
  Words words_;
};

}  // namespace trioscan
