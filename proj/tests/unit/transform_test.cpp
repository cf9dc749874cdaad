#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "trioscan/error.hpp"
#include "trioscan/group.hpp"
#include "trioscan/setops.hpp"
#include "trioscan/transform.hpp"

using trioscan::CapabilityError;
using trioscan::ContractError;
using trioscan::Group;
using trioscan::make_group;
using trioscan::SetSystem;
using trioscan::StopCertificate;
using trioscan::Subset;
using trioscan::TransformOutcome;

namespace {

SetSystem sys_of(const Group& g, std::vector<std::vector<int>> sets) {
  std::vector<Subset> subs;
  subs.reserve(sets.size());
  for (const auto& s : sets) {
    subs.push_back(Subset::from_indices(g.order(), s));
  }
  return SetSystem(g, std::move(subs));
}

}  // namespace

TEST_CASE("set systems are bounded and grouped") {
  Group z4 = make_group({4});
  SetSystem s = sys_of(z4, {{0, 1}, {2}});
  CHECK(s.count() == 2);
  CHECK(s.sizes() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(SetSystem(z4, {}), ContractError);
  CHECK_THROWS_AS(SetSystem(z4, std::vector<Subset>(9, Subset(4))), CapabilityError);
  CHECK_THROWS_AS(SetSystem(z4, {Subset(5)}), ContractError);
}

TEST_CASE("transform reshuffles multiplicities into nested sets") {
  Group z4 = make_group({4});
  TransformOutcome out = trioscan::tau(sys_of(z4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(out.output.set(0) == Subset::of(4, {0, 1, 2, 3}));
  CHECK(out.output.set(1) == Subset::of(4, {1, 2}));
  CHECK(out.output.set(2).empty());
  CHECK(out.multiplicity == std::vector<int>{1, 2, 2, 1});

  // Nested systems are fixed points.
  SetSystem nested = sys_of(z4, {{0, 1}, {0}});
  CHECK(trioscan::tau(nested).output == nested);

  // Constant systems are fixed points.
  SetSystem constant = sys_of(z4, {{1, 3}, {1, 3}, {1, 3}});
  CHECK(trioscan::tau(constant).output == constant);
}

TEST_CASE("transform agrees with the multiplicity oracle") {
  std::mt19937_64 rng(31);
  for (const auto& orders : std::vector<std::vector<int>>{{6}, {2, 4}, {12}, {100}}) {
    Group g = make_group(orders);
    for (int n = 1; n <= 5; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<Subset> sets;
        for (int i = 0; i < n; ++i) sets.push_back(oracle::random_subset(g, rng, false));
        TransformOutcome out = trioscan::tau(SetSystem(g, sets));
        CHECK(out.output.sets() == oracle::naive_tau(g, sets));

        // Totals preserved, prefixes never shrink.
        std::vector<int> in = SetSystem(g, sets).sizes();
        std::vector<int> got = out.output.sizes();
        int pin = 0, pout = 0;
        for (int k = 0; k < n; ++k) {
          pin += in[static_cast<std::size_t>(k)];
          pout += got[static_cast<std::size_t>(k)];
          CHECK(pout >= pin);
        }
        CHECK(pin == pout);
      }
    }
  }
}

TEST_CASE("equal prefix sums force a nested input") {
  // Exhaustive: pairs over Z6 and triples over Z4, empty sets included.
  Group z6 = make_group({6});
  for (std::uint64_t ma = 0; ma < 64; ++ma) {
    for (std::uint64_t mb = 0; mb < 64; ++mb) {
      std::vector<Subset> sets = {Subset::from_word(6, ma), Subset::from_word(6, mb)};
      SetSystem sys(z6, sets);
      std::vector<int> in = sys.sizes();
      std::vector<int> got = trioscan::tau(sys).output.sizes();
      if (in == got) {
        CHECK(trioscan::is_nested(sys) == (Subset::from_word(6, mb).subset_of(
                                              Subset::from_word(6, ma))));
        CHECK(trioscan::is_nested(sys));
      }
    }
  }
  Group z4 = make_group({4});
  for (std::uint64_t ma = 0; ma < 16; ++ma) {
    for (std::uint64_t mb = 0; mb < 16; ++mb) {
      for (std::uint64_t mc = 0; mc < 16; ++mc) {
        std::vector<Subset> sets = {Subset::from_word(4, ma), Subset::from_word(4, mb),
                                    Subset::from_word(4, mc)};
        SetSystem sys(z4, sets);
        if (sys.sizes() == trioscan::tau(sys).output.sizes()) {
          CHECK(trioscan::is_nested(sys));
        }
      }
    }
  }
}

TEST_CASE("nesting test matches the fixed-point characterization") {
  Group z4 = make_group({4});
  CHECK(trioscan::is_nested(sys_of(z4, {{0, 1}, {0}})));
  CHECK_FALSE(trioscan::is_nested(sys_of(z4, {{0}, {1}})));
  CHECK(trioscan::is_nested(SetSystem(z4, {Subset(4), Subset(4)})));

  for (std::uint64_t ma = 0; ma < 16; ++ma) {
    for (std::uint64_t mb = 0; mb < 16; ++mb) {
      SetSystem sys(z4, {Subset::from_word(4, ma), Subset::from_word(4, mb)});
      CHECK(trioscan::is_nested(sys) == (trioscan::tau(sys).output == sys));
    }
  }
}

TEST_CASE("translation search returns the first improving witness") {
  Group z5 = make_group({5});
  StopCertificate cert = trioscan::find_improving_translation(sys_of(z5, {{0, 1}, {0, 2}}));
  REQUIRE(cert.kind == StopCertificate::Kind::improving_translation);
  // Lexicographically first witness over the full product.
  CHECK(cert.translations == std::vector<int>{0, 0});
  CHECK(cert.transformed[0] == Subset::of(5, {0, 1, 2}));
  CHECK(cert.transformed[1] == Subset::of(5, {0}));

  // The witness translation produces a transform whose sizes strictly
  // majorize the input sizes: total equal, some prefix strictly larger.
  CHECK(cert.transformed[0].size() + cert.transformed[1].size() == 4);
  CHECK(cert.transformed[0].size() > 2);

  // (0, 2) also improves: tau({0,1},{3,0}) = ({0,1,3},{0}).
  TransformOutcome alt = trioscan::tau(
      SetSystem(z5, {Subset::of(5, {0, 1}),
                     trioscan::translate(z5, Subset::of(5, {0, 2}), z5.neg(2))}));
  CHECK(alt.output.set(0) == Subset::of(5, {0, 1, 3}));
  CHECK(alt.output.set(1) == Subset::of(5, {0}));
}

TEST_CASE("translation search falls back to the coset certificate") {
  Group z4 = make_group({4});
  StopCertificate cert = trioscan::find_improving_translation(sys_of(z4, {{0, 2}, {1}}));
  CHECK(cert.kind == StopCertificate::Kind::nested_cosets);

  // Identical singletons cannot strictly majorize themselves.
  StopCertificate single = trioscan::find_improving_translation(sys_of(z4, {{3}, {3}}));
  CHECK(single.kind == StopCertificate::Kind::nested_cosets);

  CHECK_THROWS_AS(trioscan::find_improving_translation(sys_of(z4, {{0, 1}})), ContractError);
  CHECK_THROWS_AS(
      trioscan::find_improving_translation(SetSystem(z4, {Subset(4), Subset::of(4, {0})})),
      ContractError);
}

TEST_CASE("witnesses may need a non-zero first translation") {
  // ({0,1,2},{0,2},{0}) improves only at a_1 = 1: restricting the search to
  // a pinned first component would miss it and wrongly fail the dichotomy.
  Group z4 = make_group({4});
  StopCertificate cert =
      trioscan::find_improving_translation(sys_of(z4, {{0, 1, 2}, {0, 2}, {0}}));
  REQUIRE(cert.kind == StopCertificate::Kind::improving_translation);
  CHECK(cert.translations == std::vector<int>{1, 0, 0});
  CHECK(SetSystem(z4, cert.transformed).sizes() == std::vector<int>{4, 1, 1});
}

TEST_CASE("dichotomy holds exhaustively on small systems") {
  Group z6 = make_group({6});
  for (std::uint64_t ma = 1; ma < 64; ++ma) {
    for (std::uint64_t mb = 1; mb < 64; ++mb) {
      SetSystem sys(z6, {Subset::from_word(6, ma), Subset::from_word(6, mb)});
      CHECK_NOTHROW((void)trioscan::find_improving_translation(sys));
    }
  }
  Group z4 = make_group({4});
  for (std::uint64_t ma = 1; ma < 16; ++ma) {
    for (std::uint64_t mb = 1; mb < 16; ++mb) {
      for (std::uint64_t mc = 1; mc < 16; ++mc) {
        SetSystem sys(z4, {Subset::from_word(4, ma), Subset::from_word(4, mb),
                           Subset::from_word(4, mc)});
        CHECK_NOTHROW((void)trioscan::find_improving_translation(sys));
      }
    }
  }
}

TEST_CASE("joint shifts leave all transform sizes unchanged") {
  std::mt19937_64 rng(41);
  Group g = make_group({2, 2, 3});
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<Subset> sets;
    for (int i = 0; i < n; ++i) sets.push_back(oracle::random_subset(g, rng));
    int t = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
    std::vector<Subset> shifted;
    for (const Subset& s : sets) shifted.push_back(trioscan::translate(g, s, t));
    CHECK(trioscan::tau(SetSystem(g, sets)).output.sizes() ==
          trioscan::tau(SetSystem(g, shifted)).output.sizes());
  }
}

TEST_CASE("transformed sumsets stay inside the input sumset") {
  Group z4 = make_group({4});
  CHECK(trioscan::sumset_inclusion_check(sys_of(z4, {{0, 1}, {1, 2}, {2, 3}})));

  Group z5 = make_group({5});
  SetSystem pair = sys_of(z5, {{0, 1}, {0, 2}});
  CHECK(trioscan::sumset_inclusion_check(pair));
  TransformOutcome out = trioscan::tau(pair);
  CHECK(trioscan::sumset(z5, out.output.set(0), out.output.set(1)) ==
        Subset::of(5, {0, 1, 2}));
  CHECK(trioscan::sumset(z5, Subset::of(5, {0, 1}), Subset::of(5, {0, 2})) ==
        Subset::of(5, {0, 1, 2, 3}));

  std::mt19937_64 rng(43);
  for (const auto& orders : std::vector<std::vector<int>>{{9}, {2, 4}, {16}}) {
    Group g = make_group(orders);
    for (int rep = 0; rep < 50; ++rep) {
      int n = 2 + static_cast<int>(rng() % 3);
      std::vector<Subset> sets;
      for (int i = 0; i < n; ++i) sets.push_back(oracle::random_subset(g, rng));
      CHECK(trioscan::sumset_inclusion_check(SetSystem(g, sets)));
    }
  }
}

TEST_CASE("representation counts and their domination") {
  Group z4 = make_group({4});
  CHECK(trioscan::representation_count(sys_of(z4, {{0, 1}, {0, 1}}), 1) == 2);
  CHECK(trioscan::representation_count(SetSystem(z4, {Subset::of(4, {0}), Subset(4)}), 1) == 0);
  CHECK(trioscan::representation_count(sys_of(z4, {{0}, {1}}), 1) == 1);
  TransformOutcome out = trioscan::tau(sys_of(z4, {{0}, {1}}));
  CHECK(trioscan::representation_count(out.output, 1) == 0);
  CHECK(trioscan::rep_domination(sys_of(z4, {{0}, {1}}), 1));

  std::mt19937_64 rng(47);
  for (const auto& orders : std::vector<std::vector<int>>{{8}, {2, 4}, {3, 3}}) {
    Group g = make_group(orders);
    for (int rep = 0; rep < 40; ++rep) {
      int n = 2 + static_cast<int>(rng() % 2);
      std::vector<Subset> sets;
      for (int i = 0; i < n; ++i) sets.push_back(oracle::random_subset(g, rng, false));
      int x = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
      CHECK(trioscan::representation_count(SetSystem(g, sets), x) ==
            oracle::naive_rep_count(g, sets, x));
      CHECK(trioscan::rep_domination(SetSystem(g, sets), x));
    }
  }
}
