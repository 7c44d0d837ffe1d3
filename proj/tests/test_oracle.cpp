#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "omega/omega.hpp"
#include "support.hpp"

using namespace omega;

namespace {

abw one_state_loop() {
  abw a(1, {"0"});
  a.succ(0, 0) = formula::state(0);
  a.accepting = {0};
  return a;
}

// Accepts exactly 0^omega.
nbw zeros_only() {
  return support::make_nbw(2, {"0", "1"}, 0, {0}, {{0, 0, 0}, {1, 0, 1}});
}

}  // namespace

TEST_CASE("rank_complement fans each target over descending ranks") {
  nbw a = support::make_nbw(2, {"0"}, 0, {1}, {{0, 0, 1}, {1, 0, 0}});
  const std::uint32_t k = rank_bound(a);
  REQUIRE(k == 2);

  abw b = oracle::rank_complement(a, k);
  REQUIRE(b.n == 6);  // (state, rank) with rank in [0, 2]
  CHECK(b.initial == 2);
  CHECK(b.accepting == std::vector<state_id>({1, 4}));

  // From (0, 2) the sole successor 1 may take any rank 2, 1, 0.
  CHECK(b.succ(2, 0) == formula::disj({formula::state(5), formula::state(4),
                                       formula::state(3)}));
  // From (0, 1) ranks do not increase.
  CHECK(b.succ(1, 0) == formula::disj({formula::state(4),
                                       formula::state(3)}));
  // (1, 1) is accepting-odd and dead.
  CHECK(b.succ(4, 0) == formula::ff());
  // (1, 0) pins the successor to rank 0.
  CHECK(b.succ(3, 0) == formula::state(0));
}

TEST_CASE("rank_complement turns missing transitions into true") {
  nbw a = support::make_nbw(2, {"0"}, 0, {1}, {{0, 0, 1}});
  abw b = oracle::rank_complement(a, 2);
  CHECK(b.succ(3, 0) == formula::tt());  // (1, 0)
  CHECK(b.succ(5, 0) == formula::tt());  // (1, 2)
  CHECK(b.succ(4, 0) == formula::ff());  // (1, 1) stays dead
}

TEST_CASE("dealternate of the one-state loop") {
  auto sp = oracle::dealternate(one_state_loop());
  REQUIRE(sp.states.size() == 1);
  CHECK(sp.states[0] == std::pair<std::uint64_t, std::uint64_t>(1, 0));
  CHECK(sp.aut.accepting == std::vector<state_id>({0}));
  CHECK(sp.aut.succ(0, 0) == std::vector<state_id>({0}));
  CHECK_FALSE(oracle::classical_empty(sp.aut));
}

TEST_CASE("dealternate tracks starved branches") {
  // One branch can never revisit accepting, so the language is empty.
  abw forked(3, {"0"});
  forked.succ(0, 0) = formula::conj({formula::state(1), formula::state(2)});
  forked.succ(1, 0) = formula::state(1);
  forked.succ(2, 0) = formula::state(2);
  forked.accepting = {0, 1};
  CHECK(oracle::classical_empty(oracle::dealternate(forked).aut));
  forked.accepting = {0, 1, 2};
  CHECK_FALSE(oracle::classical_empty(oracle::dealternate(forked).aut));
}

TEST_CASE("explicit_complement of the universal one-state loop") {
  nbw a = support::total_universal();
  auto rx = oracle::explicit_complement(a, 0);
  REQUIRE(rx.atoms ==
          std::vector<std::pair<state_id, std::uint32_t>>({{0, 0}}));
  REQUIRE(rx.states.size() == 3);  // {}, {(0,0)}, and the owing variant
  CHECK(rx.states[rx.aut.initial] ==
        std::pair<std::uint64_t, std::uint64_t>(1, 0));
  CHECK(oracle::classical_empty(rx.aut));
  CHECK(oracle::universal(a));
}

TEST_CASE("explicit_complement catches the rejected words") {
  nbw a = zeros_only();
  auto rx = oracle::explicit_complement(a, rank_bound(a));
  CHECK_FALSE(oracle::classical_empty(rx.aut));
  CHECK_FALSE(oracle::universal(a));

  splitmix64 g(11);
  for (int i = 0; i < 30; ++i) {
    auto w = support::random_lasso(g, a.letters());
    CHECK(oracle::member_lasso(a, w) != oracle::member_lasso(rx.aut, w));
  }
}

TEST_CASE("classical_empty matches the reference reachability check") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    nbw a = random_nbw({2 + seed % 7, 0.8 + 0.2 * (seed % 5), 0.4, seed});
    CAPTURE(seed);
    CHECK(oracle::classical_empty(a) == support::empty_reference(a));
  }
}

TEST_CASE("member_lasso explicit shapes") {
  nbw u = support::total_universal();
  nbw z = zeros_only();
  using oracle::lasso;

  CHECK(oracle::member_lasso(u, lasso{{}, {0}}));
  CHECK(oracle::member_lasso(u, lasso{{1, 0}, {1, 1, 0}}));
  CHECK(oracle::member_lasso(z, lasso{{}, {0}}));
  CHECK(oracle::member_lasso(z, lasso{{0, 0}, {0}}));
  CHECK_FALSE(oracle::member_lasso(z, lasso{{1}, {0}}));
  CHECK_FALSE(oracle::member_lasso(z, lasso{{}, {0, 1}}));

  nbw mute = u;
  mute.accepting = {};
  CHECK_FALSE(oracle::member_lasso(mute, lasso{{}, {0}}));

  CHECK_THROWS_AS(oracle::member_lasso(u, lasso{{0}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::member_lasso(u, lasso{{7}, {0}}),
                  std::invalid_argument);
}

TEST_CASE("member_lasso agrees with the relation reference") {
  splitmix64 g(29);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    nbw a = random_nbw({2 + seed % 7, 1.5, 0.4, seed * 3 + 2});
    for (int i = 0; i < 10; ++i) {
      auto w = support::random_lasso(g, a.letters());
      CAPTURE(seed, i);
      CHECK(oracle::member_lasso(a, w) == support::member_reference(a, w));
    }
  }
}

TEST_CASE("rank_complement languages grow with the bound") {
  const random_nbw_params grid[] = {
      {2, 1.0, 0.5, 3}, {2, 1.5, 0.5, 4}, {2, 2.0, 1.0, 5},
      {3, 1.5, 1.0, 6}, {3, 3.0, 1.0, 7},
  };
  splitmix64 g(83);
  for (const auto& params : grid) {
    nbw a = random_nbw(params);
    const std::uint32_t k = rank_bound(a);
    std::vector<nbw> comp;
    for (std::uint32_t kp = 0; kp <= k; kp += 2)
      comp.push_back(oracle::dealternate(oracle::rank_complement(a, kp)).aut);

    for (int i = 0; i < 12; ++i) {
      auto w = support::random_lasso(g, a.letters());
      bool in_a = oracle::member_lasso(a, w);
      bool prev = false;
      for (const auto& c : comp) {
        bool cur = oracle::member_lasso(c, w);
        CHECK((!prev || cur));  // monotone in the bound
        if (cur) CHECK_FALSE(in_a);  // every bound stays sound
        prev = cur;
      }
      CHECK((comp.empty() || prev == !in_a));  // exact at the full bound
    }
  }
}

TEST_CASE("both complement constructions agree") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    random_nbw_params p{2, 1.0 + 0.5 * (seed % 3), seed % 2 ? 0.5 : 1.0,
                        seed};
    nbw a = random_nbw(p);
    const std::uint32_t k = rank_bound(a);
    nbw c1 = oracle::dealternate(oracle::rank_complement(a, k)).aut;
    nbw c2 = oracle::explicit_complement(a, k).aut;
    CHECK(oracle::classical_empty(c1) == oracle::classical_empty(c2));

    splitmix64 g(seed + 41);
    for (int i = 0; i < 10; ++i) {
      auto w = support::random_lasso(g, a.letters());
      CHECK(oracle::member_lasso(c1, w) == oracle::member_lasso(c2, w));
    }
  }
}

TEST_CASE("caps guard the explicit constructions") {
  CHECK_THROWS_AS(oracle::dealternate(one_state_loop(), 0),
                  oracle::cap_error);
  // 13 atoms at n = 3 with one accepting state: past the default cap.
  nbw wide = random_nbw({3, 2.0, 0.34, 1});
  CHECK_THROWS_AS(oracle::explicit_complement(wide, rank_bound(wide)),
                  oracle::cap_error);
  CHECK_THROWS_AS(oracle::explicit_complement(support::total_universal(), 1),
                  std::invalid_argument);
}

TEST_CASE("the oracle cap reads the environment") {
  unsetenv("ANTICHAIN_ORACLE_CAP");
  CHECK(oracle::cap_from_env() == oracle::default_cap);
  setenv("ANTICHAIN_ORACLE_CAP", "12345", 1);
  CHECK(oracle::cap_from_env() == 12345);
  setenv("ANTICHAIN_ORACLE_CAP", "junk", 1);
  CHECK(oracle::cap_from_env() == oracle::default_cap);
  setenv("ANTICHAIN_ORACLE_CAP", "0", 1);
  CHECK(oracle::cap_from_env() == oracle::default_cap);
  unsetenv("ANTICHAIN_ORACLE_CAP");
}
