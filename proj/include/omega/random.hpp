#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/automata.hpp"

namespace omega {

// splitmix64: tiny, splittable, pinned so generated benchmark instances are
// reproducible across platforms.
class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t x = (s_ += 0x9E3779B97F4A7C15ull);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Uniform-enough value in [0, m): high word of the 128-bit product.
  std::uint64_t bounded(std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * m) >> 64);
  }

 private:
  std::uint64_t s_;
};

inline std::uint32_t round_count(double x) {
  return static_cast<std::uint32_t>(std::floor(x + 0.5));
}

// Random NBW model over {0, 1}: per letter, round(r * n) distinct transition
// pairs; round(f * n) distinct accepting states; initial state 0.
struct random_nbw_params {
  std::uint32_t n = 1;
  double r = 1.0;  // transition density per letter
  double f = 0.5;  // accepting density
  std::uint64_t seed = 0;
};

inline std::vector<std::string> validate(const random_nbw_params& p) {
  std::vector<std::string> out;
  if (p.n == 0) out.push_back("n must be at least 1");
  if (!(p.r >= 0))
    out.push_back("transition density must be nonnegative");
  else if (p.n > 0 &&
           round_count(p.r * p.n) > static_cast<std::uint64_t>(p.n) * p.n)
    out.push_back("transition density exceeds n^2 pairs");
  if (!(p.f >= 0 && p.f <= 1))
    out.push_back("accepting density must be within [0, 1]");
  return out;
}

// Draw order is pinned: letter 0 pairs, letter 1 pairs, accepting states;
// each draw rejects repeats until distinct.
inline nbw random_nbw(const random_nbw_params& p) {
  if (auto errs = validate(p); !errs.empty())
    throw std::invalid_argument("random_nbw: " + errs.front());
  const std::uint32_t k = round_count(p.r * p.n);
  const std::uint32_t m = round_count(p.f * p.n);
  splitmix64 g(p.seed);
  nbw a(p.n, {"0", "1"});
  a.initial = 0;
  const std::uint64_t pairs = static_cast<std::uint64_t>(p.n) * p.n;
  for (letter_id l = 0; l < 2; ++l) {
    std::vector<char> seen(pairs, 0);
    for (std::uint32_t got = 0; got < k;) {
      std::uint64_t v = g.bounded(pairs);
      if (seen[v]) continue;
      seen[v] = 1;
      a.succ(static_cast<state_id>(v / p.n), l)
          .push_back(static_cast<state_id>(v % p.n));
      ++got;
    }
  }
  std::vector<char> seen(p.n, 0);
  for (std::uint32_t got = 0; got < m;) {
    std::uint64_t v = g.bounded(p.n);
    if (seen[v]) continue;
    seen[v] = 1;
    a.accepting.push_back(static_cast<state_id>(v));
    ++got;
  }
  return a;
}

// Random ABW over {0, 1}: per (state, letter), a 1-in-10 chance each of the
// constants, otherwise a disjunction of at most d conjunctions of at most c
// states. d = c = 1 degenerates to an NBW-shaped automaton.
struct random_abw_params {
  std::uint32_t n = 1;
  std::uint32_t d = 2;  // max disjuncts
  std::uint32_t c = 2;  // max conjuncts
  double f = 0.5;       // accepting density
  std::uint64_t seed = 0;
};

inline abw random_abw(const random_abw_params& p) {
  if (p.n == 0) throw std::invalid_argument("random_abw: n must be >= 1");
  if (p.d == 0 || p.c == 0)
    throw std::invalid_argument("random_abw: fan-out must be >= 1");
  if (!(p.f >= 0 && p.f <= 1))
    throw std::invalid_argument("random_abw: accepting density out of range");
  splitmix64 g(p.seed);
  abw a(p.n, {"0", "1"});
  a.initial = 0;
  for (state_id s = 0; s < p.n; ++s)
    for (letter_id l = 0; l < 2; ++l) {
      std::uint64_t roll = g.bounded(10);
      if (roll == 0) {
        a.succ(s, l) = formula::tt();
        continue;
      }
      if (roll == 1) continue;  // false
      std::vector<formula> ors;
      const std::uint64_t nd = 1 + g.bounded(p.d);
      for (std::uint64_t i = 0; i < nd; ++i) {
        std::vector<formula> ands;
        const std::uint64_t nc = 1 + g.bounded(p.c);
        for (std::uint64_t j = 0; j < nc; ++j)
          ands.push_back(
              formula::state(static_cast<state_id>(g.bounded(p.n))));
        ors.push_back(formula::conj(std::move(ands)));
      }
      a.succ(s, l) = formula::disj(std::move(ors));
    }
  const std::uint32_t m = round_count(p.f * p.n);
  std::vector<char> seen(p.n, 0);
  for (std::uint32_t got = 0; got < m;) {
    std::uint64_t v = g.bounded(p.n);
    if (seen[v]) continue;
    seen[v] = 1;
    a.accepting.push_back(static_cast<state_id>(v));
    ++got;
  }
  return a;
}

}  // namespace omega
