#pragma once

// Shared test helpers: small builders, pinned instance schedules, and
// reference algorithms kept deliberately independent of the library code
// they are used to check.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "omega/omega.hpp"

namespace support {

using omega::letter_id;
using omega::state_id;

struct edge {
  state_id from;
  letter_id letter;
  state_id to;
};

inline omega::nbw make_nbw(std::uint32_t n, std::vector<std::string> alphabet,
                           state_id initial,
                           std::vector<state_id> accepting,
                           const std::vector<edge>& edges) {
  omega::nbw a(n, std::move(alphabet));
  a.initial = initial;
  a.accepting = std::move(accepting);
  for (auto e : edges) a.add_edge(e.from, e.letter, e.to);
  return a;
}

inline omega::state_set bits(std::uint32_t width,
                             std::initializer_list<state_id> xs) {
  omega::state_set s(width);
  for (auto x : xs) s.set(x);
  return s;
}

// The 1-state automaton accepting every word over {0, 1}.
inline omega::nbw total_universal() {
  return make_nbw(1, {"0", "1"}, 0, {0}, {{0, 0, 0}, {0, 1, 0}});
}

// Instances whose explicit complement stays tiny: n <= 3 with at least two
// accepting states across r in {1, 2, 3} (capped by the n^2 distinct-pair
// limit), plus fully-accepting automata up to n = 5. 15 combos x 20 seeds.
inline std::vector<omega::random_nbw_params> envelope_params() {
  struct combo {
    std::uint32_t n, m;
    double r;
  };
  std::vector<combo> cs;
  for (double r : {1.0, 2.0}) cs.push_back({2, 2, r});
  for (double r : {1.0, 2.0, 3.0}) cs.push_back({3, 2, r});
  for (double r : {1.0, 2.0, 3.0}) cs.push_back({3, 3, r});
  cs.push_back({1, 1, 1.0});
  for (double r : {1.0, 2.0, 3.0}) cs.push_back({4, 4, r});
  for (double r : {1.0, 2.0, 3.0}) cs.push_back({5, 5, r});
  std::vector<omega::random_nbw_params> out;
  for (auto c : cs)
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      out.push_back({c.n, c.r, static_cast<double>(c.m) / c.n, seed});
  return out;
}

// Emptiness reference by plain graph search: the language is nonempty iff
// some accepting state reachable from the initial one lies on a cycle.
inline bool empty_reference(const omega::nbw& a) {
  std::vector<std::vector<state_id>> adj(a.n);
  for (state_id s = 0; s < a.n; ++s)
    for (letter_id l = 0; l < a.letters(); ++l)
      for (auto t : a.succ(s, l)) adj[s].push_back(t);

  auto reach_from = [&](const std::vector<state_id>& roots) {
    std::vector<char> seen(a.n, 0);
    std::vector<state_id> stack = roots;
    for (auto r : roots) seen[r] = 1;
    while (!stack.empty()) {
      state_id s = stack.back();
      stack.pop_back();
      for (auto t : adj[s])
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
    }
    return seen;
  };

  auto reachable = reach_from({a.initial});
  for (auto q : a.accepting) {
    if (!reachable[q]) continue;
    auto from_succs = reach_from(adj[q]);
    if (from_succs[q]) return false;  // cycle through q
  }
  return true;
}

// Lasso membership reference by relation composition, independent of the
// (state, phase)-graph search in the oracle. R holds one-v-block steps, A
// the same steps that pass through an accepting state.
inline bool member_reference(const omega::nbw& a, const omega::oracle::lasso& w) {
  const std::uint32_t n = a.n;
  using mat = std::vector<std::vector<char>>;
  auto zero = [&] { return mat(n, std::vector<char>(n, 0)); };
  omega::state_set alpha = a.accepting_mask();

  auto step = [&](letter_id l) {
    mat r = zero(), acc = zero();
    for (state_id s = 0; s < n; ++s)
      for (auto t : a.succ(s, l)) {
        r[s][t] = 1;
        if (alpha.test(t)) acc[s][t] = 1;
      }
    return std::pair{r, acc};
  };
  auto compose = [&](const std::pair<mat, mat>& x,
                     const std::pair<mat, mat>& y) {
    mat r = zero(), acc = zero();
    for (state_id i = 0; i < n; ++i)
      for (state_id j = 0; j < n; ++j) {
        if (!x.first[i][j]) continue;
        for (state_id k = 0; k < n; ++k) {
          if (y.first[j][k]) {
            r[i][k] = 1;
            if (x.second[i][j] || y.second[j][k]) acc[i][k] = 1;
          }
        }
      }
    return std::pair{r, acc};
  };

  auto block = step(w.v[0]);
  for (std::size_t i = 1; i < w.v.size(); ++i)
    block = compose(block, step(w.v[i]));

  std::vector<char> cur(n, 0);
  cur[a.initial] = 1;
  for (auto l : w.u) {
    std::vector<char> nxt(n, 0);
    for (state_id s = 0; s < n; ++s)
      if (cur[s])
        for (auto t : a.succ(s, l)) nxt[t] = 1;
    cur = std::move(nxt);
  }

  // Reflexive-transitive closure of the block relation.
  mat star = block.first;
  for (state_id i = 0; i < n; ++i) star[i][i] = 1;
  for (state_id k = 0; k < n; ++k)
    for (state_id i = 0; i < n; ++i)
      if (star[i][k])
        for (state_id j = 0; j < n; ++j)
          if (star[k][j]) star[i][j] = 1;

  for (state_id s = 0; s < n; ++s) {
    if (!cur[s]) continue;
    for (state_id x = 0; x < n; ++x) {
      if (!star[s][x]) continue;
      for (state_id y = 0; y < n; ++y)
        if (block.second[x][y] && star[y][x]) return true;
    }
  }
  return false;
}

inline omega::oracle::lasso random_lasso(omega::splitmix64& g,
                                         std::uint32_t letters) {
  omega::oracle::lasso w;
  const std::uint64_t lu = g.bounded(5);
  const std::uint64_t lv = 1 + g.bounded(4);
  for (std::uint64_t i = 0; i < lu; ++i)
    w.u.push_back(static_cast<letter_id>(g.bounded(letters)));
  for (std::uint64_t i = 0; i < lv; ++i)
    w.v.push_back(static_cast<letter_id>(g.bounded(letters)));
  return w;
}

// Ranked-set atoms and the pair order spelled out set-by-set: every atom of
// the left set must be matched at its location by a lower-or-equal rank on
// the right, and the o-parts must agree on emptiness.
using atom = std::pair<state_id, std::uint32_t>;

inline bool atoms_leq(const std::vector<atom>& l, const std::vector<atom>& r) {
  for (auto [s, n] : l) {
    bool matched = false;
    for (auto [s2, n2] : r)
      if (s2 == s && n2 <= n) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

inline bool univ_leq_reference(const std::vector<atom>& s,
                               const std::vector<atom>& o,
                               const std::vector<atom>& s2,
                               const std::vector<atom>& o2) {
  return atoms_leq(s, s2) && atoms_leq(o, o2) && (o.empty() == o2.empty());
}

// Valid atoms of the rank domain of a: ranks up to k, odd ranks dropped on
// accepting states. Matches the enumeration order of the explicit oracle.
inline std::vector<atom> rank_atoms(const omega::nbw& a, std::uint32_t k) {
  omega::state_set alpha = a.accepting_mask();
  std::vector<atom> out;
  for (state_id l = 0; l < a.n; ++l)
    for (std::uint32_t r = 0; r <= k; ++r)
      if (!(alpha.test(l) && (r & 1))) out.emplace_back(l, r);
  return out;
}

struct ranked_sets {
  std::vector<atom> s, o;
};

// Random pair of atom sets with o inside s; the characteristic pair of such
// sets is valid by construction.
inline ranked_sets random_ranked_sets(const std::vector<atom>& atoms,
                                      omega::splitmix64& g) {
  ranked_sets out;
  for (const auto& at : atoms) {
    if (g.bounded(2)) continue;
    out.s.push_back(at);
    if (g.bounded(2) == 0) out.o.push_back(at);
  }
  return out;
}

template <class R>
omega::rank_pair<R> char_pair(const omega::nbw& a, std::uint32_t k,
                              const ranked_sets& rs) {
  return omega::rank_pair<R>(omega::rank_characteristic<R>(a, k, rs.s),
                             omega::rank_characteristic<R>(a, k, rs.o),
                             static_cast<R>(k + 1));
}

}  // namespace support
