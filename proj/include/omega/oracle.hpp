#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omega/automata.hpp"
#include "omega/rank.hpp"

// Ground-truth oracles: explicit constructions evaluated with plain set
// fixpoints and graph searches. Deliberately independent of the antichain
// solvers they are used to check; exponential, guarded by state-space caps.
namespace omega::oracle {

inline constexpr std::size_t default_cap = std::size_t{1} << 20;

struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ANTICHAIN_ORACLE_CAP overrides the default state-space cap.
inline std::size_t cap_from_env() {
  if (const char* v = std::getenv("ANTICHAIN_ORACLE_CAP")) {
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && x > 0) return static_cast<std::size_t>(x);
  }
  return default_cap;
}

// Rank-based complement of an NBW as an alternating automaton: states are
// (state, rank) with rank in [0, k]; a transition guesses weakly decreasing
// ranks for all successors, accepting states cut odd ranks.
inline abw rank_complement(const nbw& a, std::uint32_t k) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("rank_complement: " + errs.front());
  state_set alpha = a.accepting_mask();
  const std::uint32_t w = k + 1;
  abw b(a.n * w, a.alphabet);
  b.initial = a.initial * w + k;
  for (state_id l = 0; l < a.n; ++l)
    for (std::uint32_t i = 1; i <= k; i += 2) b.accepting.push_back(l * w + i);
  for (state_id l = 0; l < a.n; ++l)
    for (std::uint32_t i = 0; i < w; ++i) {
      const bool dead = alpha.test(l) && (i & 1);
      for (letter_id s = 0; s < a.letters(); ++s) {
        if (dead) continue;  // stays false
        const auto& ts = a.succ(l, s);
        if (ts.empty()) {
          b.succ(l * w + i, s) = formula::tt();
          continue;
        }
        std::vector<formula> parts;
        parts.reserve(ts.size());
        for (auto t : ts) {
          std::vector<formula> choices;
          choices.reserve(i + 1);
          for (std::uint32_t j = i + 1; j-- > 0;)
            choices.push_back(formula::state(t * w + j));
          parts.push_back(formula::disj(std::move(choices)));
        }
        b.succ(l * w + i, s) = formula::conj(std::move(parts));
      }
    }
  return b;
}

namespace detail {

struct mask_view {
  std::uint64_t m;
  bool test(state_id i) const { return (m >> i) & 1; }
};

struct pair_hash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p)
      const {
    std::uint64_t x = p.first * 0x9E3779B97F4A7C15ull ^ p.second;
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

// Satisfaction of every delta formula against every subset, tabulated as one
// bitmask per (letter, subset) while 2^n is small.
struct sat_tables {
  const abw* a;
  std::uint32_t n;
  bool tabled;
  std::vector<std::vector<std::uint64_t>> ok;  // [letter][subset] -> states

  explicit sat_tables(const abw& aut) : a(&aut), n(aut.n) {
    tabled = n <= 16;
    if (!tabled) return;
    ok.assign(aut.letters(), std::vector<std::uint64_t>(std::size_t{1} << n));
    for (letter_id s = 0; s < aut.letters(); ++s)
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        std::uint64_t m = 0;
        for (state_id l = 0; l < n; ++l)
          if (eval_formula(aut.succ(l, s), mask_view{x}))
            m |= std::uint64_t{1} << l;
        ok[s][x] = m;
      }
  }

  // X satisfies delta(l, s) for every l in group?
  bool group_sat(std::uint64_t group, letter_id s, std::uint64_t x) const {
    if (tabled) return (group & ~ok[s][x]) == 0;
    std::uint64_t g = group;
    while (g) {
      state_id l = static_cast<state_id>(std::countr_zero(g));
      g &= g - 1;
      if (!eval_formula(a->succ(l, s), mask_view{x})) return false;
    }
    return true;
  }
};

// Subset-pair successors of the breakpoint construction: from <s, o> read a
// letter; the spread must satisfy all of s, the owing part all of o, and
// accepting states are discharged; at the breakpoint o restarts from s'.
inline void breakpoint_succs(const sat_tables& st, std::uint64_t alpha,
                             std::uint64_t s, std::uint64_t o, letter_id l,
                             std::vector<std::pair<std::uint64_t,
                                                   std::uint64_t>>& out) {
  out.clear();
  const std::uint64_t full = st.n == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << st.n) - 1;
  for (std::uint64_t s2 = 0;; ++s2) {
    if (st.group_sat(s, l, s2)) {
      if (o) {
        std::uint64_t o2 = s2;
        for (;;) {
          if (st.group_sat(o, l, o2))
            out.emplace_back(s2, o2 & ~alpha);
          if (!o2) break;
          o2 = (o2 - 1) & s2;
        }
      } else {
        out.emplace_back(s2, s2 & ~alpha);
      }
    }
    if (s2 == full) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace detail

// Explicit automaton together with its state decoding.
struct subset_explicit {
  nbw aut;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> states;  // (s, o) masks
};

// Breakpoint subset construction of an ABW, restricted to the states
// reachable from <{initial}, {}>. Accepting states are those with o empty.
inline subset_explicit dealternate(const abw& a,
                                   std::size_t cap = default_cap) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("dealternate: " + errs.front());
  if (a.n > 63) throw cap_error("dealternate: too many states for masks");
  detail::sat_tables st(a);
  const std::uint64_t alpha = [&] {
    std::uint64_t m = 0;
    for (auto s : a.accepting) m |= std::uint64_t{1} << s;
    return m;
  }();

  subset_explicit out;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, state_id,
                     detail::pair_hash>
      index;
  auto intern = [&](std::uint64_t s, std::uint64_t o) {
    auto [it, fresh] = index.try_emplace({s, o},
                                         static_cast<state_id>(
                                             out.states.size()));
    if (fresh) {
      out.states.emplace_back(s, o);
      if (out.states.size() > cap)
        throw cap_error("dealternate: state cap exceeded");
    }
    return it->second;
  };

  intern(std::uint64_t{1} << a.initial, 0);
  std::vector<std::vector<state_id>> delta;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> succs;
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    auto [s, o] = out.states[i];
    for (letter_id l = 0; l < a.letters(); ++l) {
      detail::breakpoint_succs(st, alpha, s, o, l, succs);
      std::vector<state_id> ts;
      ts.reserve(succs.size());
      for (auto [s2, o2] : succs) ts.push_back(intern(s2, o2));
      delta.push_back(std::move(ts));
    }
  }
  out.aut = nbw(static_cast<std::uint32_t>(out.states.size()), a.alphabet);
  out.aut.initial = 0;
  for (state_id q = 0; q < out.aut.n; ++q) {
    if (out.states[q].second == 0) out.aut.accepting.push_back(q);
    for (letter_id l = 0; l < a.letters(); ++l)
      out.aut.succ(q, l) = std::move(delta[q * a.letters() + l]);
  }
  return out;
}

// Same construction over the full pair domain (all o inside s), reachable or
// not; brute-force predecessor checks need the whole space.
inline subset_explicit dealternate_space(const abw& a,
                                         std::size_t cap = default_cap) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("dealternate_space: " + errs.front());
  if (a.n > 20) throw cap_error("dealternate_space: too many states");
  std::size_t pairs = 1;
  for (std::uint32_t i = 0; i < a.n; ++i) {
    pairs *= 3;
    if (pairs > cap) throw cap_error("dealternate_space: pair cap exceeded");
  }
  detail::sat_tables st(a);
  const std::uint64_t alpha = [&] {
    std::uint64_t m = 0;
    for (auto s : a.accepting) m |= std::uint64_t{1} << s;
    return m;
  }();

  subset_explicit out;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, state_id,
                     detail::pair_hash>
      index;
  const std::uint64_t full = (std::uint64_t{1} << a.n) - 1;
  for (std::uint64_t s = 0;; ++s) {
    std::uint64_t o = s;
    for (;;) {
      index.emplace(std::pair{s, o},
                    static_cast<state_id>(out.states.size()));
      out.states.emplace_back(s, o);
      if (!o) break;
      o = (o - 1) & s;
    }
    if (s == full) break;
  }

  out.aut = nbw(static_cast<std::uint32_t>(out.states.size()), a.alphabet);
  out.aut.initial = index.at({std::uint64_t{1} << a.initial, 0});
  std::vector<std::pair<std::uint64_t, std::uint64_t>> succs;
  for (state_id q = 0; q < out.aut.n; ++q) {
    auto [s, o] = out.states[q];
    if (o == 0) out.aut.accepting.push_back(q);
    for (letter_id l = 0; l < a.letters(); ++l) {
      detail::breakpoint_succs(st, alpha, s, o, l, succs);
      auto& ts = out.aut.succ(q, l);
      ts.reserve(succs.size());
      for (auto [s2, o2] : succs) ts.push_back(index.at({s2, o2}));
    }
  }
  return out;
}

// Explicit complement of an NBW: breakpoint pairs of ranked subsets. Atoms
// are the (state, rank) pairs with rank in [0, k], odd ranks dropped on
// accepting states; a pair is (s, o) with o inside s; transitions follow the
// rank-decrease and obligation-discharge conditions, with odd-ranked atoms
// cut from the new obligation.
struct ranked_explicit {
  nbw aut;
  std::uint32_t k = 0;
  std::vector<std::pair<state_id, std::uint32_t>> atoms;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> states;  // atom masks
};

inline ranked_explicit explicit_complement(const nbw& a, std::uint32_t k,
                                           std::size_t cap = default_cap) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("explicit_complement: " + errs.front());
  if (k & 1)
    throw std::invalid_argument("explicit_complement: k must be even");
  state_set alpha = a.accepting_mask();

  ranked_explicit out;
  out.k = k;
  for (state_id l = 0; l < a.n; ++l)
    for (std::uint32_t r = 0; r <= k; ++r)
      if (!(alpha.test(l) && (r & 1))) out.atoms.emplace_back(l, r);
  const std::uint32_t na = static_cast<std::uint32_t>(out.atoms.size());
  if (na > 31) throw cap_error("explicit_complement: ranked domain too wide");
  if ((std::size_t{1} << (2 * na)) > cap)
    throw cap_error("explicit_complement: state cap exceeded");

  // upto[l][r]: atoms of state l with rank <= r.
  std::vector<std::vector<std::uint64_t>> upto(
      a.n, std::vector<std::uint64_t>(k + 1, 0));
  for (std::uint32_t i = 0; i < na; ++i) {
    auto [l, r] = out.atoms[i];
    for (std::uint32_t j = r; j <= k; ++j) upto[l][j] |= std::uint64_t{1} << i;
  }
  std::uint64_t odd_mask = 0;
  for (std::uint32_t i = 0; i < na; ++i)
    if (out.atoms[i].second & 1) odd_mask |= std::uint64_t{1} << i;

  // ok[letter][target mask]: atoms whose successor condition the mask meets.
  const std::uint64_t nmasks = std::uint64_t{1} << na;
  std::vector<std::vector<std::uint64_t>> ok(
      a.letters(), std::vector<std::uint64_t>(nmasks));
  for (letter_id s = 0; s < a.letters(); ++s)
    for (std::uint64_t x = 0; x < nmasks; ++x) {
      std::uint64_t m = 0;
      for (std::uint32_t i = 0; i < na; ++i) {
        auto [l, r] = out.atoms[i];
        bool good = true;
        for (auto t : a.succ(l, s))
          if ((x & upto[t][r]) == 0) {
            good = false;
            break;
          }
        if (good) m |= std::uint64_t{1} << i;
      }
      ok[s][x] = m;
    }

  std::unordered_map<std::uint64_t, state_id> index;
  for (std::uint64_t s = 0;; ++s) {
    std::uint64_t o = s;
    for (;;) {
      index.emplace((s << 32) | o, static_cast<state_id>(out.states.size()));
      out.states.emplace_back(s, o);
      if (!o) break;
      o = (o - 1) & s;
    }
    if (s == nmasks - 1) break;
  }

  // Index of each candidate target after the odd atoms leave the obligation,
  // hoisted out of the quadratic successor scans below.
  std::vector<state_id> pair_strip(out.states.size());
  for (std::size_t j = 0; j < out.states.size(); ++j) {
    auto [s2, o2] = out.states[j];
    pair_strip[j] = index.at((s2 << 32) | (o2 & ~odd_mask));
  }
  std::vector<state_id> mask_strip(nmasks);
  for (std::uint64_t s2 = 0; s2 < nmasks; ++s2)
    mask_strip[s2] = index.at((s2 << 32) | (s2 & ~odd_mask));

  out.aut = nbw(static_cast<std::uint32_t>(out.states.size()), a.alphabet);
  std::uint32_t init_atom = 0;
  while (out.atoms[init_atom] !=
         std::pair<state_id, std::uint32_t>{a.initial, k})
    ++init_atom;
  out.aut.initial = index.at(std::uint64_t{1} << (init_atom + 32));
  std::vector<state_id> ts;
  for (state_id q = 0; q < out.aut.n; ++q) {
    auto [s, o] = out.states[q];
    if (o == 0) out.aut.accepting.push_back(q);
    for (letter_id l = 0; l < a.letters(); ++l) {
      ts.clear();
      if (o) {
        for (std::size_t j = 0; j < out.states.size(); ++j) {
          auto [s2, o2] = out.states[j];
          if ((s & ~ok[l][s2]) == 0 && (o & ~ok[l][o2]) == 0)
            ts.push_back(pair_strip[j]);
        }
      } else {
        for (std::uint64_t s2 = 0; s2 < nmasks; ++s2)
          if ((s & ~ok[l][s2]) == 0) ts.push_back(mask_strip[s2]);
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      out.aut.succ(q, l) = ts;
    }
  }
  return out;
}

namespace detail {

inline state_set forward_reach(const nbw& a) {
  state_set r(a.n);
  std::vector<state_id> stack{a.initial};
  r.set(a.initial);
  while (!stack.empty()) {
    state_id s = stack.back();
    stack.pop_back();
    for (letter_id l = 0; l < a.letters(); ++l)
      for (auto t : a.succ(s, l))
        if (!r.test(t)) {
          r.set(t);
          stack.push_back(t);
        }
  }
  return r;
}

inline std::vector<std::vector<state_id>> reverse_edges(const nbw& a) {
  std::vector<std::vector<state_id>> rev(a.n);
  for (state_id s = 0; s < a.n; ++s)
    for (letter_id l = 0; l < a.letters(); ++l)
      for (auto t : a.succ(s, l)) rev[t].push_back(s);
  return rev;
}

// Backward closure of base within reach.
inline state_set backward_closure(const std::vector<std::vector<state_id>>&
                                      rev,
                                  const state_set& reach,
                                  const state_set& base) {
  state_set x = base;
  std::vector<state_id> work;
  base.for_each([&](state_id s) { work.push_back(s); });
  while (!work.empty()) {
    state_id t = work.back();
    work.pop_back();
    for (auto s : rev[t])
      if (reach.test(s) && !x.test(s)) {
        x.set(s);
        work.push_back(s);
      }
  }
  return x;
}

// States of cand with some successor inside y.
inline state_set pre_filter(const nbw& a, const std::vector<state_id>& cand,
                            const state_set& y) {
  state_set out(a.n);
  for (auto s : cand) {
    bool hit = false;
    for (letter_id l = 0; l < a.letters() && !hit; ++l)
      for (auto t : a.succ(s, l))
        if (y.test(t)) {
          hit = true;
          break;
        }
    if (hit) out.set(s);
  }
  return out;
}

}  // namespace detail

// Emptiness by the explicit nu-mu fixpoint over state sets, restricted to
// the part reachable from the initial state (which cannot change the
// initial state's membership). Empty iff the initial state drops out.
inline bool classical_empty(const nbw& a) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("classical_empty: " + errs.front());
  state_set reach = detail::forward_reach(a);
  auto rev = detail::reverse_edges(a);
  std::vector<state_id> alpha;
  a.accepting_mask().for_each([&](state_id s) {
    if (reach.test(s)) alpha.push_back(s);
  });
  state_set y = reach;
  for (;;) {
    state_set base = detail::pre_filter(a, alpha, y);
    state_set x = detail::backward_closure(rev, reach, base);
    if (x == y) return !x.test(a.initial);
    y = std::move(x);
  }
}

// Generalized variant with two accepting sets: one mu-fixpoint per set,
// meet per outer round.
inline bool classical_empty_gen(const nbw& a, const state_set& b1,
                                const state_set& b2) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("classical_empty_gen: " + errs.front());
  if (b1.width() != a.n || b2.width() != a.n)
    throw std::invalid_argument("classical_empty_gen: set width mismatch");
  state_set reach = detail::forward_reach(a);
  auto rev = detail::reverse_edges(a);
  std::vector<state_id> c1, c2;
  b1.for_each([&](state_id s) {
    if (reach.test(s)) c1.push_back(s);
  });
  b2.for_each([&](state_id s) {
    if (reach.test(s)) c2.push_back(s);
  });
  state_set y = reach;
  for (;;) {
    state_set x1 = detail::backward_closure(rev, reach,
                                            detail::pre_filter(a, c1, y));
    state_set x2 = detail::backward_closure(rev, reach,
                                            detail::pre_filter(a, c2, y));
    x1 &= x2;
    if (x1 == y) return !x1.test(a.initial);
    y = std::move(x1);
  }
}

// Ultimately periodic word u v^omega.
struct lasso {
  std::vector<letter_id> u, v;
};

// Membership of u v^omega: propagate the subset along u, then search the
// (state, position in v) graph for a reachable cycle through an accepting
// state. Only the reachable part is ever expanded.
inline bool member_lasso(const nbw& a, const lasso& w) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("member_lasso: " + errs.front());
  if (w.v.empty())
    throw std::invalid_argument("member_lasso: empty period");
  for (auto l : w.u)
    if (l >= a.letters())
      throw std::invalid_argument("member_lasso: letter out of range");
  for (auto l : w.v)
    if (l >= a.letters())
      throw std::invalid_argument("member_lasso: letter out of range");

  state_set cur(a.n);
  cur.set(a.initial);
  for (auto l : w.u) {
    state_set nxt(a.n);
    cur.for_each([&](state_id s) {
      for (auto t : a.succ(s, l)) nxt.set(t);
    });
    cur = std::move(nxt);
    if (cur.empty()) return false;
  }

  const std::uint32_t p = static_cast<std::uint32_t>(w.v.size());
  std::vector<std::int32_t> local(static_cast<std::size_t>(a.n) * p, -1);
  std::vector<std::pair<state_id, std::uint32_t>> nodes;
  std::vector<std::vector<std::int32_t>> adj;
  std::vector<char> has_self;
  std::vector<std::int32_t> stack;
  auto intern = [&](state_id s, std::uint32_t i) {
    auto& slot = local[static_cast<std::size_t>(s) * p + i];
    if (slot < 0) {
      slot = static_cast<std::int32_t>(nodes.size());
      nodes.emplace_back(s, i);
      stack.push_back(slot);
    }
    return slot;
  };
  cur.for_each([&](state_id s) { intern(s, 0); });
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    auto [s, i] = nodes[id];
    for (auto t : a.succ(s, w.v[i])) intern(t, (i + 1) % p);
  }
  adj.resize(nodes.size());
  has_self.assign(nodes.size(), 0);
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    auto [s, i] = nodes[id];
    for (auto t : a.succ(s, w.v[i])) {
      auto tid = local[static_cast<std::size_t>(t) * p + (i + 1) % p];
      adj[id].push_back(tid);
      if (static_cast<std::size_t>(tid) == id) has_self[id] = 1;
    }
  }

  // Iterative Tarjan.
  const std::int32_t none = -1;
  std::vector<std::int32_t> idx(nodes.size(), none), low(nodes.size()),
      comp(nodes.size(), none);
  std::vector<char> on(nodes.size(), 0);
  std::vector<std::int32_t> st;
  std::vector<std::uint32_t> comp_size;
  std::int32_t counter = 0;
  struct frame {
    std::int32_t v;
    std::size_t child;
  };
  std::vector<frame> call;
  for (std::size_t root = 0; root < nodes.size(); ++root) {
    if (idx[root] != none) continue;
    call.push_back({static_cast<std::int32_t>(root), 0});
    while (!call.empty()) {
      auto& f = call.back();
      if (f.child == 0) {
        idx[f.v] = low[f.v] = counter++;
        st.push_back(f.v);
        on[f.v] = 1;
      }
      bool descended = false;
      while (f.child < adj[f.v].size()) {
        auto u = adj[f.v][f.child++];
        if (idx[u] == none) {
          call.push_back({u, 0});
          descended = true;
          break;
        }
        if (on[u]) low[f.v] = std::min(low[f.v], idx[u]);
      }
      if (descended) continue;
      if (low[f.v] == idx[f.v]) {
        std::uint32_t size = 0;
        std::int32_t c = static_cast<std::int32_t>(comp_size.size());
        for (;;) {
          auto u = st.back();
          st.pop_back();
          on[u] = 0;
          comp[u] = c;
          ++size;
          if (u == f.v) break;
        }
        comp_size.push_back(size);
      }
      std::int32_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v],
                                                       low[v]);
    }
  }

  state_set alpha = a.accepting_mask();
  for (std::size_t id = 0; id < nodes.size(); ++id)
    if (alpha.test(nodes[id].first) &&
        (comp_size[comp[id]] > 1 || has_self[id]))
      return true;
  return false;
}

// Predecessors of a closed set, read off the explicit transition table.
inline std::vector<char> brute_pre(const nbw& a, letter_id sigma,
                                   const std::vector<char>& closed) {
  if (sigma >= a.letters())
    throw std::invalid_argument("brute_pre: letter out of range");
  if (closed.size() != a.n)
    throw std::invalid_argument("brute_pre: set size mismatch");
  std::vector<char> out(a.n, 0);
  for (state_id s = 0; s < a.n; ++s)
    for (auto t : a.succ(s, sigma))
      if (closed[t]) {
        out[s] = 1;
        break;
      }
  return out;
}

// Closure membership over an enumerated subset-pair space: containment
// within the same o-stratum.
inline std::vector<char> breakpoint_closure(const subset_explicit& sp,
                                            std::uint64_t s,
                                            std::uint64_t o) {
  std::vector<char> out(sp.states.size(), 0);
  for (std::size_t i = 0; i < sp.states.size(); ++i) {
    auto [s2, o2] = sp.states[i];
    out[i] = ((o2 == 0) == (o == 0)) && (s2 & ~s) == 0 && (o2 & ~o) == 0;
  }
  return out;
}

// Closure membership over the ranked space: a pair belongs iff the given
// characteristic functions bound its own from below, within the stratum.
inline std::vector<char> ranked_closure(const ranked_explicit& rx,
                                        const std::vector<std::uint32_t>& fs,
                                        const std::vector<std::uint32_t>& fo) {
  std::vector<char> out(rx.states.size(), 0);
  const std::uint32_t top = rx.k + 1;
  auto chi = [&](std::uint64_t mask, std::vector<std::uint32_t>& f) {
    std::fill(f.begin(), f.end(), top);
    for (std::uint32_t i = 0; i < rx.atoms.size(); ++i)
      if ((mask >> i) & 1) {
        auto [l, r] = rx.atoms[i];
        f[l] = std::min(f[l], r);
      }
  };
  std::vector<std::uint32_t> cs(fs.size()), co(fo.size());
  for (std::size_t q = 0; q < rx.states.size(); ++q) {
    auto [s, o] = rx.states[q];
    chi(s, cs);
    chi(o, co);
    bool in = true;
    bool fo_top = true, co_top = (o == 0);
    for (std::size_t l = 0; l < fs.size() && in; ++l) {
      if (fs[l] > cs[l] || fo[l] > co[l]) in = false;
      if (fo[l] != top) fo_top = false;
    }
    out[q] = in && fo_top == co_top;
  }
  return out;
}

// Ground-truth universality: the explicit complement is empty.
inline bool universal(const nbw& a, std::size_t cap = default_cap) {
  return classical_empty(explicit_complement(a, rank_bound(a), cap).aut);
}

// Ground-truth emptiness of an alternating automaton via the breakpoint
// subset construction.
inline bool alternating_empty(const abw& a, std::size_t cap = default_cap) {
  return classical_empty(dealternate(a, cap).aut);
}

// Ground-truth inclusion: the product of the left automaton with the
// explicit complement of the right one has no run visiting both accepting
// sets infinitely often. The product is built reachably.
inline bool included(const nbw& a1, const nbw& a2,
                     std::size_t cap = default_cap) {
  if (auto errs = validate(a1); !errs.empty())
    throw std::invalid_argument("included: " + errs.front());
  if (a1.alphabet != a2.alphabet)
    throw std::invalid_argument("included: alphabets differ");
  ranked_explicit rc = explicit_complement(a2, rank_bound(a2), cap);

  std::unordered_map<std::uint64_t, state_id> index;
  std::vector<std::pair<state_id, state_id>> prod;
  auto intern = [&](state_id s1, state_id q) {
    std::uint64_t key = (static_cast<std::uint64_t>(s1) << 32) | q;
    auto [it, fresh] = index.try_emplace(key,
                                         static_cast<state_id>(prod.size()));
    if (fresh) {
      prod.emplace_back(s1, q);
      if (prod.size() > cap) throw cap_error("included: product cap");
    }
    return it->second;
  };
  intern(a1.initial, rc.aut.initial);
  std::vector<std::vector<state_id>> edges;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    auto [s1, q] = prod[i];
    for (letter_id l = 0; l < a1.letters(); ++l) {
      std::vector<state_id> ts;
      for (auto t1 : a1.succ(s1, l))
        for (auto t2 : rc.aut.succ(q, l)) ts.push_back(intern(t1, t2));
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      edges.push_back(std::move(ts));
    }
  }
  nbw p(static_cast<std::uint32_t>(prod.size()), a1.alphabet);
  p.initial = 0;
  state_set alpha1 = a1.accepting_mask();
  state_set b1(p.n), b2(p.n);
  state_set acc2(rc.aut.n);
  for (auto q : rc.aut.accepting) acc2.set(q);
  for (state_id i = 0; i < p.n; ++i) {
    auto [s1, q] = prod[i];
    if (alpha1.test(s1)) b1.set(i);
    if (acc2.test(q)) b2.set(i);
    for (letter_id l = 0; l < a1.letters(); ++l)
      p.succ(i, l) = std::move(edges[i * a1.letters() + l]);
  }
  return classical_empty_gen(p, b1, b2);
}

}  // namespace omega::oracle
