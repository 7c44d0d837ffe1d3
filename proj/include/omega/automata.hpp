#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "omega/base.hpp"
#include "omega/formula.hpp"

namespace omega {

// Nondeterministic Buchi word automaton. Transitions are stored per
// (state, letter); an empty successor list is a missing transition.
struct nbw {
  std::uint32_t n = 0;
  std::vector<std::string> alphabet;
  state_id initial = 0;
  std::vector<state_id> accepting;
  std::vector<std::vector<state_id>> delta;  // [s * |alphabet| + a]

  nbw() = default;
  nbw(std::uint32_t states, std::vector<std::string> sigma)
      : n(states),
        alphabet(std::move(sigma)),
        delta(static_cast<std::size_t>(states) * alphabet.size()) {}

  std::uint32_t letters() const {
    return static_cast<std::uint32_t>(alphabet.size());
  }

  std::vector<state_id>& succ(state_id s, letter_id a) {
    return delta[static_cast<std::size_t>(s) * alphabet.size() + a];
  }
  const std::vector<state_id>& succ(state_id s, letter_id a) const {
    return delta[static_cast<std::size_t>(s) * alphabet.size() + a];
  }

  void add_edge(state_id s, letter_id a, state_id t) {
    auto& ts = succ(s, a);
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }

  state_set accepting_mask() const {
    state_set m(n);
    for (auto s : accepting)
      if (s < n) m.set(s);
    return m;
  }
};

// Alternating Buchi word automaton: delta maps (state, letter) to a positive
// boolean formula; a missing entry is false (no successors).
struct abw {
  std::uint32_t n = 0;
  std::vector<std::string> alphabet;
  state_id initial = 0;
  std::vector<state_id> accepting;
  std::vector<formula> delta;  // [s * |alphabet| + a]

  abw() = default;
  abw(std::uint32_t states, std::vector<std::string> sigma)
      : n(states),
        alphabet(std::move(sigma)),
        delta(static_cast<std::size_t>(states) * alphabet.size()) {}

  std::uint32_t letters() const {
    return static_cast<std::uint32_t>(alphabet.size());
  }

  formula& succ(state_id s, letter_id a) {
    return delta[static_cast<std::size_t>(s) * alphabet.size() + a];
  }
  const formula& succ(state_id s, letter_id a) const {
    return delta[static_cast<std::size_t>(s) * alphabet.size() + a];
  }

  state_set accepting_mask() const {
    state_set m(n);
    for (auto s : accepting)
      if (s < n) m.set(s);
    return m;
  }
};

namespace detail {
inline void check_formula_vars(const formula& f, std::uint32_t n,
                               std::vector<std::string>& out,
                               const std::string& where) {
  switch (f.node_kind()) {
    case formula::kind::state:
      if (f.var() >= n)
        out.push_back(where + ": state " + std::to_string(f.var()) +
                      " out of range");
      break;
    case formula::kind::conj:
    case formula::kind::disj:
      for (const auto& k : f.children()) check_formula_vars(k, n, out, where);
      break;
    default:
      break;
  }
}
}  // namespace detail

inline std::vector<std::string> validate(const nbw& a) {
  std::vector<std::string> out;
  if (a.n == 0) out.push_back("automaton needs at least one state");
  if (a.alphabet.empty()) out.push_back("alphabet is empty");
  if (a.initial >= a.n && a.n > 0)
    out.push_back("initial state " + std::to_string(a.initial) +
                  " out of range");
  for (auto s : a.accepting)
    if (s >= a.n)
      out.push_back("accepting state " + std::to_string(s) + " out of range");
  if (a.delta.size() !=
      static_cast<std::size_t>(a.n) * a.alphabet.size())
    out.push_back("transition table size mismatch");
  else
    for (state_id s = 0; s < a.n; ++s)
      for (letter_id l = 0; l < a.letters(); ++l)
        for (auto t : a.succ(s, l))
          if (t >= a.n)
            out.push_back("transition " + std::to_string(s) + " -" +
                          a.alphabet[l] + "-> " + std::to_string(t) +
                          " out of range");
  return out;
}

inline std::vector<std::string> validate(const abw& a) {
  std::vector<std::string> out;
  if (a.n == 0) out.push_back("automaton needs at least one state");
  if (a.alphabet.empty()) out.push_back("alphabet is empty");
  if (a.initial >= a.n && a.n > 0)
    out.push_back("initial state " + std::to_string(a.initial) +
                  " out of range");
  for (auto s : a.accepting)
    if (s >= a.n)
      out.push_back("accepting state " + std::to_string(s) + " out of range");
  if (a.delta.size() !=
      static_cast<std::size_t>(a.n) * a.alphabet.size())
    out.push_back("transition table size mismatch");
  else
    for (state_id s = 0; s < a.n; ++s)
      for (letter_id l = 0; l < a.letters(); ++l)
        detail::check_formula_vars(a.succ(s, l), a.n, out,
                                   "delta(" + std::to_string(s) + "," +
                                       a.alphabet[l] + ")");
  return out;
}

// A nondeterministic automaton is the alternating automaton whose formulas
// are plain disjunctions; an empty successor set becomes false.
inline abw as_abw(const nbw& a) {
  abw b(a.n, a.alphabet);
  b.initial = a.initial;
  b.accepting = a.accepting;
  for (state_id s = 0; s < a.n; ++s)
    for (letter_id l = 0; l < a.letters(); ++l) {
      const auto& ts = a.succ(s, l);
      if (ts.empty()) continue;
      std::vector<formula> kids;
      kids.reserve(ts.size());
      for (auto t : ts) kids.push_back(formula::state(t));
      b.succ(s, l) = formula::disj(std::move(kids));
    }
  return b;
}

// States with some sigma-successor inside l.
inline state_set pre_nbw(const nbw& a, letter_id sigma, const state_set& l) {
  state_set out(a.n);
  for (state_id s = 0; s < a.n; ++s)
    for (auto t : a.succ(s, sigma))
      if (l.test(t)) {
        out.set(s);
        break;
      }
  return out;
}

}  // namespace omega
