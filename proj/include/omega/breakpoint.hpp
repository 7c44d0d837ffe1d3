#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/antichain.hpp"
#include "omega/automata.hpp"
#include "omega/fixpoint.hpp"

namespace omega {

// Breakpoint pair over an alternating automaton: s is the spread of a run
// slice, o (a subset of s) holds the states still owing an accepting visit.
// o empty marks the accepting breakpoint.
struct breakpoint_pair {
  state_set s, o;
};

// Partial order: componentwise inclusion within the same o-stratum (o empty
// on both sides or neither).
inline bool leq_breakpoint(const breakpoint_pair& a, const breakpoint_pair& b) {
  return a.o.empty() == b.o.empty() && a.s.subset_of(b.s) &&
         a.o.subset_of(b.o);
}

struct breakpoint_leq {
  bool operator()(const breakpoint_pair& a, const breakpoint_pair& b) const {
    return leq_breakpoint(a, b);
  }
};

// Representative of the intersection of two closures: componentwise meet when
// the strata agree and the meet stays in the stratum, otherwise nothing.
inline std::optional<breakpoint_pair> meet_breakpoint(
    const breakpoint_pair& a, const breakpoint_pair& b) {
  state_set s = a.s & b.s;
  state_set o = a.o & b.o;
  if (!a.o.empty() && !b.o.empty()) {
    if (o.empty()) return std::nullopt;
    return breakpoint_pair{std::move(s), std::move(o)};
  }
  if (a.o.empty() && b.o.empty())
    return breakpoint_pair{std::move(s), state_set(o.width())};
  return std::nullopt;
}

namespace detail {

// Maximal predecessors of the closure of <s', o'> under one letter: at most
// the breakpoint-reset pair <o, {}> and the in-progress pair <s, o>.
inline std::vector<breakpoint_pair> pre_breakpoint_ctx(
    const abw& a, const state_set& alpha, letter_id sigma,
    const breakpoint_pair& e) {
  std::vector<breakpoint_pair> out;
  // Every transition discharges accepting states from the owing set on
  // arrival, so a nonempty o inside alpha is entered by no transition at
  // all: its closure has no predecessors.
  if (!e.o.empty() && e.o.subset_of(alpha)) return out;

  state_set seed = e.o | (e.s & alpha);
  state_set o(a.n);
  for (state_id l = 0; l < a.n; ++l)
    if (eval_formula(a.succ(l, sigma), seed)) o.set(l);

  out.push_back(breakpoint_pair{o, state_set(a.n)});
  if (!o.empty()) {
    state_set s(a.n);
    for (state_id l = 0; l < a.n; ++l)
      if (eval_formula(a.succ(l, sigma), e.s)) s.set(l);
    assert(o.subset_of(s));
    out.push_back(breakpoint_pair{std::move(s), std::move(o)});
  }
  return out;
}

struct breakpoint_domain {
  const abw* a;
  state_set alpha;

  explicit breakpoint_domain(const abw& aut)
      : a(&aut), alpha(aut.accepting_mask()) {}

  using chain = antichain<breakpoint_pair, breakpoint_leq>;

  chain empty_chain() const { return {}; }

  chain top() const {
    chain c;
    state_set loc = state_set::full(a->n);
    c.insert(breakpoint_pair{loc, loc});
    c.insert(breakpoint_pair{loc, state_set(a->n)});
    return c;
  }

  chain pre(const chain& c) const {
    chain out;
    for (letter_id l = 0; l < a->letters(); ++l)
      for (const auto& e : c.elements())
        for (auto& p : pre_breakpoint_ctx(*a, alpha, l, e))
          out.insert(std::move(p));
    return out;
  }

  // Meet with the accepting set {<s, {}>}: keeps exactly the o-empty stratum.
  chain meet_alpha(const chain& c) const {
    chain out;
    for (const auto& e : c.elements())
      if (e.o.empty()) out.insert(e);
    return out;
  }

  bool contains_initial(const chain& c) const {
    for (const auto& e : c.elements())
      if (e.o.empty() && e.s.test(a->initial)) return true;
    return false;
  }
};

}  // namespace detail

inline std::vector<breakpoint_pair> pre_breakpoint(const abw& a,
                                                   letter_id sigma,
                                                   const breakpoint_pair& e) {
  if (sigma >= a.letters())
    throw std::invalid_argument("pre_breakpoint: letter out of range");
  if (e.s.width() != a.n || e.o.width() != a.n)
    throw std::invalid_argument("pre_breakpoint: pair width mismatch");
  if (!e.o.subset_of(e.s))
    throw std::invalid_argument("pre_breakpoint: o must be a subset of s");
  return detail::pre_breakpoint_ctx(a, a.accepting_mask(), sigma, e);
}

// Language emptiness of an alternating Buchi automaton, decided on the
// antichain of breakpoint pairs: nonempty iff <{initial}, {}> lies in the
// greatest fixpoint.
inline bool abw_empty(const abw& a, const solve_options& opt = {}) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument("abw_empty: " + errs.front());
  detail::breakpoint_domain d(a);
  return !buchi_fixpoint(d, opt);
}

}  // namespace omega
