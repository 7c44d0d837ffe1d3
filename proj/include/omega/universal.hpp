#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "omega/antichain.hpp"
#include "omega/automata.hpp"
#include "omega/fixpoint.hpp"
#include "omega/rank.hpp"

namespace omega {

namespace detail {

template <class R>
struct rank_context {
  const nbw* a;
  state_set alpha;
  std::uint32_t k;
  R top;

  explicit rank_context(const nbw& aut)
      : a(&aut), alpha(aut.accepting_mask()), k(rank_bound(aut)),
        top(static_cast<R>(k + 1)) {}

  // Least even value >= x, pushed to top past k.
  std::uint32_t ceil_even(std::uint32_t x) const {
    std::uint32_t v = x + (x & 1);
    return v > k ? top : v;
  }
  // Least odd value >= x; stays within [0, top] since top is odd.
  std::uint32_t ceil_odd(std::uint32_t x) const { return x | 1; }

  bool pair_ok(const rank_pair<R>& e) const {
    if (e.n() != a->n || e.top() != top) return false;
    for (state_id l = 0; l < a->n; ++l) {
      if (e.fs_at(l) > e.fo_at(l)) return false;
      if (alpha.test(l) &&
          (((e.fs_at(l) != top) && (e.fs_at(l) & 1)) ||
           ((e.fo_at(l) != top) && (e.fo_at(l) & 1))))
        return false;
    }
    return true;
  }
};

// Maximal predecessors of the closure of e under one letter: always the
// breakpoint-reset pair <fo, all-top>, plus the in-progress pair <fs, fo>
// when fo keeps some state in range.
template <class R>
std::vector<rank_pair<R>> pre_rank_ctx(const rank_context<R>& ctx,
                                       letter_id sigma,
                                       const rank_pair<R>& e) {
  const nbw& a = *ctx.a;
  const std::uint32_t n = a.n;

  // Per successor state: its contribution to the new owing rank.
  std::vector<std::uint32_t> contrib(n);
  for (state_id t = 0; t < n; ++t)
    contrib[t] = ctx.alpha.test(t)
                     ? e.fo_at(t)
                     : std::min<std::uint32_t>(e.fo_at(t),
                                               ctx.ceil_odd(e.fs_at(t)));

  rank_fn<R> fo(n);
  bool in_range = false;
  for (state_id l = 0; l < n; ++l) {
    std::uint32_t m = 0;
    for (auto t : a.succ(l, sigma)) m = std::max(m, contrib[t]);
    if (ctx.alpha.test(l)) m = ctx.ceil_even(m);
    fo[l] = static_cast<R>(m);
    if (m <= ctx.k) in_range = true;
  }

  std::vector<rank_pair<R>> out;
  out.emplace_back(fo, rank_fn<R>(n, ctx.top), ctx.top);
  if (in_range) {
    rank_fn<R> fs(n);
    for (state_id l = 0; l < n; ++l) {
      std::uint32_t m = 0;  // max over no successors
      for (auto t : a.succ(l, sigma))
        m = std::max<std::uint32_t>(m, e.fs_at(t));
      if (ctx.alpha.test(l)) m = ctx.ceil_even(m);
      fs[l] = static_cast<R>(m);
    }
    out.emplace_back(fs, fo, ctx.top);
  }
  for ([[maybe_unused]] const auto& p : out) assert(ctx.pair_ok(p));
  return out;
}

template <class R>
struct rank_domain {
  rank_context<R> ctx;

  explicit rank_domain(const nbw& a) : ctx(a) {}

  using chain = antichain<rank_pair<R>, rank_leq<R>>;

  chain empty_chain() const { return {}; }

  // Zero functions cover everything in their stratum.
  chain top() const {
    const std::uint32_t n = ctx.a->n;
    chain c;
    c.insert(rank_pair<R>(rank_fn<R>(n, 0), rank_fn<R>(n, 0), ctx.top));
    c.insert(rank_pair<R>(rank_fn<R>(n, 0), rank_fn<R>(n, ctx.top), ctx.top));
    return c;
  }

  chain pre(const chain& c) const {
    chain out;
    for (letter_id l = 0; l < ctx.a->letters(); ++l)
      for (const auto& e : c.elements())
        for (auto& p : pre_rank_ctx(ctx, l, e)) out.insert(std::move(p));
    return out;
  }

  // Meet with the accepting set {<fs, all-top>}: keeps the o-empty stratum.
  chain meet_alpha(const chain& c) const {
    chain out;
    for (const auto& e : c.elements())
      if (e.o_empty()) out.insert(e);
    return out;
  }

  // The initial element is <{(initial, k)}, {}>.
  bool contains_initial(const chain& c) const {
    for (const auto& e : c.elements())
      if (e.o_empty() && e.fs_at(ctx.a->initial) <= ctx.k) return true;
    return false;
  }
};

template <class R>
bool is_universal_typed(const nbw& a, const solve_options& opt) {
  rank_domain<R> d(a);
  return !buchi_fixpoint(d, opt);
}

inline void check_nbw_arg(const nbw& a, const char* who) {
  if (auto errs = validate(a); !errs.empty())
    throw std::invalid_argument(std::string(who) + ": " + errs.front());
}

}  // namespace detail

template <class R>
std::vector<rank_pair<R>> pre_rank(const nbw& a, letter_id sigma,
                                   const rank_pair<R>& e) {
  detail::check_nbw_arg(a, "pre_rank");
  if (sigma >= a.letters())
    throw std::invalid_argument("pre_rank: letter out of range");
  detail::rank_context<R> ctx(a);
  if (!ctx.pair_ok(e))
    throw std::invalid_argument("pre_rank: invalid rank pair for automaton");
  return detail::pre_rank_ctx(ctx, sigma, e);
}

// Universality of an NBW, decided on antichains of rank pairs drawn from the
// complement construction; the rank width is chosen from the bound k.
inline bool is_universal(const nbw& a, const solve_options& opt = {}) {
  detail::check_nbw_arg(a, "is_universal");
  std::uint32_t k = rank_bound(a);
  if (k + 1 <= 0xff) return detail::is_universal_typed<std::uint8_t>(a, opt);
  if (k + 1 <= 0xffff)
    return detail::is_universal_typed<std::uint16_t>(a, opt);
  return detail::is_universal_typed<std::uint32_t>(a, opt);
}

}  // namespace omega
