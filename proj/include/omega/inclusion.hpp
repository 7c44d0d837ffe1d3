#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omega/antichain.hpp"
#include "omega/automata.hpp"
#include "omega/fixpoint.hpp"
#include "omega/rank.hpp"
#include "omega/universal.hpp"

namespace omega {

// Element of the inclusion product: a state of the left automaton paired
// with a rank pair of the right automaton's complement domain.
template <class R>
struct product_elem {
  state_id a1;
  rank_pair<R> rp;
};

// Domination: same left state, rank-pair domination (order reversal).
template <class R>
bool leq_product(const product_elem<R>& p, const product_elem<R>& q) {
  return p.a1 == q.a1 && leq_rank(q.rp, p.rp);
}

namespace detail {

// Product antichain bucketed by the left state; elements only ever compare
// within a bucket.
template <class R>
class product_chain {
 public:
  product_chain() = default;
  explicit product_chain(std::uint32_t n1) : buckets_(n1) {}

  using bucket = antichain<rank_pair<R>, rank_leq<R>>;

  bool insert(state_id a1, rank_pair<R> rp) {
    return buckets_[a1].insert(std::move(rp));
  }

  void unite(const product_chain& o) {
    for (std::size_t i = 0; i < buckets_.size(); ++i)
      buckets_[i].unite(o.buckets_[i]);
  }

  product_chain absorb(const product_chain& o) {
    product_chain fresh(static_cast<std::uint32_t>(buckets_.size()));
    for (std::size_t i = 0; i < buckets_.size(); ++i)
      fresh.buckets_[i] = buckets_[i].absorb(o.buckets_[i]);
    return fresh;
  }

  bool below(const product_chain& o) const {
    for (std::size_t i = 0; i < buckets_.size(); ++i)
      if (!buckets_[i].below(o.buckets_[i])) return false;
    return true;
  }

  bool empty() const {
    for (const auto& b : buckets_)
      if (!b.empty()) return false;
    return true;
  }

  const std::vector<bucket>& buckets() const { return buckets_; }
  bucket& at(state_id a1) { return buckets_[a1]; }

 private:
  std::vector<bucket> buckets_;
};

template <class R>
struct product_domain {
  const nbw* a1;
  rank_context<R> ctx2;
  state_set alpha1;
  // Predecessor lists of the left automaton, [letter][state].
  std::vector<std::vector<std::vector<state_id>>> pred1;

  product_domain(const nbw& left, const nbw& right)
      : a1(&left), ctx2(right), alpha1(left.accepting_mask()) {
    pred1.assign(left.letters(), std::vector<std::vector<state_id>>(left.n));
    for (state_id s = 0; s < left.n; ++s)
      for (letter_id l = 0; l < left.letters(); ++l)
        for (auto t : left.succ(s, l)) pred1[l][t].push_back(s);
  }

  using chain = product_chain<R>;

  chain empty_chain() const { return chain(a1->n); }

  chain top() const {
    const std::uint32_t n2 = ctx2.a->n;
    chain c(a1->n);
    for (state_id s = 0; s < a1->n; ++s) {
      c.insert(s, rank_pair<R>(rank_fn<R>(n2, 0), rank_fn<R>(n2, 0),
                               ctx2.top));
      c.insert(s, rank_pair<R>(rank_fn<R>(n2, 0), rank_fn<R>(n2, ctx2.top),
                               ctx2.top));
    }
    return c;
  }

  chain pre(const chain& c) const {
    chain out(a1->n);
    for (letter_id l = 0; l < a1->letters(); ++l)
      for (state_id t = 0; t < a1->n; ++t) {
        const auto& bucket = c.buckets()[t];
        if (bucket.empty()) continue;
        const auto& preds = pred1[l][t];
        if (preds.empty()) continue;
        for (const auto& rp : bucket.elements())
          for (auto& p : pre_rank_ctx(ctx2, l, rp))
            for (auto s : preds) out.insert(s, p);
      }
    return out;
  }

  // Meet with alpha1 x Loc2: drops buckets of non-accepting left states.
  chain meet_beta1(const chain& c) const {
    chain out(a1->n);
    for (state_id s = 0; s < a1->n; ++s)
      if (alpha1.test(s)) out.at(s) = c.buckets()[s];
    return out;
  }

  // Meet with Loc1 x alpha2': keeps the o-empty stratum per bucket.
  chain meet_beta2(const chain& c) const {
    chain out(a1->n);
    for (state_id s = 0; s < a1->n; ++s)
      for (const auto& rp : c.buckets()[s].elements())
        if (rp.o_empty()) out.insert(s, rp);
    return out;
  }

  chain meet(const chain& x, const chain& y) const {
    chain out(a1->n);
    for (state_id s = 0; s < a1->n; ++s) {
      const auto& xb = x.buckets()[s];
      const auto& yb = y.buckets()[s];
      if (xb.empty() || yb.empty()) continue;
      const auto& xs = xb.elements();
      const auto& ys = yb.elements();
      // An element lying inside the other closure contributes itself whole,
      // and every meet against it is dominated by it: its row drops out.
      std::vector<bool> xin(xs.size()), yin(ys.size());
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (yb.dominates(xs[i])) {
          xin[i] = true;
          out.insert(s, xs[i]);
        }
      for (std::size_t j = 0; j < ys.size(); ++j)
        if (xb.dominates(ys[j])) {
          yin[j] = true;
          out.insert(s, ys[j]);
        }
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xin[i]) continue;
        for (std::size_t j = 0; j < ys.size(); ++j) {
          if (yin[j]) continue;
          if (auto m = meet_rank(xs[i], ys[j])) out.insert(s, std::move(*m));
        }
      }
    }
    return out;
  }

  // Initial element: (initial1, <{(initial2, k2)}, {}>).
  bool contains_initial(const chain& c) const {
    for (const auto& rp : c.buckets()[a1->initial].elements())
      if (rp.o_empty() && rp.fs_at(ctx2.a->initial) <= ctx2.k) return true;
    return false;
  }
};

template <class R>
bool is_included_typed(const nbw& a1, const nbw& a2,
                       const solve_options& opt) {
  product_domain<R> d(a1, a2);
  return !gen_buchi_fixpoint(d, opt);
}

}  // namespace detail

template <class R>
std::vector<product_elem<R>> pre_product(const nbw& a1, const nbw& a2,
                                         letter_id sigma,
                                         const product_elem<R>& e) {
  detail::check_nbw_arg(a1, "pre_product");
  detail::check_nbw_arg(a2, "pre_product");
  if (sigma >= a1.letters() || sigma >= a2.letters())
    throw std::invalid_argument("pre_product: letter out of range");
  if (e.a1 >= a1.n)
    throw std::invalid_argument("pre_product: left state out of range");
  detail::rank_context<R> ctx2(a2);
  if (!ctx2.pair_ok(e.rp))
    throw std::invalid_argument("pre_product: invalid rank pair");
  std::vector<product_elem<R>> out;
  state_set target(a1.n);
  target.set(e.a1);
  state_set preds = pre_nbw(a1, sigma, target);
  if (preds.empty()) return out;
  auto rps = detail::pre_rank_ctx(ctx2, sigma, e.rp);
  preds.for_each([&](state_id s) {
    for (const auto& rp : rps) out.push_back(product_elem<R>{s, rp});
  });
  return out;
}

// Language inclusion L(a1) included in L(a2), decided on the product of a1
// with the rank-pair complement domain of a2 under the generalized condition
// {accepting1 x Loc2, Loc1 x o-empty}. Alphabets must agree by name and
// order.
inline bool is_included(const nbw& a1, const nbw& a2,
                        const solve_options& opt = {}) {
  detail::check_nbw_arg(a1, "is_included");
  detail::check_nbw_arg(a2, "is_included");
  if (a1.alphabet != a2.alphabet)
    throw std::invalid_argument("is_included: alphabets differ");
  std::uint32_t k = rank_bound(a2);
  if (k + 1 <= 0xff)
    return detail::is_included_typed<std::uint8_t>(a1, a2, opt);
  if (k + 1 <= 0xffff)
    return detail::is_included_typed<std::uint16_t>(a1, a2, opt);
  return detail::is_included_typed<std::uint32_t>(a1, a2, opt);
}

}  // namespace omega
