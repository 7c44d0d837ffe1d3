#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omega/antichain.hpp"
#include "omega/automata.hpp"

namespace omega {

// Ranks run over [0, k] plus the sentinel top = k + 1 standing for "absent"
// (infinite rank). k is even, so top is odd.
inline std::uint32_t rank_bound(const nbw& a) {
  return 2 * (a.n - a.accepting_mask().count());
}

// Flat rank function; value type is picked from k at construction time by
// the callers (uint8_t while k + 1 fits, wider otherwise).
template <class R>
using rank_fn = std::vector<R>;

// Pair <fs, fo> of rank functions, the canonical representative of a set of
// ranked subset pairs: fs bounds the run spread, fo the owing part; fo all
// top encodes the o-empty stratum. Invariants: fs <= fo pointwise and both
// components are even-or-top on accepting states of the underlying
// automaton. Stored packed (fs then fo) with a precomputed sum so most
// dominance checks fail on one integer compare.
template <class R>
class rank_pair {
 public:
  rank_pair() = default;

  rank_pair(const rank_fn<R>& fs, const rank_fn<R>& fo, R top)
      : n_(static_cast<std::uint32_t>(fs.size())), top_(top) {
    if (fs.size() != fo.size())
      throw std::invalid_argument("rank_pair: component size mismatch");
    v_.reserve(2 * n_);
    v_.insert(v_.end(), fs.begin(), fs.end());
    v_.insert(v_.end(), fo.begin(), fo.end());
    refresh();
  }

  std::uint32_t n() const { return n_; }
  R top() const { return top_; }
  std::uint32_t sum() const { return sum_; }

  const R* fs() const { return v_.data(); }
  const R* fo() const { return v_.data() + n_; }
  R fs_at(state_id i) const { return v_[i]; }
  R fo_at(state_id i) const { return v_[n_ + i]; }

  rank_fn<R> fs_fn() const { return rank_fn<R>(fs(), fs() + n_); }
  rank_fn<R> fo_fn() const { return rank_fn<R>(fo(), fo() + n_); }

  // fo = all top <=> the represented pairs have o = {}.
  bool o_empty() const { return fo_top_; }

  bool operator==(const rank_pair& o) const {
    return n_ == o.n_ && top_ == o.top_ && v_ == o.v_;
  }
  bool operator!=(const rank_pair& o) const { return !(*this == o); }

 private:
  void refresh() {
    sum_ = 0;
    fo_top_ = true;
    for (std::uint32_t i = 0; i < n_; ++i) sum_ += v_[i];
    for (std::uint32_t i = n_; i < 2 * n_; ++i) {
      sum_ += v_[i];
      if (v_[i] != top_) fo_top_ = false;
    }
  }

  std::uint32_t n_ = 0;
  std::uint32_t sum_ = 0;
  R top_ = 0;
  bool fo_top_ = false;
  std::vector<R> v_;
};

// Pointwise order on pairs within the same o-stratum. Smaller pairs denote
// larger closures, so antichains of interest keep the leq_rank-minimal
// representatives.
template <class R>
bool leq_rank(const rank_pair<R>& p, const rank_pair<R>& q) {
  assert(p.n() == q.n());
  if (p.o_empty() != q.o_empty() || p.sum() > q.sum()) return false;
  const R* a = p.fs();
  const R* b = q.fs();
  for (std::uint32_t i = 0, e = 2 * p.n(); i < e; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Domination order fed to the antichain: e is subsumed by a iff a <= e
// pointwise (reversal: minimal representatives stand for maximal pairs).
template <class R>
struct rank_leq {
  bool operator()(const rank_pair<R>& e, const rank_pair<R>& a) const {
    return leq_rank(a, e);
  }
};

// Characteristic rank function of a set of (state, rank) atoms: the least
// rank per state, top for absent states. Rejects ranks above k and odd ranks
// on accepting states.
template <class R>
rank_fn<R> rank_characteristic(
    const nbw& a, std::uint32_t k,
    const std::vector<std::pair<state_id, std::uint32_t>>& atoms) {
  state_set alpha = a.accepting_mask();
  R top = static_cast<R>(k + 1);
  rank_fn<R> f(a.n, top);
  for (auto [s, r] : atoms) {
    if (s >= a.n)
      throw std::invalid_argument("rank_characteristic: state out of range");
    if (r > k)
      throw std::invalid_argument("rank_characteristic: rank above bound");
    if (alpha.test(s) && (r & 1))
      throw std::invalid_argument(
          "rank_characteristic: odd rank on accepting state");
    if (r < f[s]) f[s] = static_cast<R>(r);
  }
  return f;
}

// leq_rank-minimal elements of the union.
template <class R>
std::vector<rank_pair<R>> min_union(const std::vector<rank_pair<R>>& l1,
                                    const std::vector<rank_pair<R>>& l2) {
  antichain<rank_pair<R>, rank_leq<R>> acc;
  for (const auto& p : l1) acc.insert(p);
  for (const auto& p : l2) acc.insert(p);
  return acc.elements();
}

// Representative of the intersection of two closures: componentwise max when
// the strata agree and the o-part stays representable, otherwise nothing.
template <class R>
std::optional<rank_pair<R>> meet_rank(const rank_pair<R>& p,
                                      const rank_pair<R>& q) {
  assert(p.n() == q.n() && p.top() == q.top());
  if (p.o_empty() != q.o_empty()) return std::nullopt;
  const std::uint32_t n = p.n();
  rank_fn<R> fs(n), fo(n);
  bool fo_top = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    fs[i] = std::max(p.fs_at(i), q.fs_at(i));
    fo[i] = std::max(p.fo_at(i), q.fo_at(i));
    if (fo[i] != p.top()) fo_top = false;
  }
  if (!p.o_empty() && fo_top) return std::nullopt;
  return rank_pair<R>(fs, fo, p.top());
}

}  // namespace omega
