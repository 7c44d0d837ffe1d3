#pragma once

#include <chrono>
#include <stdexcept>
#include <utility>

namespace omega {

struct timeout_error : std::runtime_error {
  timeout_error() : std::runtime_error("deadline exceeded") {}
};

// Cooperative deadline; default-constructed means unlimited. Checked once per
// fixpoint iteration, so overruns are bounded by a single iteration.
class deadline {
 public:
  deadline() = default;

  static deadline after(double seconds) {
    deadline d;
    d.enabled_ = true;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const {
    return enabled_ && std::chrono::steady_clock::now() >= at_;
  }

  void check() const {
    if (expired()) throw timeout_error();
  }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point at_{};
};

struct solve_options {
  bool early_stop = true;
  deadline dl{};
};

namespace detail {

// Least fixpoint of x -> pre(x) | base as a worklist: pre only ever runs on
// the growth frontier. An element evicted after entering the frontier leaves
// a dominating newcomer behind, and pre is monotone, so nothing is lost.
template <class Dom, class Chain>
Chain mu_iterate(const Dom& d, const Chain& base, const deadline& dl) {
  Chain x = d.empty_chain();
  Chain delta = x.absorb(base);
  while (!delta.empty()) {
    dl.check();
    delta = x.absorb(d.pre(delta));
  }
  return x;
}

}  // namespace detail

// Greatest fixpoint of y -> mu x. pre(x) | (pre(y) & alpha); returns whether
// the initial element lies in it. meet_alpha(pre(y)) is computed once per
// outer round. With early_stop, gives up as soon as the initial element
// leaves the (decreasing) outer iterate, which cannot change the answer.
template <class Dom>
bool buchi_fixpoint(const Dom& d, const solve_options& opt = {}) {
  auto y = d.top();
  for (;;) {
    opt.dl.check();
    auto base = d.meet_alpha(d.pre(y));
    auto nxt = detail::mu_iterate(d, base, opt.dl);
    if (opt.early_stop && !d.contains_initial(nxt)) return false;
    if (y.below(nxt)) return d.contains_initial(nxt);
    y = std::move(nxt);
  }
}

// Same with a generalized condition of two accepting sets: the outer iterate
// is the meet of one mu-fixpoint per set, both seeded from the same pre(y).
template <class Dom>
bool gen_buchi_fixpoint(const Dom& d, const solve_options& opt = {}) {
  auto y = d.top();
  for (;;) {
    opt.dl.check();
    auto p = d.pre(y);
    auto x1 = detail::mu_iterate(d, d.meet_beta1(p), opt.dl);
    auto x2 = detail::mu_iterate(d, d.meet_beta2(p), opt.dl);
    auto nxt = d.meet(x1, x2);
    if (opt.early_stop && !d.contains_initial(nxt)) return false;
    if (y.below(nxt)) return d.contains_initial(nxt);
    y = std::move(nxt);
  }
}

}  // namespace omega
