#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "omega/base.hpp"

namespace omega {

// Positive boolean formula over state ids: constants, variables, and
// conjunction/disjunction. No negation. And/or nodes have at least two
// children; the builders collapse single-child nodes.
class formula {
 public:
  enum class kind : unsigned char { tt, ff, state, conj, disj };

  formula() = default;  // false

  static formula tt() { return formula(kind::tt); }
  static formula ff() { return formula(kind::ff); }

  static formula state(state_id s) {
    formula f(kind::state);
    f.var_ = s;
    return f;
  }

  static formula conj(std::vector<formula> kids) {
    return combine(kind::conj, std::move(kids));
  }

  static formula disj(std::vector<formula> kids) {
    return combine(kind::disj, std::move(kids));
  }

  kind node_kind() const { return kind_; }
  state_id var() const { return var_; }
  const std::vector<formula>& children() const { return kids_; }

  bool operator==(const formula& o) const {
    return kind_ == o.kind_ && var_ == o.var_ && kids_ == o.kids_;
  }
  bool operator!=(const formula& o) const { return !(*this == o); }

 private:
  explicit formula(kind k) : kind_(k) {}

  static formula combine(kind k, std::vector<formula> kids) {
    if (kids.empty())
      throw std::invalid_argument("formula: and/or needs at least one child");
    if (kids.size() == 1) return std::move(kids[0]);
    formula f(k);
    f.kids_ = std::move(kids);
    return f;
  }

  kind kind_ = kind::ff;
  state_id var_ = 0;
  std::vector<formula> kids_;
};

// X |= f for any set-like X with test(state_id).
template <class SetLike>
bool eval_formula(const formula& f, const SetLike& x) {
  switch (f.node_kind()) {
    case formula::kind::tt:
      return true;
    case formula::kind::ff:
      return false;
    case formula::kind::state:
      return x.test(f.var());
    case formula::kind::conj:
      for (const auto& k : f.children())
        if (!eval_formula(k, x)) return false;
      return true;
    case formula::kind::disj:
      for (const auto& k : f.children())
        if (eval_formula(k, x)) return true;
      return false;
  }
  return false;
}

}  // namespace omega
