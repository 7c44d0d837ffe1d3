#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace omega {

// Antichain of leq-maximal elements. Leq(a, b) reads "a is dominated by b";
// it must be a partial order on the stored representatives. The downward
// closure of the stored elements is the set the antichain denotes, and all
// operations are understood up to that closure.
template <class E, class Leq>
class antichain {
 public:
  antichain() = default;
  explicit antichain(Leq leq) : leq_(std::move(leq)) {}

  const std::vector<E>& elements() const { return es_; }
  bool empty() const { return es_.empty(); }
  std::size_t size() const { return es_.size(); }

  // False iff e was already dominated. Removes elements e dominates.
  bool insert(E e) {
    for (const auto& a : es_)
      if (leq_(e, a)) return false;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < es_.size(); ++i) {
      if (!leq_(es_[i], e)) {
        if (keep != i) es_[keep] = std::move(es_[i]);
        ++keep;
      }
    }
    es_.resize(keep);
    es_.push_back(std::move(e));
    return true;
  }

  void unite(const antichain& o) {
    for (const auto& e : o.es_) insert(e);
  }

  // Unite o into this and return the elements of o that were not already
  // dominated: the growth frontier. o is an antichain, so the survivors are
  // pairwise incomparable and can be adopted without re-checking.
  antichain absorb(const antichain& o) {
    antichain fresh;
    for (const auto& e : o.es_)
      if (insert(e)) fresh.es_.push_back(e);
    return fresh;
  }

  // e in the downward closure?
  bool dominates(const E& e) const {
    for (const auto& a : es_)
      if (leq_(e, a)) return true;
    return false;
  }

  // closure(this) included in closure(o)? Elementwise domination suffices.
  bool below(const antichain& o) const {
    for (const auto& e : es_)
      if (!o.dominates(e)) return false;
    return true;
  }

 private:
  [[no_unique_address]] Leq leq_;
  std::vector<E> es_;
};

}  // namespace omega
