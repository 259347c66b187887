#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>

#include "charcol/chain.hpp"

namespace charcol {

enum class LiftPolicy {
  /// Diagrams with chi((12)) < 0 are lifted as s x lift(s w); everything else
  /// by first-row padding. Gives the lifts tabulated for S_5.
  SignBalanced,
  /// First-row padding for every diagram.
  FirstRow,
};

/// A preimage of `source` (level k) under Res^(n-k).
struct LiftRecord {
  WreathIrrepLabel source;
  int source_level = 0;
  ReprVector vector;  // at level n
};

/// Lifts along one chain, memoized by (label, n). Safe to share between threads.
class Lifter {
 public:
  explicit Lifter(std::shared_ptr<const Chain> chain, LiftPolicy policy = LiftPolicy::SignBalanced);

  const Chain& chain() const { return *chain_; }
  LiftPolicy policy() const { return policy_; }

  /// Throws std::invalid_argument if n < |w|.
  ReprVector lift(const WreathIrrepLabel& w, int n) const;
  LiftRecord record(const WreathIrrepLabel& w, int n) const;

 private:
  ReprVector compute(const WreathIrrepLabel& w, int n) const;
  ReprVector pad_first_slot(const WreathIrrepLabel& w, int n) const;
  ReprVector conjugated(const ReprVector& v) const;
  const Lifter& symmetric_lifter() const;

  std::shared_ptr<const Chain> chain_;
  LiftPolicy policy_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<WreathIrrepLabel, int>, ReprVector> memo_;
  mutable std::set<std::pair<WreathIrrepLabel, int>> in_progress_;
  mutable std::unique_ptr<Lifter> sym_;  // single-slot wreath labels
};

LiftRecord lift_sym(const Partition& w, int n, LiftPolicy policy = LiftPolicy::SignBalanced);
LiftRecord lift_wreath(std::shared_ptr<const Chain> chain, const WreathIrrepLabel& w, int n,
                       LiftPolicy policy = LiftPolicy::SignBalanced);

/// True iff Res^(n-k) of the lift is exactly the source basis vector.
bool lift_is_exact(const Chain& chain, const LiftRecord& r);

/// The ordering used by the wreath procedure: b < a iff the first slot of `a`
/// loses boxes below its top row while no other slot grows, or no slot grows
/// and some other slot shrinks. The first slot is the lowest H-irrep of `a`.
bool lift_order_below(const WreathIrrepLabel& b, const WreathIrrepLabel& a);

/// sum_w chi_w(c) lift(w) at level n, for c a class of the level-k table.
ReprVector lift_column_input(const Lifter& lifter, const LabelledTable& table, const ColoredCycleType& c, int n);

}  // namespace charcol
