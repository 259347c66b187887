#include "charcol/lifting.hpp"

#include <stdexcept>

#include "charcol/errors.hpp"

namespace charcol {

Lifter::Lifter(std::shared_ptr<const Chain> chain, LiftPolicy policy) : chain_(std::move(chain)), policy_(policy) {}

ReprVector Lifter::lift(const WreathIrrepLabel& w, int n) const {
  int k = w.size();
  if (n < k) throw std::invalid_argument("lift target level below source level");
  std::lock_guard lock(mu_);
  auto key = std::make_pair(w, n);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!in_progress_.insert(key).second)
    throw std::logic_error("lift recursion revisited " + chain_->format(w));
  auto v = compute(w, n);
  in_progress_.erase(key);
  return memo_.emplace(key, std::move(v)).first->second;
}

const Lifter& Lifter::symmetric_lifter() const {
  std::lock_guard lock(mu_);
  if (!sym_) sym_ = std::make_unique<Lifter>(Chain::symmetric(), policy_);
  return *sym_;
}

LiftRecord Lifter::record(const WreathIrrepLabel& w, int n) const { return {w, w.size(), lift(w, n)}; }

ReprVector Lifter::conjugated(const ReprVector& v) const {
  const auto& b = chain_->basis(v.level);
  auto out = ReprVector::zero(v.level, b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (v.coeffs[i] == 0) continue;
    auto conj = WreathIrrepLabel::single(0, conjugate(b[i].shape_of(0)));
    out.coeffs[chain_->index_of(conj, v.level)] = v.coeffs[i];
  }
  return out;
}

// dim(U_1)^-(n-k) times the label with n-k boxes added to the top row of its first slot.
ReprVector Lifter::pad_first_slot(const WreathIrrepLabel& w, int n) const {
  int k = w.size();
  const auto& first = w.slots().front();
  auto padded = w.with_shape(first.h_irrep, first.shape.with_first_row_extended(n - k));
  auto v = chain_->basis_vector(padded, n);
  Integer d = chain_->base().table.irreps[first.h_irrep].dim;
  Integer scale = 1;
  for (int i = 0; i < n - k; ++i) scale *= d;
  v *= Rational(1) / Rational(scale);
  return v;
}

ReprVector Lifter::compute(const WreathIrrepLabel& w, int n) const {
  int k = w.size();
  if (n == k) return chain_->basis_vector(w, n);
  if (w.slots().empty()) {
    // Res^n of (U_0; [n]) is dim(U_0)^n times the empty label.
    auto v = chain_->basis_vector(WreathIrrepLabel::single(0, Partition({n})), n);
    Integer scale = 1;
    for (int i = 0; i < n; ++i) scale *= chain_->base().table.irreps[0].dim;
    v *= Rational(1) / Rational(scale);
    return v;
  }
  if (policy_ == LiftPolicy::SignBalanced && chain_->is_symmetric() && w.shape_of(0).content_sum() < 0)
    return conjugated(lift(WreathIrrepLabel::single(0, conjugate(w.shape_of(0))), n));

  if (policy_ == LiftPolicy::SignBalanced && !chain_->is_symmetric() && w.slots().size() == 1) {
    // (U^k; lambda): the symmetric-group lift of lambda placed in slot U.
    const auto& slot = w.slots().front();
    auto sym = symmetric_lifter().lift(WreathIrrepLabel::single(0, slot.shape), n);
    const auto& sb = Chain::symmetric()->basis(n);
    Integer d = chain_->base().table.irreps[slot.h_irrep].dim;
    Integer scale = 1;
    for (int i = 0; i < n - k; ++i) scale *= d;
    auto out = ReprVector::zero(n, chain_->dim(n));
    for (std::size_t i = 0; i < sb.size(); ++i)
      if (sym.coeffs[i] != 0)
        out.coeffs[chain_->index_of(WreathIrrepLabel::single(slot.h_irrep, sb[i].shape_of(0)), n)] =
            sym.coeffs[i] / Rational(scale);
    return out;
  }

  auto out = pad_first_slot(w, n);
  auto down = chain_->restrict(out, n - k);
  const auto& b = chain_->basis(k);
  Rational own = down.coeffs[chain_->index_of(w, k)];
  if (own == 0) throw std::logic_error("padded label does not restrict onto its source");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == w || down.coeffs[i] == 0) continue;
    if (!lift_order_below(b[i], w))
      throw std::logic_error("lift term " + chain_->format(b[i]) + " is not below " + chain_->format(w));
    auto lower = lift(b[i], n);
    lower *= down.coeffs[i];
    out -= lower;
  }
  out *= Rational(1) / own;
  return out;
}

bool lift_order_below(const WreathIrrepLabel& b, const WreathIrrepLabel& a) {
  if (a.slots().empty()) return false;
  int first = a.slots().front().h_irrep;
  bool others_smaller = false;
  for (auto& s : b.slots())
    if (s.h_irrep != first && s.shape.size() > a.shape_of(s.h_irrep).size()) return false;
  for (auto& s : a.slots()) {
    if (s.h_irrep == first) continue;
    if (b.shape_of(s.h_irrep).size() < s.shape.size()) others_smaller = true;
  }
  int below_b = b.shape_of(first).below_first_row();
  int below_a = a.shape_of(first).below_first_row();
  return below_b < below_a || (below_b <= below_a && others_smaller);
}

LiftRecord lift_sym(const Partition& w, int n, LiftPolicy policy) {
  Lifter lifter(Chain::symmetric(), policy);
  return lifter.record(w.empty() ? WreathIrrepLabel{} : WreathIrrepLabel::single(0, w), n);
}

LiftRecord lift_wreath(std::shared_ptr<const Chain> chain, const WreathIrrepLabel& w, int n, LiftPolicy policy) {
  Lifter lifter(std::move(chain), policy);
  return lifter.record(w, n);
}

bool lift_is_exact(const Chain& chain, const LiftRecord& r) {
  auto down = chain.restrict(r.vector, r.vector.level - r.source_level);
  return down == chain.basis_vector(r.source, r.source_level);
}

ReprVector lift_column_input(const Lifter& lifter, const LabelledTable& table, const ColoredCycleType& c, int n) {
  int col = table.class_index(c);
  if (col < 0) throw UsageError("class " + lifter.chain().format(c) + " is not in the level table");
  int k = c.size();
  if (n < k) throw UsageError("class level exceeds target level");
  auto out = ReprVector::zero(n, lifter.chain().dim(n));
  for (std::size_t i = 0; i < table.irreps.size(); ++i) {
    const Integer& chi = table.values[i][col];
    if (chi == 0) continue;
    auto v = lifter.lift(table.irreps[i], n);
    v *= Rational(chi);
    out += v;
  }
  return out;
}

}  // namespace charcol
