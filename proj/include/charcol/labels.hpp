#pragma once

#include <string>
#include <vector>

#include "charcol/partitions.hpp"

namespace charcol {

/// Irrep of H^n x| S_n in array notation: distinct H-irreps, each paired with
/// a non-empty Young diagram, total boxes n. Slots are kept sorted by H-irrep.
///
/// For trivial H every label has at most one slot (H-irrep 0) and the label
/// is just a partition.
class WreathIrrepLabel {
 public:
  struct Slot {
    int h_irrep = 0;
    Partition shape;
    friend bool operator==(const Slot&, const Slot&) = default;
    friend auto operator<=>(const Slot&, const Slot&) = default;
  };

  WreathIrrepLabel() = default;
  /// Sorts slots, drops empty shapes; throws UsageError on repeated H-irreps.
  explicit WreathIrrepLabel(std::vector<Slot> slots);
  static WreathIrrepLabel single(int h_irrep, Partition shape);

  const std::vector<Slot>& slots() const { return slots_; }
  int size() const;
  /// Shape paired with h_irrep, empty if absent.
  Partition shape_of(int h_irrep) const;
  WreathIrrepLabel with_shape(int h_irrep, Partition shape) const;

  friend bool operator==(const WreathIrrepLabel&, const WreathIrrepLabel&) = default;
  friend auto operator<=>(const WreathIrrepLabel&, const WreathIrrepLabel&) = default;

 private:
  std::vector<Slot> slots_;
};

/// Basis order: support set of H-irreps ascending, then slot shapes in
/// canonical partition order, slot by slot.
bool basis_before(const WreathIrrepLabel& a, const WreathIrrepLabel& b);

/// All labels with n boxes over an H with `num_h_irreps` irreps, in basis order.
std::vector<WreathIrrepLabel> enumerate_wreath_labels(int num_h_irreps, int n);

/// Conjugacy class of H^k x| S_k: for each H-class, the partition formed by the
/// lengths of the cycles whose cycle product lies in that class.
struct ColoredCycleType {
  std::vector<Partition> by_class;  // indexed by H-class, identity class first

  int size() const;
  /// Identity-coloured 1-cycles: the points this class fixes in the chain embedding.
  int trivial_fixed_points() const;
  ColoredCycleType with_trivial_fixed_points(int total) const;
  ColoredCycleType without_trivial_fixed_points() const;

  friend bool operator==(const ColoredCycleType&, const ColoredCycleType&) = default;
  friend auto operator<=>(const ColoredCycleType&, const ColoredCycleType&) = default;
};

ColoredCycleType identity_class(int num_h_classes, int n);

/// Table order: H-classes in order, larger total first, then ascending partition order.
bool class_before(const ColoredCycleType& a, const ColoredCycleType& b);

std::vector<ColoredCycleType> enumerate_colored_cycle_types(int num_h_classes, int n);

/// Text forms. With one H-irrep/class the plain partition text is used;
/// otherwise "label:[..];label:[..]" with empty entries omitted.
std::string format_label(const WreathIrrepLabel& label, const std::vector<std::string>& h_irrep_names);
WreathIrrepLabel parse_label(const std::string& text, const std::vector<std::string>& h_irrep_names);
std::string format_class(const ColoredCycleType& c, const std::vector<std::string>& h_class_names);
/// Also accepts "e" for the identity of level `n_for_identity`.
ColoredCycleType parse_class(const std::string& text, const std::vector<std::string>& h_class_names,
                             int n_for_identity = -1);

}  // namespace charcol
