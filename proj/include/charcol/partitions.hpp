#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "charcol/exact.hpp"

namespace charcol {

/// A Young diagram stored as its weakly decreasing row lengths.
///
/// Names an irreducible representation of S_n and, through CycleType, a
/// conjugacy class of S_n. The empty diagram is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Boxes below the first row.
  int below_first_row() const { return empty() ? 0 : size_ - parts_[0]; }

  /// Sum of box contents (column - row). Its sign is the sign of chi((12)).
  long content_sum() const;

  /// Diagrams obtained by deleting one removable corner, top row first.
  std::vector<Partition> remove_one_box() const;
  /// Diagrams obtained by adding one box, top row first.
  std::vector<Partition> add_one_box() const;

  Partition with_first_row_extended(int extra) const;

  /// m_i for every part size i present.
  std::map<int, int> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the row sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::string to_string(const Partition& p);
/// Accepts "[3,2,1]", "[]" and tolerates blanks; throws std::invalid_argument.
Partition parse_partition(const std::string& text);

/// All partitions of n in canonical (descending lexicographic) order.
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& p);

/// Hook length formula.
Integer dim_irrep(const Partition& p);

/// Canonical order across sizes: more boxes first, then descending lexicographic.
bool canonical_before(const Partition& a, const Partition& b);

/// The conjugate-mirrored order used by hand-drawn tables: diagrams that are
/// lexicographically above their conjugate (canonical order), then
/// self-conjugate diagrams, then the conjugates of the first group reversed.
std::vector<Partition> mirrored_order(int n);

/// A conjugacy class of S_n, labelled by the cycle lengths of its elements.
struct CycleType {
  Partition shape;

  int size() const { return shape.size(); }
  int fixed_points() const;
  /// Number of non-fixed points; the smallest k with the class inside S_k.
  int support() const { return size() - fixed_points(); }
  /// Odd iff the number of even-length cycles is odd.
  bool is_odd() const;
  CycleType with_fixed_points(int total) const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.shape <=> b.shape; }
};

/// n! / prod(i^{m_i} m_i!)
Integer class_size(const CycleType& c);

/// Cycle types of n ordered ascending lexicographically, identity first.
std::vector<CycleType> enumerate_cycle_types(int n);

}  // namespace charcol
