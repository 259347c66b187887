#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charcol/exact.hpp"
#include "charcol/labels.hpp"
#include "charcol/partitions.hpp"

namespace charcol {

/// Character table of a finite group with rational-integer character values.
/// The first class is the identity, so values[0] of every irrep is its dimension.
struct GroupTable {
  struct ClassEntry {
    std::string label;
    Integer size;
  };
  struct IrrepEntry {
    std::string label;
    Integer dim;
    std::vector<Integer> values;
  };

  std::string name;
  Integer order;
  std::vector<ClassEntry> classes;
  std::vector<IrrepEntry> irreps;

  std::vector<std::string> class_labels() const;
  std::vector<std::string> irrep_labels() const;
};

/// Throws ValidationError naming the first violated relation: class sizes
/// summing to the order, values[0] = dim, square table, row orthogonality.
void validate_table(const GroupTable& table);
/// Column orthogonality: sum_u chi_u(a) chi_u(b) = [a=b] |G| / |[a]|.
void validate_columns(const GroupTable& table);

nlohmann::ordered_json table_to_json(const GroupTable& table);
/// Parses and validates; throws UsageError on schema problems.
GroupTable table_from_json(const nlohmann::ordered_json& j);
GroupTable load_table(const std::string& path);

/// The base group H: its character table and, for built-ins, an explicit
/// multiplication table so that wreath products can be enumerated.
struct FiniteGroup {
  GroupTable table;
  std::vector<std::vector<int>> mult;  // empty when only the table is known
  std::vector<int> element_class;      // class index of every element; element 0 = identity

  bool has_elements() const { return !mult.empty(); }
  int num_elements() const { return static_cast<int>(mult.size()); }
  int inverse(int x) const;
};

/// "trivial", "Z2", or a path to a GroupTable JSON file.
FiniteGroup builtin_group(const std::string& name);
GroupTable builtin_table(const std::string& name);

/// Element of H^k x| S_k. perm[i] is the image of position i;
/// (a, s)(b, r) = (a * s(b), s r) with s(b)_i = b_{s^-1(i)}.
struct WreathElement {
  std::vector<int> base;
  std::vector<int> perm;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

WreathElement multiply(const FiniteGroup& h, const WreathElement& x, const WreathElement& y);
WreathElement inverse(const FiniteGroup& h, const WreathElement& x);
WreathElement identity_element(int k);
ColoredCycleType colored_cycle_type(const FiniteGroup& h, const WreathElement& g);
/// All |H|^k k! elements; throws ResourceBoundError beyond `max_order`.
std::vector<WreathElement> enumerate_wreath(const FiniteGroup& h, int k, const Integer& max_order);

inline constexpr long kDefaultMaxOrder = 10000;
/// The override if set, else CHARCOL_MAX_ORDER, else kDefaultMaxOrder.
Integer default_max_order();
void set_max_order_override(std::optional<Integer> bound);

/// Character table with typed labels. Rows follow the chain basis order,
/// columns the canonical class order.
struct LabelledTable {
  Integer order;
  std::vector<WreathIrrepLabel> irreps;
  std::vector<ColoredCycleType> classes;
  std::vector<Integer> class_sizes;
  std::vector<std::vector<Integer>> values;  // values[irrep][class]

  int class_index(const ColoredCycleType& c) const;  // -1 if absent
  int irrep_index(const WreathIrrepLabel& l) const;  // -1 if absent
  GroupTable to_group_table(const FiniteGroup& h, const std::string& name) const;
};

/// Character table of S_k from Young permutation characters and Kostka
/// numbers. No element enumeration, so no size bound.
const LabelledTable& symmetric_character_table(int k);

/// Character table of H^k x| S_k. Trivial H routes to symmetric_character_table;
/// otherwise elements are enumerated and each array label is induced from
/// H^k x| (S_k1 x ... x S_kd) by the naive induced-character sum.
LabelledTable wreath_char_table(const FiniteGroup& h, int k, const Integer& max_order);
LabelledTable wreath_char_table(const FiniteGroup& h, int k);

/// Conjugacy class size by brute-force conjugation orbit of a representative.
Integer wreath_class_size(const FiniteGroup& h, const ColoredCycleType& c, const Integer& max_order);
Integer wreath_class_size(const FiniteGroup& h, const ColoredCycleType& c);

/// Class sizes of H^k x| S_k by counting colored cycle types over all elements.
std::vector<std::pair<ColoredCycleType, Integer>> wreath_classes(const FiniteGroup& h, int k,
                                                                const Integer& max_order);

}  // namespace charcol
