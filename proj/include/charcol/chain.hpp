#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "charcol/exact.hpp"
#include "charcol/hgroup.hpp"
#include "charcol/labels.hpp"
#include "charcol/sparse.hpp"

namespace charcol {

/// Exact coefficients over the level-n basis of a chain.
struct ReprVector {
  int level = 0;
  std::vector<Rational> coeffs;

  static ReprVector zero(int level, std::size_t dim) { return {level, std::vector<Rational>(dim, 0)}; }

  ReprVector& operator+=(const ReprVector& o);
  ReprVector& operator-=(const ReprVector& o);
  ReprVector& operator*=(const Rational& s);
  friend bool operator==(const ReprVector&, const ReprVector&) = default;
};

/// The chain H^0 x| S_0 <= H^1 x| S_1 <= ... for a fixed H. Trivial H gives
/// the symmetric groups. Bases and operators are built per level on demand and
/// kept for the lifetime of the chain.
class Chain {
 public:
  Chain(FiniteGroup h, std::string id);

  /// "sym", "z2wreath", "wreath:<H>" with H a built-in name or table path,
  /// or a bare path to a GroupTable JSON file.
  static std::shared_ptr<const Chain> from_spec(const std::string& spec);
  static std::shared_ptr<const Chain> symmetric();

  const std::string& id() const { return id_; }
  const FiniteGroup& base() const { return h_; }
  /// M = |H|, the Heisenberg scaling.
  Integer scaling() const { return h_.table.order; }
  bool is_symmetric() const { return h_.table.order == 1; }
  int num_h_irreps() const { return static_cast<int>(h_.table.irreps.size()); }
  int num_h_classes() const { return static_cast<int>(h_.table.classes.size()); }

  /// |H|^n n!
  Integer order(int n) const;

  const std::vector<WreathIrrepLabel>& basis(int n) const;
  std::size_t dim(int n) const { return basis(n).size(); }
  /// Throws UsageError if the label is not in the level-n basis.
  int index_of(const WreathIrrepLabel& label, int n) const;
  ReprVector basis_vector(const WreathIrrepLabel& label, int n) const;

  /// Res: R(G_n) -> R(G_{n-1}); rows level n-1, columns level n.
  const SparseMatrix& res(int n) const;
  /// X = Res_n^T Res_n on R(G_n).
  const SparseMatrix& ind_res(int n) const;

  ReprVector restrict(const ReprVector& v) const;
  ReprVector restrict(const ReprVector& v, int steps) const;
  ReprVector induce(const ReprVector& v) const;

  std::string format(const WreathIrrepLabel& label) const;
  WreathIrrepLabel parse_label(const std::string& text) const;
  std::string format(const ColoredCycleType& c) const;
  ColoredCycleType parse_class(const std::string& text, int n_for_identity = -1) const;

  /// Class size from the centralizer formula prod m! (i |C_H(h)|)^m; needs
  /// only the table of H.
  Integer class_size(const ColoredCycleType& c) const;
  /// Character of Ind(t) = permutation character on G_n / G_{n-1}.
  Integer ind_t_character(const ColoredCycleType& c) const;

  /// Table of G_k: the S_k table for trivial H, else the brute-force table.
  LabelledTable table(int k) const;
  LabelledTable table(int k, const Integer& max_order) const;

 private:
  FiniteGroup h_;
  std::string id_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, std::vector<WreathIrrepLabel>> basis_;
  mutable std::map<int, std::map<WreathIrrepLabel, int>> index_;
  mutable std::map<int, SparseMatrix> res_;
  mutable std::map<int, SparseMatrix> x_;
};

/// (Res_{n-l+1} ... Res_n)^T (Res_{n-l+1} ... Res_n), the literal Ind^l Res^l.
SparseMatrix brute_indl_resl(const Chain& chain, int n, int l);

/// {"n", "basis", "entries": [[row,col,value]...]} sorted by (row, col).
nlohmann::ordered_json operator_dump(const Chain& chain, int n, const SparseMatrix& m);

/// Integers as JSON numbers when they fit, otherwise "p/q" / digit strings.
nlohmann::ordered_json rational_to_json(const Rational& q);

/// {label: coefficient} over nonzero coefficients in basis order.
nlohmann::ordered_json vector_to_json(const Chain& chain, const ReprVector& v);

}  // namespace charcol
