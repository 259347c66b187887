#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "charcol/chain.hpp"
#include "charcol/lifting.hpp"
#include "charcol/sparse.hpp"

namespace charcol {

/// f_l(X) = X (X - M) (X - 2M) ... (X - (l-1)M); f_0 = 1.
struct FallingFactorialPoly {
  int l = 0;
  Integer M = 1;

  /// The roots 0, M, ..., (l-1)M in application order.
  std::vector<Integer> roots() const;
  /// Coefficients of the expanded polynomial, constant term first.
  std::vector<Integer> coefficients() const;
  Integer evaluate(const Integer& x) const;
  /// Matrix polynomial, factors multiplied in root order.
  SparseMatrix evaluate(const SparseMatrix& X) const;
};

/// (X - (l-1)M) ... (X - M) X v as l matvec-and-subtract passes.
std::vector<Rational> apply_falling_factorial(const SparseMatrix& X, int l, const Integer& M,
                                              const std::vector<Rational>& v);
ReprVector apply_falling_factorial(const Chain& chain, int l, const ReprVector& v);

/// A full column of the character table of G_n.
struct CharacterColumn {
  int level = 0;
  ColoredCycleType cls;         // at level n
  std::vector<Integer> values;  // chain basis order

  friend bool operator==(const CharacterColumn&, const CharacterColumn&) = default;
};

/// Smallest k >= 1 with the class inside G_k.
int minimal_level(const Chain& chain, const ColoredCycleType& c);

/// delta = f_{n-k}(X) sum_w chi_w(c) lift(w). `c` may be given at any level
/// between its support and n. `k` defaults to minimal_level; `table`, if
/// given, is used as the level-k table instead of computing one.
CharacterColumn character_column(const Lifter& lifter, const ColoredCycleType& c, int n,
                                 std::optional<int> k = std::nullopt,
                                 const LabelledTable* table = nullptr);
CharacterColumn character_column(std::shared_ptr<const Chain> chain, const ColoredCycleType& c, int n);

/// Y = pr+ (t - s) X on the span of diagrams with chi((12)) > 0.
struct ReducedOperator {
  int level = 0;
  std::vector<Partition> plus_basis;  // canonical order
  SparseMatrix matrix;
};

/// chi_lambda((12)) > 0, decided by the sign of the content sum.
bool in_plus_basis(const Partition& p);

/// Throws UnsupportedChainError on a wreath chain.
ReducedOperator reduced_operator(const Chain& chain, int n);

struct OddColumn {
  std::vector<Integer> plus_part;  // pr+ delta over plus_basis
  CharacterColumn column;          // reconstructed full column
};

/// Column of an odd class via Y. Throws std::invalid_argument for even
/// classes and std::domain_error if some non-self-conjugate diagram and its
/// conjugate both have chi((12)) = 0, since pr+ then does not see them.
OddColumn odd_column(const Chain& chain, const CycleType& tau, int n);

}  // namespace charcol
