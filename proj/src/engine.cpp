#include "charcol/engine.hpp"

#include <stdexcept>

#include "charcol/errors.hpp"

namespace charcol {

std::vector<Integer> FallingFactorialPoly::roots() const {
  std::vector<Integer> out;
  for (int j = 0; j < l; ++j) out.push_back(j * M);
  return out;
}

std::vector<Integer> FallingFactorialPoly::coefficients() const {
  std::vector<Integer> c{1};
  for (auto& r : roots()) {
    std::vector<Integer> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

Integer FallingFactorialPoly::evaluate(const Integer& x) const {
  Integer v = 1;
  for (auto& r : roots()) v *= x - r;
  return v;
}

SparseMatrix FallingFactorialPoly::evaluate(const SparseMatrix& X) const {
  auto id = SparseMatrix::identity(X.rows());
  auto out = id;
  for (auto& r : roots()) out = (X - r * id) * out;
  return out;
}

std::vector<Rational> apply_falling_factorial(const SparseMatrix& X, int l, const Integer& M,
                                              const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != X.cols()) throw std::invalid_argument("vector and operator levels differ");
  if (l < 0) throw std::invalid_argument("negative falling factorial length");
  auto cur = v;
  for (int j = 0; j < l; ++j) {
    auto next = X.apply(cur);
    Rational shift = Rational(j * M);
    if (shift != 0)
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= shift * cur[i];
    cur = std::move(next);
  }
  return cur;
}

ReprVector apply_falling_factorial(const Chain& chain, int l, const ReprVector& v) {
  return {v.level, apply_falling_factorial(chain.ind_res(v.level), l, chain.scaling(), v.coeffs)};
}

int minimal_level(const Chain& chain, const ColoredCycleType& c) {
  int support = c.size() - c.trivial_fixed_points();
  return std::max(1, support);
}

namespace {

std::vector<Integer> to_integers(const std::vector<Rational>& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (auto& q : v) {
    if (!is_integer(q)) throw std::logic_error("character value " + to_string(q) + " is not an integer");
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace

CharacterColumn character_column(const Lifter& lifter, const ColoredCycleType& c, int n, std::optional<int> k,
                                 const LabelledTable* table) {
  const Chain& chain = lifter.chain();
  if (static_cast<int>(c.by_class.size()) != chain.num_h_classes()) throw UsageError("class does not match H");
  if (c.size() > n) throw UsageError("class " + chain.format(c) + " does not fit at level " + std::to_string(n));
  int support = c.size() - c.trivial_fixed_points();
  int kk = k.value_or(minimal_level(chain, c));
  if (kk < support || kk > n) throw UsageError("table level must lie between the class support and n");
  auto ck = c.with_trivial_fixed_points(kk);

  LabelledTable computed;
  if (!table) {
    try {
      computed = chain.table(kk);
    } catch (const ResourceBoundError& e) {
      throw ResourceBoundError(std::string(e.what()) + "; supply the level-" + std::to_string(kk) +
                               " character table as a JSON GroupTable");
    }
    table = &computed;
  }
  auto input = lift_column_input(lifter, *table, ck, n);
  auto delta = apply_falling_factorial(chain, n - kk, input);
  return {n, c.with_trivial_fixed_points(n), to_integers(delta.coeffs)};
}

CharacterColumn character_column(std::shared_ptr<const Chain> chain, const ColoredCycleType& c, int n) {
  Lifter lifter(std::move(chain));
  return character_column(lifter, c, n);
}

bool in_plus_basis(const Partition& p) { return p.content_sum() > 0; }

ReducedOperator reduced_operator(const Chain& chain, int n) {
  if (!chain.is_symmetric()) throw UnsupportedChainError("the reduced operator is defined for the symmetric chain only");
  if (n < 2) throw std::invalid_argument("the reduced operator needs n >= 2");
  ReducedOperator out;
  out.level = n;
  const auto& basis = chain.basis(n);
  std::vector<int> full_index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto p = basis[i].shape_of(0);
    if (in_plus_basis(p)) {
      out.plus_basis.push_back(p);
      full_index.push_back(static_cast<int>(i));
    }
  }
  const auto& X = chain.ind_res(n);
  std::vector<SparseMatrix::Entry> entries;
  int m = static_cast<int>(out.plus_basis.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int conj = chain.index_of(WreathIrrepLabel::single(0, conjugate(out.plus_basis[b])), n);
      entries.push_back({a, b, X.at(full_index[a], full_index[b]) - X.at(full_index[a], conj)});
    }
  out.matrix = SparseMatrix(m, m, std::move(entries));
  return out;
}

OddColumn odd_column(const Chain& chain, const CycleType& tau, int n) {
  if (!chain.is_symmetric()) throw UnsupportedChainError("odd_column is defined for the symmetric chain only");
  if (!tau.is_odd()) throw std::invalid_argument("odd_column needs an odd class");
  if (tau.size() > n) throw UsageError("class does not fit at level " + std::to_string(n));
  int k = tau.support();
  auto tau_k = ColoredCycleType{{tau.with_fixed_points(k).shape}};
  const auto& table = symmetric_character_table(k);
  int col = table.class_index(tau_k);

  std::shared_ptr<const Chain> sym = Chain::symmetric();
  Lifter lifter(sym);
  auto input = ReprVector::zero(n, chain.dim(n));
  for (std::size_t i = 0; i < table.irreps.size(); ++i) {
    if (!in_plus_basis(table.irreps[i].shape_of(0)) || table.values[i][col] == 0) continue;
    auto v = lifter.lift(table.irreps[i], n);
    v *= Rational(table.values[i][col]);
    input += v;
  }

  auto Y = reduced_operator(chain, n);
  std::vector<Rational> plus;
  for (auto& p : Y.plus_basis) plus.push_back(input.coeffs[chain.index_of(WreathIrrepLabel::single(0, p), n)]);
  auto pr = to_integers(apply_falling_factorial(Y.matrix, n - k, 1, plus));

  OddColumn out;
  out.plus_part = pr;
  out.column.level = n;
  out.column.cls = ColoredCycleType{{tau.with_fixed_points(n).shape}};
  const auto& basis = chain.basis(n);
  for (auto& label : basis) {
    auto p = label.shape_of(0);
    auto pos = [&](const Partition& q) {
      for (std::size_t i = 0; i < Y.plus_basis.size(); ++i)
        if (Y.plus_basis[i] == q) return static_cast<int>(i);
      return -1;
    };
    auto c = conjugate(p);
    if (int i = pos(p); i >= 0)
      out.column.values.push_back(pr[i]);
    else if (int j = pos(c); j >= 0)
      out.column.values.push_back(-pr[j]);
    else if (c == p)
      out.column.values.push_back(0);
    else
      throw std::domain_error("diagram " + to_string(p) + " and its conjugate both vanish on (12); pr+ does not determine them");
  }
  return out;
}

}  // namespace charcol
