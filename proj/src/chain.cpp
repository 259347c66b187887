#include "charcol/chain.hpp"

#include <stdexcept>

#include "charcol/errors.hpp"

namespace charcol {

ReprVector& ReprVector::operator+=(const ReprVector& o) {
  if (level != o.level || coeffs.size() != o.coeffs.size()) throw std::invalid_argument("level mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

ReprVector& ReprVector::operator-=(const ReprVector& o) {
  if (level != o.level || coeffs.size() != o.coeffs.size()) throw std::invalid_argument("level mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

ReprVector& ReprVector::operator*=(const Rational& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

Chain::Chain(FiniteGroup h, std::string id) : h_(std::move(h)), id_(std::move(id)) {}

std::shared_ptr<const Chain> Chain::from_spec(const std::string& spec) {
  if (spec == "sym" || spec == "trivial") return symmetric();
  if (spec == "z2wreath" || spec == "Z2") return std::make_shared<Chain>(builtin_group("Z2"), "z2wreath");
  std::string h = spec.rfind("wreath:", 0) == 0 ? spec.substr(7) : spec;
  if (h.empty()) throw UsageError("empty chain spec");
  if (h == "trivial") return symmetric();
  if (h != "Z2" && h.find(".json") == std::string::npos)
    throw UsageError("unknown chain '" + spec + "' (expected sym, z2wreath, wreath:<H> or a table path)");
  auto g = builtin_group(h);
  return std::make_shared<Chain>(std::move(g), "wreath:" + h);
}

std::shared_ptr<const Chain> Chain::symmetric() {
  static auto chain = std::make_shared<const Chain>(builtin_group("trivial"), "sym");
  return chain;
}

Integer Chain::order(int n) const {
  Integer o = factorial(n);
  for (int i = 0; i < n; ++i) o *= h_.table.order;
  return o;
}

const std::vector<WreathIrrepLabel>& Chain::basis(int n) const {
  if (n < 0) throw std::invalid_argument("negative level");
  std::lock_guard lock(mu_);
  auto it = basis_.find(n);
  if (it != basis_.end()) return it->second;
  auto labels = enumerate_wreath_labels(num_h_irreps(), n);
  auto& idx = index_[n];
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], static_cast<int>(i));
  return basis_.emplace(n, std::move(labels)).first->second;
}

int Chain::index_of(const WreathIrrepLabel& label, int n) const {
  basis(n);
  std::lock_guard lock(mu_);
  const auto& idx = index_.at(n);
  auto it = idx.find(label);
  if (it == idx.end()) throw UsageError("label " + format(label) + " is not an irrep at level " + std::to_string(n));
  return it->second;
}

ReprVector Chain::basis_vector(const WreathIrrepLabel& label, int n) const {
  auto v = ReprVector::zero(n, dim(n));
  v.coeffs[index_of(label, n)] = 1;
  return v;
}

const SparseMatrix& Chain::res(int n) const {
  if (n < 1) throw std::invalid_argument("Res needs level >= 1");
  std::lock_guard lock(mu_);
  auto it = res_.find(n);
  if (it != res_.end()) return it->second;
  const auto& cols = basis(n);
  const auto& rows = basis(n - 1);
  std::vector<SparseMatrix::Entry> entries;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto& slot : cols[c].slots())
      for (auto& smaller : slot.shape.remove_one_box())
        entries.push_back({index_of(cols[c].with_shape(slot.h_irrep, smaller), n - 1), static_cast<int>(c),
                           h_.table.irreps[slot.h_irrep].dim});
  return res_.emplace(n, SparseMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(entries)))
      .first->second;
}

const SparseMatrix& Chain::ind_res(int n) const {
  std::lock_guard lock(mu_);
  auto it = x_.find(n);
  if (it != x_.end()) return it->second;
  const auto& r = res(n);
  return x_.emplace(n, r.transpose() * r).first->second;
}

ReprVector Chain::restrict(const ReprVector& v) const {
  return {v.level - 1, res(v.level).apply(v.coeffs)};
}

ReprVector Chain::restrict(const ReprVector& v, int steps) const {
  auto out = v;
  for (int i = 0; i < steps; ++i) out = restrict(out);
  return out;
}

ReprVector Chain::induce(const ReprVector& v) const {
  return {v.level + 1, res(v.level + 1).transpose().apply(v.coeffs)};
}

std::string Chain::format(const WreathIrrepLabel& label) const {
  return format_label(label, h_.table.irrep_labels());
}

WreathIrrepLabel Chain::parse_label(const std::string& text) const {
  try {
    return charcol::parse_label(text, h_.table.irrep_labels());
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad irrep label '" + text + "': " + e.what());
  }
}

std::string Chain::format(const ColoredCycleType& c) const {
  return format_class(c, h_.table.class_labels());
}

ColoredCycleType Chain::parse_class(const std::string& text, int n_for_identity) const {
  try {
    return charcol::parse_class(text, h_.table.class_labels(), n_for_identity);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad class label '" + text + "': " + e.what());
  }
}

Integer Chain::class_size(const ColoredCycleType& c) const {
  if (static_cast<int>(c.by_class.size()) != num_h_classes()) throw std::invalid_argument("class arity mismatch");
  Integer centralizer = 1;
  for (int hc = 0; hc < num_h_classes(); ++hc) {
    Integer h_centralizer = h_.table.order / h_.table.classes[hc].size;
    for (auto [len, m] : c.by_class[hc].multiplicities()) {
      centralizer *= factorial(m);
      for (int j = 0; j < m; ++j) centralizer *= len * h_centralizer;
    }
  }
  return order(c.size()) / centralizer;
}

Integer Chain::ind_t_character(const ColoredCycleType& c) const {
  int n = c.size();
  if (n == 0 || c.trivial_fixed_points() == 0) return 0;
  auto below = c.with_trivial_fixed_points(n - 1);
  Rational v = Rational(order(n) * class_size(below)) / Rational(order(n - 1) * class_size(c));
  if (!is_integer(v)) throw std::logic_error("non-integral permutation character");
  return v.get_num();
}

LabelledTable Chain::table(int k) const { return table(k, default_max_order()); }

LabelledTable Chain::table(int k, const Integer& max_order) const {
  if (is_symmetric()) return symmetric_character_table(k);
  return wreath_char_table(h_, k, max_order);
}

SparseMatrix brute_indl_resl(const Chain& chain, int n, int l) {
  if (l < 1 || l > n) throw std::invalid_argument("need 1 <= l <= n");
  SparseMatrix down = chain.res(n);
  for (int j = n - 1; j >= n - l + 1; --j) down = chain.res(j) * down;
  return down.transpose() * down;
}

nlohmann::ordered_json operator_dump(const Chain& chain, int n, const SparseMatrix& m) {
  nlohmann::ordered_json j;
  j["n"] = n;
  auto labels = nlohmann::ordered_json::array();
  for (auto& b : chain.basis(n)) labels.push_back(chain.format(b));
  j["basis"] = labels;
  auto entries = nlohmann::ordered_json::array();
  for (auto& e : m.row_major()) {
    entries.push_back({e.row, e.col, rational_to_json(Rational(e.value))});
  }
  j["entries"] = entries;
  return j;
}

nlohmann::ordered_json rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

nlohmann::ordered_json vector_to_json(const Chain& chain, const ReprVector& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  const auto& b = chain.basis(v.level);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (v.coeffs[i] != 0) j[chain.format(b[i])] = rational_to_json(v.coeffs[i]);
  return j;
}

}  // namespace charcol
