#include "charcol/hgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "charcol/errors.hpp"

namespace charcol {

std::vector<std::string> GroupTable::class_labels() const {
  std::vector<std::string> out;
  for (auto& c : classes) out.push_back(c.label);
  return out;
}

std::vector<std::string> GroupTable::irrep_labels() const {
  std::vector<std::string> out;
  for (auto& u : irreps) out.push_back(u.label);
  return out;
}

void validate_table(const GroupTable& t) {
  const auto nc = t.classes.size();
  if (nc == 0) throw ValidationError(t.name + ": table has no classes");
  if (t.irreps.size() != nc)
    throw ValidationError(t.name + ": number of irreps (" + std::to_string(t.irreps.size()) +
                          ") != number of classes (" + std::to_string(nc) + ")");
  if (t.classes[0].size != 1) throw ValidationError(t.name + ": first class must be the identity (size 1)");
  Integer total = 0;
  for (auto& c : t.classes) {
    if (c.size <= 0) throw ValidationError(t.name + ": class '" + c.label + "' has non-positive size");
    total += c.size;
  }
  if (total != t.order)
    throw ValidationError(t.name + ": class sizes sum to " + total.get_str() + ", not the order " + t.order.get_str());
  for (auto& u : t.irreps) {
    if (u.values.size() != nc) throw ValidationError(t.name + ": irrep '" + u.label + "' has wrong number of values");
    if (u.dim <= 0 || u.values[0] != u.dim)
      throw ValidationError(t.name + ": irrep '" + u.label + "' value at identity must equal dim");
  }
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a; b < nc; ++b) {
      Integer s = 0;
      for (std::size_t c = 0; c < nc; ++c) s += t.classes[c].size * t.irreps[a].values[c] * t.irreps[b].values[c];
      Integer expect = a == b ? t.order : Integer(0);
      if (s != expect)
        throw ValidationError(t.name + ": row orthogonality fails for irreps '" + t.irreps[a].label + "' and '" +
                              t.irreps[b].label + "' (" + s.get_str() + " != " + expect.get_str() + ")");
    }
}

void validate_columns(const GroupTable& t) {
  const auto nc = t.classes.size();
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a; b < nc; ++b) {
      Integer s = 0;
      for (auto& u : t.irreps) s += u.values[a] * u.values[b];
      Integer expect = a == b ? Integer(t.order / t.classes[a].size) : Integer(0);
      if (s != expect)
        throw ValidationError(t.name + ": column orthogonality fails for classes '" + t.classes[a].label + "' and '" +
                              t.classes[b].label + "'");
    }
}

namespace {

nlohmann::ordered_json int_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer int_from_json(const nlohmann::ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw UsageError(std::string("expected a decimal integer for ") + what);
}

const nlohmann::ordered_json& field(const nlohmann::ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

nlohmann::ordered_json table_to_json(const GroupTable& t) {
  nlohmann::ordered_json j;
  j["name"] = t.name;
  j["order"] = int_to_json(t.order);
  j["classes"] = nlohmann::ordered_json::array();
  for (auto& c : t.classes) {
    nlohmann::ordered_json e;
    e["label"] = c.label;
    e["size"] = int_to_json(c.size);
    j["classes"].push_back(e);
  }
  j["irreps"] = nlohmann::ordered_json::array();
  for (auto& u : t.irreps) {
    nlohmann::ordered_json e;
    e["label"] = u.label;
    e["dim"] = int_to_json(u.dim);
    e["values"] = nlohmann::ordered_json::array();
    for (auto& v : u.values) e["values"].push_back(int_to_json(v));
    j["irreps"].push_back(e);
  }
  return j;
}

GroupTable table_from_json(const nlohmann::ordered_json& j) {
  GroupTable t;
  t.name = field(j, "name").get<std::string>();
  t.order = int_from_json(field(j, "order"), "order");
  for (auto& c : field(j, "classes"))
    t.classes.push_back({field(c, "label").get<std::string>(), int_from_json(field(c, "size"), "class size")});
  for (auto& u : field(j, "irreps")) {
    GroupTable::IrrepEntry e{field(u, "label").get<std::string>(), int_from_json(field(u, "dim"), "dim"), {}};
    for (auto& v : field(u, "values")) e.values.push_back(int_from_json(v, "character value"));
    t.irreps.push_back(std::move(e));
  }
  validate_table(t);
  return t;
}

GroupTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file '" + path + "'");
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
  return table_from_json(j);
}

int FiniteGroup::inverse(int x) const {
  for (int y = 0; y < num_elements(); ++y)
    if (mult[x][y] == 0) return y;
  throw std::logic_error("element without inverse");
}

FiniteGroup builtin_group(const std::string& name) {
  FiniteGroup g;
  if (name == "trivial") {
    g.table = GroupTable{"trivial", 1, {{"e", 1}}, {{"1", 1, {1}}}};
    g.mult = {{0}};
    g.element_class = {0};
  } else if (name == "Z2") {
    g.table = GroupTable{"Z2", 2, {{"1", 1}, {"-1", 1}}, {{"1", 1, {1, 1}}, {"-1", 1, {1, -1}}}};
    g.mult = {{0, 1}, {1, 0}};
    g.element_class = {0, 1};
  } else {
    g.table = load_table(name);
    return g;
  }
  validate_table(g.table);
  return g;
}

GroupTable builtin_table(const std::string& name) { return builtin_group(name).table; }

WreathElement identity_element(int k) {
  WreathElement e{std::vector<int>(k, 0), std::vector<int>(k)};
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

WreathElement multiply(const FiniteGroup& h, const WreathElement& x, const WreathElement& y) {
  const auto k = x.perm.size();
  WreathElement out{std::vector<int>(k), std::vector<int>(k)};
  // s(b)_i = b_{s^-1(i)}, i.e. s(b)_{s(j)} = b_j
  std::vector<int> moved(k);
  for (std::size_t j = 0; j < k; ++j) moved[x.perm[j]] = y.base[j];
  for (std::size_t i = 0; i < k; ++i) {
    out.base[i] = h.mult[x.base[i]][moved[i]];
    out.perm[i] = x.perm[y.perm[i]];
  }
  return out;
}

WreathElement inverse(const FiniteGroup& h, const WreathElement& x) {
  const auto k = x.perm.size();
  WreathElement out{std::vector<int>(k), std::vector<int>(k)};
  for (std::size_t i = 0; i < k; ++i) out.perm[x.perm[i]] = static_cast<int>(i);
  // (a, s)^-1 = (s^-1(a^-1), s^-1): position i holds (a_{s(i)})^-1
  for (std::size_t i = 0; i < k; ++i) out.base[i] = h.inverse(x.base[x.perm[i]]);
  return out;
}

namespace {

struct Cycle {
  int start;  // smallest point
  int last;   // largest point
  int length;
  int h_class;
};

// Cycles of g with the H-class of each cycle product a_i a_{s^-1 i} ... (the
// base entry at i of g^length).
std::vector<Cycle> cycles_of(const FiniteGroup& h, const WreathElement& g) {
  const int k = static_cast<int>(g.perm.size());
  std::vector<int> inv(k);
  for (int i = 0; i < k; ++i) inv[g.perm[i]] = i;
  std::vector<bool> seen(k, false);
  std::vector<Cycle> out;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    int len = 0, prod = 0, last = i;
    for (int j = i; !seen[j]; j = inv[j]) {
      seen[j] = true;
      prod = h.mult[prod][g.base[j]];
      last = std::max(last, j);
      ++len;
    }
    out.push_back({i, last, len, h.element_class[prod]});
  }
  return out;
}

void require_elements(const FiniteGroup& h) {
  if (!h.has_elements())
    throw UnsupportedChainError("H = " + h.table.name +
                                " has no multiplication table; supply the small wreath table as JSON instead");
}

Integer wreath_order(const FiniteGroup& h, int k) {
  Integer pow;
  mpz_pow_ui(pow.get_mpz_t(), h.table.order.get_mpz_t(), k);
  return pow * factorial(k);
}

void check_bound(const FiniteGroup& h, int k, const Integer& max_order) {
  auto order = wreath_order(h, k);
  if (order > max_order)
    throw ResourceBoundError("|" + h.table.name + " wr S" + std::to_string(k) + "| = " + order.get_str() +
                             " exceeds the enumeration bound " + max_order.get_str() +
                             "; raise CHARCOL_MAX_ORDER or supply the table via JSON");
}

}  // namespace

ColoredCycleType colored_cycle_type(const FiniteGroup& h, const WreathElement& g) {
  const int nclass = static_cast<int>(h.table.classes.size());
  std::vector<std::vector<int>> lengths(nclass);
  for (auto& c : cycles_of(h, g)) lengths[c.h_class].push_back(c.length);
  ColoredCycleType out;
  for (auto& l : lengths) {
    std::sort(l.rbegin(), l.rend());
    out.by_class.emplace_back(l);
  }
  return out;
}

std::vector<WreathElement> enumerate_wreath(const FiniteGroup& h, int k, const Integer& max_order) {
  require_elements(h);
  check_bound(h, k, max_order);
  const int m = h.num_elements();
  std::vector<WreathElement> out;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> base(k, 0);
    while (true) {
      out.push_back({base, perm});
      int i = 0;
      while (i < k && ++base[i] == m) base[i++] = 0;
      if (i == k) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {
std::mutex override_mu;
std::optional<Integer> max_order_override;
}  // namespace

void set_max_order_override(std::optional<Integer> bound) {
  std::lock_guard lock(override_mu);
  max_order_override = std::move(bound);
}

Integer default_max_order() {
  {
    std::lock_guard lock(override_mu);
    if (max_order_override) return *max_order_override;
  }
  if (const char* env = std::getenv("CHARCOL_MAX_ORDER")) {
    Integer z;
    if (z.set_str(env, 10) == 0 && z > 0) return z;
    throw UsageError("CHARCOL_MAX_ORDER must be a positive integer");
  }
  return kDefaultMaxOrder;
}

int LabelledTable::class_index(const ColoredCycleType& c) const {
  auto it = std::find(classes.begin(), classes.end(), c);
  return it == classes.end() ? -1 : static_cast<int>(it - classes.begin());
}

int LabelledTable::irrep_index(const WreathIrrepLabel& l) const {
  auto it = std::find(irreps.begin(), irreps.end(), l);
  return it == irreps.end() ? -1 : static_cast<int>(it - irreps.begin());
}

GroupTable LabelledTable::to_group_table(const FiniteGroup& h, const std::string& name) const {
  GroupTable t;
  t.name = name;
  t.order = order;
  for (std::size_t c = 0; c < classes.size(); ++c)
    t.classes.push_back({format_class(classes[c], h.table.class_labels()), class_sizes[c]});
  for (std::size_t u = 0; u < irreps.size(); ++u)
    t.irreps.push_back({format_label(irreps[u], h.table.irrep_labels()), values[u][0], values[u]});
  return t;
}

namespace {

// Number of ways to distribute the (distinguishable) cycles among blocks of
// the given sizes: the Young permutation character at that cycle type.
Integer permutation_character(const std::vector<int>& blocks, const std::vector<int>& cycles) {
  std::map<std::vector<int>, Integer> states{{blocks, 1}};
  for (int len : cycles) {
    std::map<std::vector<int>, Integer> next;
    for (auto& [cap, count] : states)
      for (std::size_t b = 0; b < cap.size(); ++b) {
        if (cap[b] < len) continue;
        auto c = cap;
        c[b] -= len;
        next[c] += count;
      }
    states = std::move(next);
  }
  Integer total = 0;
  for (auto& [cap, count] : states) total += count;
  return total;
}

// Semistandard tableaux of shape `shape` with content `content`, peeling the
// largest entry off as a horizontal strip.
Integer kostka(const Partition& shape, const std::vector<int>& content, std::map<std::pair<Partition, std::vector<int>>, Integer>& memo) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, content);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int strip = content.back();
  std::vector<int> rest(content.begin(), content.end() - 1);
  Integer total = 0;
  const auto& lam = shape.parts();
  std::vector<int> nu(lam.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == lam.size()) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int x : nu)
        if (x > 0) parts.push_back(x);
      total += kostka(Partition(parts), rest, memo);
      return;
    }
    int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
    for (int take = 0; take <= std::min(left, lam[i] - lo); ++take) {
      nu[i] = lam[i] - take;
      rec(i + 1, left - take);
    }
  };
  rec(0, strip);
  memo[key] = total;
  return total;
}

LabelledTable build_symmetric_table(int k) {
  LabelledTable t;
  t.order = factorial(k);
  auto shapes = enumerate_partitions(k);
  auto types = enumerate_cycle_types(k);
  for (auto& p : shapes) t.irreps.push_back(p.empty() ? WreathIrrepLabel{} : WreathIrrepLabel::single(0, p));
  for (auto& c : types) {
    t.classes.push_back(ColoredCycleType{{c.shape}});
    t.class_sizes.push_back(class_size(c));
  }
  std::map<std::pair<Partition, std::vector<int>>, Integer> memo;
  t.values.assign(shapes.size(), std::vector<Integer>(types.size()));
  // shapes are in descending lexicographic order, so every nu with
  // K(nu, lambda) != 0, nu != lambda, is already done.
  for (std::size_t a = 0; a < shapes.size(); ++a) {
    for (std::size_t c = 0; c < types.size(); ++c)
      t.values[a][c] = permutation_character(shapes[a].parts(), types[c].shape.parts());
    for (std::size_t b = 0; b < a; ++b) {
      Integer K = kostka(shapes[b], shapes[a].parts(), memo);
      if (K == 0) continue;
      for (std::size_t c = 0; c < types.size(); ++c) t.values[a][c] -= K * t.values[b][c];
    }
  }
  return t;
}

}  // namespace

const LabelledTable& symmetric_character_table(int k) {
  static std::mutex mu;
  static std::map<int, LabelledTable> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build_symmetric_table(k)).first;
  return it->second;
}

namespace {

Integer symmetric_character(const Partition& shape, const std::vector<int>& cycle_lengths) {
  auto lengths = cycle_lengths;
  std::sort(lengths.rbegin(), lengths.rend());
  const auto& t = symmetric_character_table(shape.size());
  int row = t.irrep_index(shape.empty() ? WreathIrrepLabel{} : WreathIrrepLabel::single(0, shape));
  int col = t.class_index(ColoredCycleType{{Partition(lengths)}});
  return t.values.at(row).at(col);
}

}  // namespace

std::vector<std::pair<ColoredCycleType, Integer>> wreath_classes(const FiniteGroup& h, int k,
                                                                const Integer& max_order) {
  auto elements = enumerate_wreath(h, k, max_order);
  std::map<ColoredCycleType, Integer> counts;
  for (auto& g : elements) counts[colored_cycle_type(h, g)] += 1;
  std::vector<std::pair<ColoredCycleType, Integer>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return class_before(a.first, b.first); });
  return out;
}

LabelledTable wreath_char_table(const FiniteGroup& h, int k) { return wreath_char_table(h, k, default_max_order()); }

LabelledTable wreath_char_table(const FiniteGroup& h, int k, const Integer& max_order) {
  if (h.table.order == 1) return symmetric_character_table(k);
  auto elements = enumerate_wreath(h, k, max_order);
  const int num_irreps = static_cast<int>(h.table.irreps.size());

  LabelledTable t;
  t.order = wreath_order(h, k);
  t.irreps = enumerate_wreath_labels(num_irreps, k);

  std::map<ColoredCycleType, std::pair<Integer, std::size_t>> seen;  // size, representative
  for (std::size_t e = 0; e < elements.size(); ++e) {
    auto c = colored_cycle_type(h, elements[e]);
    auto [it, fresh] = seen.try_emplace(c, Integer(0), e);
    it->second.first += 1;
  }
  std::vector<std::size_t> reps;
  for (auto& c : enumerate_colored_cycle_types(static_cast<int>(h.table.classes.size()), k)) {
    auto it = seen.find(c);
    if (it == seen.end()) continue;
    t.classes.push_back(c);
    t.class_sizes.push_back(it->second.first);
    reps.push_back(it->second.second);
  }

  t.values.assign(t.irreps.size(), std::vector<Integer>(t.classes.size(), 0));
  std::vector<WreathElement> inverses;
  inverses.reserve(elements.size());
  for (auto& x : elements) inverses.push_back(inverse(h, x));

  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const auto& g = elements[reps[c]];
    std::vector<std::vector<Cycle>> conj_cycles;
    conj_cycles.reserve(elements.size());
    for (std::size_t x = 0; x < elements.size(); ++x)
      conj_cycles.push_back(cycles_of(h, multiply(h, multiply(h, elements[x], g), inverses[x])));

    for (std::size_t u = 0; u < t.irreps.size(); ++u) {
      const auto& slots = t.irreps[u].slots();
      // blocks are contiguous, so a cycle lies in one block iff its extreme points do
      std::vector<int> block_of(k);
      int pos = 0;
      Integer subgroup = 1;
      for (std::size_t b = 0; b < slots.size(); ++b) {
        subgroup *= factorial(slots[b].shape.size());
        for (int i = 0; i < slots[b].shape.size(); ++i) block_of[pos++] = static_cast<int>(b);
      }
      Integer hpow;
      mpz_pow_ui(hpow.get_mpz_t(), h.table.order.get_mpz_t(), k);
      subgroup *= hpow;

      Integer sum = 0;
      for (auto& cycles : conj_cycles) {
        // inside the Young-type subgroup iff every cycle stays in one block
        std::vector<std::vector<int>> block_cycles(slots.size());
        Integer value = 1;
        bool inside = true;
        for (auto& cyc : cycles) {
          int b = block_of[cyc.start];
          if (block_of[cyc.last] != b) {
            inside = false;
            break;
          }
          block_cycles[b].push_back(cyc.length);
          value *= h.table.irreps[slots[b].h_irrep].values[cyc.h_class];
        }
        if (!inside) continue;
        for (std::size_t b = 0; b < slots.size() && value != 0; ++b)
          value *= symmetric_character(slots[b].shape, block_cycles[b]);
        sum += value;
      }
      if (sum % subgroup != 0) throw std::logic_error("induced character is not an integer");
      t.values[u][c] = sum / subgroup;
    }
  }

  auto gt = t.to_group_table(h, h.table.name + " wr S" + std::to_string(k));
  validate_table(gt);
  validate_columns(gt);
  return t;
}

Integer wreath_class_size(const FiniteGroup& h, const ColoredCycleType& c) {
  return wreath_class_size(h, c, default_max_order());
}

Integer wreath_class_size(const FiniteGroup& h, const ColoredCycleType& c, const Integer& max_order) {
  const int k = c.size();
  auto elements = enumerate_wreath(h, k, max_order);
  if (c.by_class.size() != h.table.classes.size()) throw UsageError("class label does not match H");
  WreathElement rep = identity_element(k);
  int pos = 0;
  for (std::size_t cls = 0; cls < c.by_class.size(); ++cls) {
    int element = -1;
    for (int x = 0; x < h.num_elements(); ++x)
      if (h.element_class[x] == static_cast<int>(cls)) {
        element = x;
        break;
      }
    for (int len : c.by_class[cls].parts()) {
      for (int i = 0; i < len; ++i) rep.perm[pos + i] = pos + (i + 1) % len;
      rep.base[pos] = element;
      pos += len;
    }
  }
  std::set<WreathElement> orbit;
  for (auto& x : elements) orbit.insert(multiply(h, multiply(h, x, rep), inverse(h, x)));
  return Integer(static_cast<unsigned long>(orbit.size()));
}

}  // namespace charcol
