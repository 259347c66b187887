#include "charcol/verify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "charcol/errors.hpp"
#include "charcol/lifting.hpp"

namespace charcol {

// ---------------------------------------------------------------- MN oracle

namespace {

using BetaKey = std::pair<std::vector<int>, std::vector<int>>;

Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::map<BetaKey, Integer>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  BetaKey key{lambda, mu};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  std::set<int> beads(beta.begin(), beta.end());
  int r = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());

  Integer total = 0;
  for (int b : beta) {
    int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> moved;
    for (int x : beta) moved.push_back(x == b ? target : x);
    std::sort(moved.rbegin(), moved.rend());
    std::vector<int> smaller;
    for (int i = 0; i < len; ++i) {
      int part = moved[i] - (len - 1 - i);
      if (part > 0) smaller.push_back(part);
    }
    Integer v = mn_rec(smaller, rest, memo);
    total += (between % 2 == 0) ? v : Integer(-v);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("MN character needs |lambda| = |mu|");
  static std::mutex mu_lock;
  static std::map<BetaKey, Integer> memo;
  std::lock_guard lock(mu_lock);
  return mn_rec(lambda.parts(), mu.shape.parts(), memo);
}

CharacterColumn oracle_column(const CycleType& mu, int n) {
  if (mu.size() > n) throw std::invalid_argument("class does not fit at this level");
  auto full = mu.with_fixed_points(n);
  CharacterColumn col;
  col.level = n;
  col.cls = ColoredCycleType{{full.shape}};
  for (auto& p : enumerate_partitions(n)) col.values.push_back(mn_character(p, full));
  return col;
}

// ---------------------------------------------------------------- polynomials and fitting

Rational RootPoly::evaluate(const Rational& x) const {
  Rational v = lead;
  for (auto& r : roots) v *= x - r;
  return v;
}

std::string RootPoly::to_string() const {
  std::string out = lead == 1 ? "" : "(" + charcol::to_string(lead) + ")";
  for (auto& r : roots) {
    if (r == 0)
      out += "X";
    else if (r > 0)
      out += "(X-" + charcol::to_string(r) + ")";
    else
      out += "(X+" + charcol::to_string(Rational(-r)) + ")";
  }
  return out.empty() ? "1" : out;
}

const char* to_string(ChainParams::Status s) {
  switch (s) {
    case ChainParams::Status::Fitted: return "fitted";
    case ChainParams::Status::Inconclusive: return "inconclusive";
    case ChainParams::Status::Violation: return "violation";
  }
  return "?";
}

RootPoly ChainParams::predicted(int l) const {
  if (status == Status::Violation) throw std::logic_error("no f_l: " + message);
  RootPoly f;
  if (status == Status::Inconclusive) {
    f.roots = {0};
    return f;
  }
  Integer b_power = 1;
  for (int i = 0; i < l * (l - 1) / 2; ++i) b_power *= B;
  f.lead = Rational(1) / Rational(b_power);
  Integer geometric = 0;  // 1 + B + ... + B^{j-1}
  Integer term = 1;
  for (int j = 0; j < l; ++j) {
    f.roots.push_back(Rational(geometric * C));
    geometric += term;
    term *= B;
  }
  return f;
}

ChainParams fit_chain_params_from_ratios(const std::vector<Rational>& a) {
  ChainParams p;
  p.ratios = a;
  if (a.size() < 3) {
    p.message = "need at least four consecutive orders";
    return p;
  }
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i + 1] == a[i]) ++i;
  if (i + 1 >= a.size()) {
    p.constant = true;
    p.message = "constant ratios a_n: constant chain, f_l = X";
    return p;
  }
  if (i + 2 >= a.size()) {
    p.message = "ratios change only at the last level; more orders needed";
    return p;
  }
  Rational B = (a[i + 2] - a[i + 1]) / (a[i + 1] - a[i]);
  Rational C = a[i + 1] - B * a[i];
  if (!is_integer(B) || !is_integer(C)) {
    p.status = ChainParams::Status::Violation;
    p.message = "B = " + to_string(B) + ", C = " + to_string(C) + " not both integers";
    return p;
  }
  for (std::size_t m = 0; m + 1 < a.size(); ++m)
    if (a[m + 1] != B * a[m] + C) {
      p.status = ChainParams::Status::Violation;
      p.message = "a_" + std::to_string(m + 2) + " = " + to_string(a[m + 1]) + " breaks a_n = B a_{n-1} + C";
      return p;
    }
  p.status = ChainParams::Status::Fitted;
  p.B = B.get_num();
  p.C = C.get_num();
  if (!p.known_chain()) p.message = "no known chain has these parameters (hypothesis only)";
  return p;
}

ChainParams fit_chain_params(const std::vector<Integer>& orders) {
  std::vector<Rational> a;
  for (std::size_t i = 1; i < orders.size(); ++i) {
    Rational q = Rational(orders[i]) / Rational(orders[i - 1]);
    if (!is_integer(q)) {
      ChainParams p;
      p.status = ChainParams::Status::Violation;
      p.message = "|G_" + std::to_string(i - 1) + "| does not divide |G_" + std::to_string(i) + "|";
      return p;
    }
    a.push_back(q);
  }
  return fit_chain_params_from_ratios(a);
}

// ---------------------------------------------------------------- ingested chains

const IngestedChain::Level& IngestedChain::level(int n) const {
  if (levels.empty() || n < min_n() || n > max_n()) throw std::out_of_range("level " + std::to_string(n) + " not present");
  return levels[n - min_n()];
}

int IngestedChain::class_index(int n, const std::string& label) const {
  const auto& cls = level(n).classes;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i].label == label) return static_cast<int>(i);
  return -1;
}

int IngestedChain::embed(int from, int class_idx, int to) const {
  for (int n = from; n < to; ++n) {
    class_idx = class_index(n + 1, level(n).classes.at(class_idx).embeds_to);
    if (class_idx < 0) throw ValidationError("broken class embedding at level " + std::to_string(n));
  }
  return class_idx;
}

Rational IngestedChain::ind_t_character(int n, int c) const {
  const auto& below = level(n - 1);
  Integer meet = 0;
  for (std::size_t i = 0; i < below.classes.size(); ++i)
    if (embed(n - 1, static_cast<int>(i), n) == c) meet += below.classes[i].size;
  return Rational(level(n).order * meet) / Rational(below.order * level(n).classes.at(c).size);
}

std::vector<Integer> IngestedChain::orders() const {
  std::vector<Integer> out;
  for (auto& l : levels) out.push_back(l.order);
  return out;
}

void validate_chain(const IngestedChain& c) {
  if (c.levels.empty()) throw ValidationError("chain has no levels");
  for (std::size_t i = 0; i < c.levels.size(); ++i) {
    const auto& L = c.levels[i];
    std::string at = " at level " + std::to_string(L.n);
    if (i > 0 && L.n != c.levels[i - 1].n + 1) throw ValidationError("levels are not consecutive" + at);
    if (L.order <= 0 || L.basis_size <= 0) throw ValidationError("order and basisSize must be positive" + at);
    if (static_cast<int>(L.classes.size()) != L.basis_size)
      throw ValidationError("number of classes differs from basisSize" + at);
    Integer total = 0;
    std::set<std::string> seen;
    for (auto& cl : L.classes) {
      if (cl.size <= 0) throw ValidationError("class size must be positive" + at);
      if (!seen.insert(cl.label).second) throw ValidationError("duplicate class label '" + cl.label + "'" + at);
      total += cl.size;
    }
    if (total != L.order) throw ValidationError("class sizes do not sum to the order" + at);
    if (L.classes.front().size != 1) throw ValidationError("first class must be the identity" + at);
    if (i == 0) {
      if (!L.res.entries().empty()) throw ValidationError("bottom level must not carry a Res matrix" + at);
      continue;
    }
    const auto& prev = c.levels[i - 1];
    if (L.order % prev.order != 0) throw ValidationError("order of the previous level does not divide the order" + at);
    if (L.res.rows() != prev.basis_size || L.res.cols() != L.basis_size)
      throw ValidationError("Res dimensions do not match basis sizes" + at);
    for (auto& e : L.res.entries())
      if (e.value < 0) throw ValidationError("negative branching multiplicity" + at);
    if (rational_rank(L.res) != prev.basis_size) throw ValidationError("not a surjective chain" + at + " (Res is not of full row rank)");
    for (auto& cl : prev.classes)
      if (c.class_index(L.n, cl.embeds_to) < 0)
        throw ValidationError("class '" + cl.label + "' embeds to unknown label '" + cl.embeds_to + "' at level " +
                              std::to_string(prev.n));
  }
}

namespace {

Integer json_integer(const nlohmann::ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw UsageError(std::string("expected an integer for ") + what);
}

const nlohmann::ordered_json& need(const nlohmann::ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("chain file: missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

IngestedChain ingest_chain(const nlohmann::ordered_json& j) {
  IngestedChain c;
  const auto& levels = need(j, "levels");
  if (!levels.is_array()) throw UsageError("chain file: 'levels' must be an array");
  for (auto& lj : levels) {
    IngestedChain::Level L;
    L.n = need(lj, "n").get<int>();
    L.order = json_integer(need(lj, "order"), "order");
    L.basis_size = need(lj, "basisSize").get<int>();
    for (auto& cj : need(lj, "classes")) {
      IngestedChain::ClassEntry e;
      e.label = need(cj, "label").get<std::string>();
      e.size = json_integer(need(cj, "size"), "class size");
      if (cj.contains("embedsTo") && !cj.at("embedsTo").is_null()) e.embeds_to = cj.at("embedsTo").get<std::string>();
      L.classes.push_back(std::move(e));
    }
    std::vector<SparseMatrix::Entry> entries;
    if (lj.contains("res"))
      for (auto& t : lj.at("res")) {
        if (!t.is_array() || t.size() != 3) throw UsageError("chain file: res entries are [row,col,value]");
        entries.push_back({t[0].get<int>(), t[1].get<int>(), json_integer(t[2], "res value")});
      }
    int rows = c.levels.empty() ? 0 : c.levels.back().basis_size;
    if (c.levels.empty() && !entries.empty()) throw ValidationError("bottom level must not carry a Res matrix");
    try {
      L.res = SparseMatrix(rows, L.basis_size, std::move(entries));
    } catch (const std::out_of_range&) {
      throw ValidationError("Res entry outside the matrix at level " + std::to_string(L.n));
    }
    c.levels.push_back(std::move(L));
  }
  validate_chain(c);
  return c;
}

IngestedChain ingest_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open chain file '" + path + "'");
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("chain file '" + path + "' is not valid JSON: " + e.what());
  }
  auto c = ingest_chain(j);
  c.name = path;
  return c;
}

nlohmann::ordered_json export_chain(const IngestedChain& c) {
  nlohmann::ordered_json j;
  auto levels = nlohmann::ordered_json::array();
  for (auto& L : c.levels) {
    nlohmann::ordered_json lj;
    lj["n"] = L.n;
    lj["order"] = rational_to_json(Rational(L.order));
    lj["basisSize"] = L.basis_size;
    auto res = nlohmann::ordered_json::array();
    for (auto& e : L.res.row_major()) res.push_back({e.row, e.col, rational_to_json(Rational(e.value))});
    lj["res"] = res;
    auto classes = nlohmann::ordered_json::array();
    for (auto& cl : L.classes) {
      nlohmann::ordered_json cj;
      cj["label"] = cl.label;
      cj["size"] = rational_to_json(Rational(cl.size));
      if (cl.embeds_to.empty())
        cj["embedsTo"] = nullptr;
      else
        cj["embedsTo"] = cl.embeds_to;
      classes.push_back(cj);
    }
    lj["classes"] = classes;
    levels.push_back(lj);
  }
  j["levels"] = levels;
  return j;
}

IngestedChain to_ingested(const Chain& chain, int max_n) {
  IngestedChain c;
  c.name = chain.id();
  for (int n = 0; n <= max_n; ++n) {
    IngestedChain::Level L;
    L.n = n;
    L.order = chain.order(n);
    L.basis_size = static_cast<int>(chain.dim(n));
    L.res = n == 0 ? SparseMatrix(0, L.basis_size) : chain.res(n);
    for (auto& cl : enumerate_colored_cycle_types(chain.num_h_classes(), n)) {
      IngestedChain::ClassEntry e{chain.format(cl), chain.class_size(cl), ""};
      if (n < max_n) e.embeds_to = chain.format(cl.with_trivial_fixed_points(n + 1));
      L.classes.push_back(std::move(e));
    }
    c.levels.push_back(std::move(L));
  }
  return c;
}

// ---------------------------------------------------------------- class constraint and roots

ConstraintReport jeongha_class_constraint(const IngestedChain& c, int h, int n, int l, const RootPoly& f) {
  int m = n - l;
  if (l < 1 || m < c.min_n() || n > c.max_n()) throw std::out_of_range("class data missing for the requested levels");
  int hn = c.embed(m, h, n);
  int hn1 = c.embed(m, h, n - 1);
  const auto& Ln = c.level(n);
  const auto& Ln1 = c.level(n - 1);
  const auto& Lm = c.level(m);
  ConstraintReport r;
  r.ind_t_value = Rational(Ln.order * Ln1.classes[hn1].size) / Rational(Ln1.order * Ln.classes[hn].size);
  r.lhs = f.evaluate(r.ind_t_value);
  r.rhs = Rational(Ln.order * Lm.classes[h].size) / Rational(Lm.order * Ln.classes[hn].size);
  r.pass = r.lhs == r.rhs;
  return r;
}

RootsReport roots_vs_characters(const IngestedChain& c, int l, const RootPoly& f) {
  RootsReport r;
  std::set<Rational> roots(f.roots.begin(), f.roots.end());
  r.roots.assign(roots.begin(), roots.end());
  int b = c.min_n() - 1;
  for (auto& L : c.levels) {
    if (L.order != 1) break;
    b = L.n;
  }
  r.level_offset = b;
  std::vector<int> levels{l + std::max(b, 0)};
  levels.push_back(b > 0 ? l : l + 1);
  for (int level : levels) {
    RootsReport::Candidate cand;
    cand.level = level;
    if (level - 1 >= c.min_n() && level <= c.max_n()) {
      std::set<Rational> values;
      const auto& L = c.level(level);
      for (std::size_t i = 1; i < L.classes.size(); ++i) values.insert(c.ind_t_character(level, static_cast<int>(i)));
      cand.values.assign(values.begin(), values.end());
      cand.matches = values == roots;
    }
    r.candidates.push_back(std::move(cand));
  }
  r.pass = b >= 0 && !r.candidates.empty() && r.candidates.front().matches;
  return r;
}

// ---------------------------------------------------------------- suites

namespace {

using Json = nlohmann::ordered_json;
using Dense = std::vector<std::vector<Rational>>;

Dense to_dense_rational(const SparseMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

Dense multiply(const Dense& a, const Dense& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense out(n, std::vector<Rational>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t c = 0; c < m; ++c) out[i][c] += a[i][j] * b[j][c];
    }
  return out;
}

Dense evaluate(const RootPoly& f, const Dense& X) {
  std::size_t n = X.size();
  Dense out(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = f.lead;
  for (auto& r : f.roots) {
    Dense shifted = X;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= r;
    out = multiply(shifted, out);
  }
  return out;
}

struct Suite {
  Json checks = Json::array();
  bool pass = true;

  void add(Json check) {
    pass = pass && check["pass"].get<bool>();
    checks.push_back(std::move(check));
  }
};

Json check(const std::string& name, bool pass) {
  Json j;
  j["name"] = name;
  j["pass"] = pass;
  return j;
}

std::string join(const std::vector<Rational>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + "}";
}

SparseMatrix res_of(const IngestedChain& c, int n) {
  if (n <= c.min_n()) return SparseMatrix(0, c.level(n).basis_size);
  return c.level(n).res;
}

void heisenberg(const IngestedChain& c, int max_n, std::optional<Integer> expected, Suite& s) {
  std::optional<Integer> M = expected;
  for (int n = c.min_n(); n <= std::min(max_n, c.max_n() - 1); ++n) {
    auto up = c.level(n + 1).res;
    auto d = up * up.transpose() - res_of(c, n).transpose() * res_of(c, n);
    if (!M) M = d.at(0, 0);
    bool ok = d == *M * SparseMatrix::identity(d.rows());
    auto j = check("heisenberg n=" + std::to_string(n), ok);
    j["M"] = to_string(*M);
    s.add(j);
  }
}

void property_star(const IngestedChain& c, int max_n, const std::function<RootPoly(int)>& f, Suite& s) {
  for (int n = c.min_n() + 1; n <= std::min(max_n, c.max_n()); ++n) {
    auto X = to_dense_rational(c.level(n).res.transpose() * c.level(n).res);
    SparseMatrix down = c.level(n).res;
    for (int l = 1; n - l >= c.min_n(); ++l) {
      if (l > 1) down = c.level(n - l + 1).res * down;
      auto brute = to_dense_rational(down.transpose() * down);
      auto poly = f(l);
      auto j = check("Ind^l Res^l = f_l(X) n=" + std::to_string(n) + " l=" + std::to_string(l), brute == evaluate(poly, X));
      j["f"] = poly.to_string();
      s.add(j);
    }
  }
}

void jeongha(const IngestedChain& c, int max_n, std::optional<std::pair<Integer, Integer>> expected_bc,
             std::optional<Integer> falling_M, Suite& s) {
  auto params = fit_chain_params(c.orders());
  {
    bool ok = params.status != ChainParams::Status::Violation;
    if (expected_bc) ok = ok && params.status == ChainParams::Status::Fitted && params.B == expected_bc->first &&
                          params.C == expected_bc->second;
    auto j = check("fit (B,C)", ok);
    j["status"] = to_string(params.status);
    if (params.status == ChainParams::Status::Fitted) {
      j["B"] = to_string(params.B);
      j["C"] = to_string(params.C);
      j["knownChain"] = params.known_chain();
    }
    if (!params.message.empty()) j["message"] = params.message;
    s.add(j);
    if (params.status == ChainParams::Status::Violation) return;
  }
  auto f = [&](int l) {
    if (falling_M) {
      RootPoly p;
      for (auto& r : FallingFactorialPoly{l, *falling_M}.roots()) p.roots.push_back(Rational(r));
      return p;
    }
    return params.predicted(l);
  };
  if (falling_M && params.status == ChainParams::Status::Fitted)
    for (int l = 1; l <= std::max(1, max_n); ++l) {
      auto pred = params.predicted(l);
      auto engine = f(l);
      auto j = check("predicted f_" + std::to_string(l) + " = engine f_" + std::to_string(l),
                     pred.lead == engine.lead && pred.roots == engine.roots);
      j["predicted"] = pred.to_string();
      j["engine"] = engine.to_string();
      s.add(j);
    }
  for (int n = c.min_n() + 1; n <= std::min(max_n, c.max_n()); ++n)
    for (int l = 1; n - l >= c.min_n(); ++l) {
      const auto& Lm = c.level(n - l);
      for (std::size_t h = 0; h < Lm.classes.size(); ++h) {
        auto r = jeongha_class_constraint(c, static_cast<int>(h), n, l, f(l));
        auto j = check("class constraint n=" + std::to_string(n) + " l=" + std::to_string(l) + " h=" + Lm.classes[h].label,
                       r.pass);
        j["indT"] = to_string(r.ind_t_value);
        j["lhs"] = to_string(r.lhs);
        j["rhs"] = to_string(r.rhs);
        s.add(j);
      }
    }
  for (int l = 1;; ++l) {
    auto r = roots_vs_characters(c, l, f(l));
    if (r.level_offset < 0 || r.candidates.front().level > std::min(max_n, c.max_n())) break;
    auto j = check("roots of f_" + std::to_string(l) + " vs Ind(t) values", r.pass);
    j["roots"] = join(r.roots);
    j["levelOffset"] = r.level_offset;
    auto cands = Json::array();
    for (auto& cand : r.candidates) {
      Json cj;
      cj["level"] = cand.level;
      cj["values"] = join(cand.values);
      cj["matches"] = cand.matches;
      cands.push_back(cj);
    }
    j["candidates"] = cands;
    s.add(j);
  }
}

void tasyopari_columns(std::shared_ptr<const Chain> chain, int max_n, Suite& s) {
  Lifter lifter(chain);
  for (int n = 1; n <= max_n; ++n) {
    const auto& X = chain->ind_res(n);
    std::optional<LabelledTable> table;
    if (!chain->is_symmetric()) {
      try {
        table = chain->table(n);
      } catch (const ResourceBoundError&) {
        // no brute-force oracle at this level; columns are still checked for norms and eigenvalues
      }
    }
    for (auto& cl : enumerate_colored_cycle_types(chain->num_h_classes(), n)) {
      std::string name = " n=" + std::to_string(n) + " class=" + chain->format(cl);
      auto col = character_column(lifter, cl, n);
      std::vector<Rational> v(col.values.begin(), col.values.end());
      Integer norm = 0;
      for (auto& x : col.values) norm += x * x;
      auto nj = check("column norm" + name, norm == chain->order(n) / chain->class_size(cl));
      nj["norm"] = to_string(norm);
      s.add(nj);
      auto xv = X.apply(v);
      Integer eig = chain->ind_t_character(cl);
      bool eigen = true;
      for (std::size_t i = 0; i < v.size(); ++i) eigen = eigen && xv[i] == eig * v[i];
      auto ej = check("X delta = chi_Ind(t) delta" + name, eigen);
      ej["eigenvalue"] = to_string(eig);
      s.add(ej);
      if (chain->is_symmetric()) {
        CycleType ct{cl.by_class[0]};
        s.add(check("engine = MN oracle" + name, col.values == oracle_column(ct, n).values));
        if (ct.is_odd() && n >= 2) s.add(check("odd path = full column" + name, odd_column(*chain, ct, n).column == col));
      } else if (table) {
        int ci = table->class_index(cl);
        bool same = ci >= 0;
        for (std::size_t i = 0; same && i < table->irreps.size(); ++i)
          same = table->values[i][ci] == col.values[chain->index_of(table->irreps[i], n)];
        s.add(check("engine = brute-force table" + name, same));
      }
    }
    for (int k = 0; k <= std::min(n, 5); ++k)
      for (auto& w : chain->basis(k)) {
        if (!chain->is_symmetric() && k > 2) break;
        auto rec = lifter.record(w, n);
        s.add(check("lift exact " + chain->format(w) + " to n=" + std::to_string(n), lift_is_exact(*chain, rec)));
      }
  }
}

Json finish(const std::string& suite, const std::string& name, Suite& s) {
  Json j;
  j["suite"] = suite;
  j["chain"] = name;
  j["pass"] = s.pass;
  j["checks"] = s.checks;
  return j;
}

void require_suite(const std::string& suite) {
  if (suite != "heisenberg" && suite != "tasyopari" && suite != "jeongha" && suite != "all")
    throw UsageError("unknown suite '" + suite + "' (heisenberg, tasyopari, jeongha, all)");
}

}  // namespace

Json run_suite(const std::string& suite, std::shared_ptr<const Chain> chain, int max_n) {
  require_suite(suite);
  if (max_n < 1) throw UsageError("--maxN must be at least 1");
  // orders beyond max_n are free and let the fit see four levels
  auto ingested = to_ingested(*chain, std::max(max_n + 1, 4));
  Integer M = chain->scaling();
  Suite s;
  if (suite == "heisenberg" || suite == "all") heisenberg(ingested, max_n, M, s);
  if (suite == "tasyopari" || suite == "all") {
    property_star(ingested, max_n, [&](int l) {
      RootPoly p;
      for (auto& r : FallingFactorialPoly{l, M}.roots()) p.roots.push_back(Rational(r));
      return p;
    }, s);
    tasyopari_columns(chain, max_n, s);
  }
  if (suite == "jeongha" || suite == "all") jeongha(ingested, max_n, std::make_pair(Integer(1), M), M, s);
  return finish(suite, chain->id(), s);
}

Json run_suite(const std::string& suite, const IngestedChain& chain, int max_n) {
  require_suite(suite);
  Suite s;
  if (suite == "heisenberg" || suite == "all") heisenberg(chain, max_n, std::nullopt, s);
  if (suite == "tasyopari" || suite == "all") {
    auto params = fit_chain_params(chain.orders());
    if (params.status == ChainParams::Status::Violation ||
        (params.status == ChainParams::Status::Inconclusive && !params.constant)) {
      auto j = check("Property (*) needs f_l", false);
      j["message"] = params.message;
      s.add(j);
    } else {
      property_star(chain, max_n, [&](int l) { return params.predicted(l); }, s);
    }
  }
  if (suite == "jeongha" || suite == "all") jeongha(chain, max_n, std::nullopt, std::nullopt, s);
  return finish(suite, chain.name, s);
}

}  // namespace charcol
