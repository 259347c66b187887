// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "charcol/chain.hpp"
#include "charcol/cli.hpp"
#include "charcol/engine.hpp"
#include "charcol/hgroup.hpp"
#include "charcol/lifting.hpp"
#include "charcol/verify.hpp"

using namespace charcol;

namespace {

using Dense = std::vector<std::vector<long>>;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int index_in(const std::vector<Partition>& order, const Partition& p) {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == p) return static_cast<int>(i);
  return -1;
}

Outcome s6_operator() {
  // Mirrored order: [6],[5,1],[4,2],[4,1,1],[3,3],[3,2,1],[2,2,2],[3,1,1,1],[2,2,1,1],[2,1^4],[1^6]
  const Dense expected = {
      {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0},
      {0, 1, 1, 2, 0, 1, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 3, 1, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 1, 0, 2, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 1, 1, 2, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}};
  Outcome o;
  std::ostringstream out, err;
  int rc = run({"indres", "--chain", "sym", "--n", "6"}, out, err);
  o.require(rc == 0, "indres exited " + std::to_string(rc) + ": " + err.str());
  // Rows "label: v v v" in canonical basis order.
  auto canon = enumerate_partitions(6);
  auto mirrored = mirrored_order(6);
  std::istringstream lines(out.str());
  std::string line;
  int r = 0;
  while (std::getline(lines, line) && o.ok) {
    auto colon = line.find(':');
    o.require(colon != std::string::npos, "unexpected line " + line);
    if (!o.ok) break;
    auto label = parse_partition(line.substr(0, colon));
    o.require(r < 11 && label == canon[r], "row label " + line.substr(0, colon));
    std::istringstream vals(line.substr(colon + 1));
    long v;
    int c = 0;
    int pr = index_in(mirrored, label);
    while (vals >> v && o.ok) {
      int pc = index_in(mirrored, canon[c]);
      o.require(v == expected[pr][pc], "entry " + to_string(label) + "," + to_string(canon[c]));
      ++c;
    }
    o.require(c == 11, "row width");
    ++r;
  }
  o.require(r == 11, "row count");
  return o;
}

Outcome s6_column() {
  const std::vector<long> expected = {1, 2, 0, 1, -1, -2, -1, 1, 0, 2, 1};
  Outcome o;
  auto chain = Chain::symmetric();
  auto col = character_column(chain, ColoredCycleType{{Partition({3})}}, 6);
  auto canon = enumerate_partitions(6);
  auto mirrored = mirrored_order(6);
  for (std::size_t i = 0; i < canon.size(); ++i)
    o.require(col.values[i] == expected[index_in(mirrored, canon[i])], "value at " + to_string(canon[i]));
  return o;
}

Outcome reduced_operator_check() {
  const Dense expected = {{1, 1, 0, 0, 0}, {1, 2, 1, 1, 0}, {0, 1, 2, 1, 1}, {0, 1, 1, 1, 0}, {0, 0, 1, 0, 1}};
  Outcome o;
  auto chain = Chain::symmetric();
  auto Y = reduced_operator(*chain, 6);
  std::vector<Partition> basis = {Partition({6}), Partition({5, 1}), Partition({4, 2}), Partition({4, 1, 1}),
                                  Partition({3, 3})};
  o.require(Y.plus_basis == basis, "plus basis");
  for (int a = 0; a < 5 && o.ok; ++a)
    for (int b = 0; b < 5; ++b) o.require(Y.matrix.at(a, b) == expected[a][b], "Y entry");
  struct Case {
    std::vector<int> cycle;
    std::vector<long> plus;
  };
  for (auto& [cyc, want] : std::vector<Case>{{{2}, {1, 3, 3, 2, 1}}, {{4}, {1, 1, -1, 0, -1}}, {{3, 2}, {1, 0, 0, -1, 1}}}) {
    auto odd = odd_column(*chain, CycleType{Partition(cyc)}, 6);
    for (int i = 0; i < 5; ++i) o.require(odd.plus_part[i] == want[i], "pr+ of " + to_string(Partition(cyc)));
    auto mn = oracle_column(CycleType{Partition(cyc)}, 6);
    o.require(odd.column.values == mn.values, "full odd column of " + to_string(Partition(cyc)));
  }
  return o;
}

Outcome wreath_table() {
  Outcome o;
  auto chain = Chain::from_spec("z2wreath");
  auto t = wreath_char_table(chain->base(), 2);
  std::vector<std::string> cols = {"1:[1,1]", "1:[1];-1:[1]", "-1:[1,1]", "1:[2]", "-1:[2]"};
  struct Row {
    std::string label;
    std::vector<long> values;
  };
  std::vector<Row> expected = {{"1:[2]", {1, 1, 1, 1, 1}},
                            {"1:[1];-1:[1]", {2, 0, -2, 0, 0}},
                            {"1:[1,1]", {1, 1, 1, -1, -1}},
                            {"-1:[2]", {1, -1, 1, 1, -1}},
                            {"-1:[1,1]", {1, -1, 1, -1, 1}}};
  o.require(t.irreps.size() == 5 && t.classes.size() == 5, "table shape");
  for (auto& row : expected) {
    int r = t.irrep_index(chain->parse_label(row.label));
    o.require(r >= 0, "irrep " + row.label);
    if (r < 0) continue;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int c = t.class_index(chain->parse_class(cols[j]));
      o.require(c >= 0 && t.values[r][c] == row.values[j], row.label + " at " + cols[j]);
    }
  }
  return o;
}

Outcome tasyopari_oracle() {
  Outcome o;
  auto check = [&](const Chain& chain, int max_n) {
    for (int n = 1; n <= max_n; ++n)
      for (int l = 1; l <= n; ++l) {
        auto f = FallingFactorialPoly{l, chain.scaling()}.evaluate(chain.ind_res(n));
        o.require(brute_indl_resl(chain, n, l) == f,
                  chain.id() + " n=" + std::to_string(n) + " l=" + std::to_string(l));
      }
  };
  check(*Chain::symmetric(), 8);
  check(*Chain::from_spec("z2wreath"), 4);
  return o;
}

Outcome heisenberg() {
  Outcome o;
  auto check = [&](const Chain& chain, int max_n) {
    for (int n = 0; n < max_n; ++n) {
      const auto& up = chain.res(n + 1);  // R_{n+1} -> R_n
      auto res_ind = up * up.transpose();
      auto ind_res = n == 0 ? SparseMatrix(1, 1) : chain.ind_res(n);
      o.require(res_ind - ind_res == chain.scaling() * SparseMatrix::identity(static_cast<int>(chain.dim(n))),
                chain.id() + " n=" + std::to_string(n));
    }
  };
  check(*Chain::symmetric(), 8);
  check(*Chain::from_spec("z2wreath"), 4);
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  auto chain = Chain::symmetric();
  Lifter lifter(chain);
  for (int n = 1; n <= 8; ++n)
    for (auto& c : enumerate_cycle_types(n)) {
      auto col = character_column(lifter, ColoredCycleType{{c.shape}}, n);
      auto mn = oracle_column(c, n);
      o.require(col.values == mn.values, "class " + to_string(c.shape));
      Integer norm = 0;
      for (auto& v : col.values) norm += v * v;
      o.require(norm * class_size(c) == factorial(n), "norm of " + to_string(c.shape));
    }
  return o;
}

Outcome lifting() {
  Outcome o;
  auto sym = Chain::symmetric();
  for (int k = 0; k <= 5; ++k)
    for (auto& w : enumerate_partitions(k))
      for (int n = k; n <= 9; ++n)
        o.require(lift_is_exact(*sym, lift_sym(w, n)), "lift of " + to_string(w) + " to " + std::to_string(n));

  // Lifts of S_5 irreps; t, v, p, wedge^2 stand for the first-row padded diagrams.
  for (int n = 7; n <= 9; ++n) {
    Rational m = n - 5, tri = Rational((n - 5) * (n - 4)) / 2;
    auto pad = [&](std::vector<int> rest) {
      std::vector<int> parts{n - std::accumulate(rest.begin(), rest.end(), 0)};
      parts.insert(parts.end(), rest.begin(), rest.end());
      return Partition(parts);
    };
    Partition t = pad({}), v = pad({1}), p = pad({2}), w2 = pad({1, 1});
    struct Want {
      Partition source;
      std::vector<std::pair<Partition, Rational>> terms;
    };
    std::vector<Want> table = {
        {Partition({5}), {{t, 1}}},
        {Partition({4, 1}), {{v, 1}, {t, -m}}},
        {Partition({3, 2}), {{p, 1}, {v, -m}, {t, tri}}},
        {Partition({3, 1, 1}), {{w2, 1}, {v, -m}, {t, tri}}},
        {Partition({2, 2, 1}), {{conjugate(p), 1}, {conjugate(v), -m}, {conjugate(t), tri}}},
        {Partition({2, 1, 1, 1}), {{conjugate(v), 1}, {conjugate(t), -m}}},
        {Partition({1, 1, 1, 1, 1}), {{conjugate(t), 1}}},
    };
    for (auto& want : table) {
      auto expect = ReprVector::zero(n, sym->dim(n));
      for (auto& [q, c] : want.terms) expect.coeffs[sym->index_of(WreathIrrepLabel::single(0, q), n)] += c;
      o.require(lift_sym(want.source, n).vector == expect,
                "S_5 lift of " + to_string(want.source) + " at n=" + std::to_string(n));
    }
  }

  auto z2 = Chain::from_spec("z2wreath");
  for (int n = 3; n <= 4; ++n) {
    auto r = lift_wreath(z2, z2->parse_label("1:[1];-1:[1]"), n);
    auto expect = z2->basis_vector(z2->parse_label("1:[" + std::to_string(n - 1) + "];-1:[1]"), n);
    auto triv = z2->basis_vector(z2->parse_label("1:[" + std::to_string(n) + "]"), n);
    triv *= Rational(-(n - 2));
    expect += triv;
    o.require(r.vector == expect && lift_is_exact(*z2, r), "Z2 lift at n=" + std::to_string(n));
  }
  return o;
}

Outcome jeongha_constraint() {
  Outcome o;
  auto sym = Chain::symmetric();
  auto ing = to_ingested(*sym, 7);
  auto params = fit_chain_params(ing.orders());
  for (int n = 1; n <= 7; ++n)
    for (int l = 1; l <= n; ++l) {
      auto f = params.predicted(l);
      const auto& lower = ing.level(n - l);
      for (std::size_t h = 0; h < lower.classes.size(); ++h) {
        auto rep = jeongha_class_constraint(ing, static_cast<int>(h), n, l, f);
        o.require(rep.pass, "n=" + std::to_string(n) + " l=" + std::to_string(l) + " class " + lower.classes[h].label);
      }
    }
  // Fixed-point-free tau in S_k: #[tau]_n = C(n,k) #[tau]_k.
  for (int k = 1; k <= 5; ++k)
    for (auto& c : enumerate_cycle_types(k)) {
      if (c.fixed_points() != 0) continue;
      for (int n = k; n <= 8; ++n)
        o.require(class_size(c.with_fixed_points(n)) == binomial(n, k) * class_size(c),
                  "class count of " + to_string(c.shape) + " at n=" + std::to_string(n));
    }
  return o;
}

Outcome jeongha_params() {
  Outcome o;
  auto sym = Chain::symmetric();
  auto z2 = Chain::from_spec("z2wreath");
  struct Case {
    std::shared_ptr<const Chain> chain;
    int max_n;
    long C;
  };
  for (auto& [chain, max_n, C] : std::vector<Case>{{sym, 7, 1}, {z2, 4, 2}}) {
    auto ing = to_ingested(*chain, max_n);
    auto params = fit_chain_params(ing.orders());
    o.require(params.status == ChainParams::Status::Fitted && params.B == 1 && params.C == C,
              chain->id() + " fit " + params.message);
    for (int l = 1; l <= max_n; ++l) {
      auto f = params.predicted(l);
      auto engine = FallingFactorialPoly{l, chain->scaling()}.roots();
      bool same = f.lead == 1 && f.roots.size() == engine.size();
      for (std::size_t i = 0; same && i < engine.size(); ++i) same = f.roots[i] == Rational(engine[i]);
      o.require(same, chain->id() + " predicted f_" + std::to_string(l) + " = " + f.to_string());
    }
  }
  auto ing = to_ingested(*sym, 7);
  auto params = fit_chain_params(ing.orders());
  for (int l = 1; l <= 5; ++l)
    o.require(roots_vs_characters(ing, l, params.predicted(l)).pass, "roots vs characters l=" + std::to_string(l));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> body;
  };
  std::vector<Criterion> criteria = {
      {1, "S_6 Ind Res operator", 1, s6_operator},
      {2, "S_6 column of (123)", 1, s6_column},
      {3, "reduced operator and odd columns at n=6", 1, reduced_operator_check},
      {4, "Z2 wreath S_2 character table", 1, wreath_table},
      {5, "Ind^l Res^l = f_l(X)", 30, tasyopari_oracle},
      {6, "Res Ind - Ind Res = |H| Id", 10, heisenberg},
      {7, "engine columns vs Murnaghan-Nakayama, n <= 8", 60, oracle_agreement},
      {8, "lifting exactness and lift tables", 10, lifting},
      {9, "class constraint and class counts", 30, jeongha_constraint},
      {10, "chain parameter fit and roots vs characters", 10, jeongha_params},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_s) {
      o.ok = false;
      o.detail = "over the " + std::to_string(c.limit_s) + " s limit";
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << secs << " s)";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << "\n";
  }
  return failed ? 1 : 0;
}
