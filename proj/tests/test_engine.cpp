#include <doctest.h>

#include <string>

#include "charcol/engine.hpp"
#include "charcol/errors.hpp"
#include "charcol/verify.hpp"

using namespace charcol;

TEST_CASE("falling factorial polynomial") {
  FallingFactorialPoly f{3, 1};
  CHECK(f.roots() == std::vector<Integer>{0, 1, 2});
  CHECK(f.coefficients() == std::vector<Integer>{0, 2, -3, 1});
  CHECK(f.evaluate(Integer(5)) == 60);
  FallingFactorialPoly g{2, 2};
  CHECK(g.coefficients() == std::vector<Integer>{0, -2, 1});
  CHECK(FallingFactorialPoly{0, 3}.evaluate(Integer(7)) == 1);

  auto sym = Chain::symmetric();
  const auto& X = sym->ind_res(5);
  auto F = FallingFactorialPoly{3, 1}.evaluate(X);
  for (int j = 0; j < X.cols(); ++j) {
    std::vector<Rational> e(X.cols(), 0);
    e[j] = 1;
    auto v = apply_falling_factorial(X, 3, 1, e);
    for (int i = 0; i < X.rows(); ++i) CHECK(v[i] == Rational(F.at(i, j)));
  }
  CHECK_THROWS_AS(apply_falling_factorial(X, 1, 1, std::vector<Rational>(2)), std::invalid_argument);
}

TEST_CASE("identity and transposition columns") {
  auto sym = Chain::symmetric();
  for (int n = 1; n <= 8; ++n) {
    auto e = character_column(sym, ColoredCycleType{{CycleType{Partition({1})}.with_fixed_points(n).shape}}, n);
    for (std::size_t i = 0; i < e.values.size(); ++i) CHECK(e.values[i] == dim_irrep(sym->basis(n)[i].shape_of(0)));
  }
  auto c = character_column(sym, ColoredCycleType{{Partition({2})}}, 4);
  CHECK(c.cls == ColoredCycleType{{Partition({2, 1, 1})}});
  CHECK(c.values == std::vector<Integer>{1, 1, 0, -1, -1});
}

TEST_CASE("columns are eigenvectors of X") {
  for (auto spec : {"sym", "z2wreath"}) {
    auto chain = Chain::from_spec(spec);
    Lifter lifter(chain);
    int max_n = chain->is_symmetric() ? 8 : 4;
    for (int n = 1; n <= max_n; ++n)
      for (auto& c : enumerate_colored_cycle_types(chain->num_h_classes(), n)) {
        auto col = character_column(lifter, c, n);
        std::vector<Rational> v(col.values.begin(), col.values.end());
        auto Xv = chain->ind_res(n).apply(v);
        Rational lambda = chain->ind_t_character(c);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(Xv[i] == lambda * v[i]);
      }
  }
}

TEST_CASE("Z2 wreath columns match the brute-force table") {
  auto z2 = Chain::from_spec("z2wreath");
  Lifter lifter(z2);
  for (int n = 1; n <= 4; ++n) {
    auto table = z2->table(n);
    for (std::size_t j = 0; j < table.classes.size(); ++j) {
      auto col = character_column(lifter, table.classes[j], n);
      for (std::size_t u = 0; u < table.irreps.size(); ++u)
        CHECK(col.values[z2->index_of(table.irreps[u], n)] == table.values[u][j]);
    }
  }
}

TEST_CASE("any table level between the support and n gives the same column") {
  auto sym = Chain::symmetric();
  Lifter lifter(sym);
  ColoredCycleType c{{Partition({3, 2})}};
  auto base = character_column(lifter, c, 8);
  for (int k = 5; k <= 8; ++k) CHECK(character_column(lifter, c, 8, k).values == base.values);
  CHECK_THROWS_AS(character_column(lifter, c, 8, 4), UsageError);
  CHECK_THROWS_AS(character_column(lifter, c, 4), UsageError);

  auto z2 = Chain::from_spec("z2wreath");
  Lifter zl(z2);
  auto zc = z2->parse_class("-1:[2]");
  auto table = z2->table(3);
  CHECK(character_column(zl, zc, 4, 3, &table).values == character_column(zl, zc, 4).values);
}

TEST_CASE("wreath tables past the size bound ask for a JSON table") {
  auto z2 = Chain::from_spec("z2wreath");
  Lifter lifter(z2);
  set_max_order_override(Integer(4));
  try {
    character_column(lifter, z2->parse_class("1:[3]"), 4);
    FAIL("expected ResourceBoundError");
  } catch (const ResourceBoundError& e) {
    CHECK(std::string(e.what()).find("JSON") != std::string::npos);
  }
  set_max_order_override(std::nullopt);
}

TEST_CASE("plus basis is chi((12)) > 0") {
  for (int n = 2; n <= 12; ++n)
    for (auto& p : enumerate_partitions(n))
      CHECK(in_plus_basis(p) == (mn_character(p, CycleType{Partition({2})}.with_fixed_points(n)) > 0));
}

TEST_CASE("reduced operator") {
  auto sym = Chain::symmetric();
  auto Y = reduced_operator(*sym, 6);
  CHECK(Y.level == 6);
  CHECK(Y.plus_basis.size() == 5);
  CHECK(Y.matrix.to_dense() == std::vector<std::vector<Integer>>{
                                   {1, 1, 0, 0, 0}, {1, 2, 1, 1, 0}, {0, 1, 2, 1, 1}, {0, 1, 1, 1, 0}, {0, 0, 1, 0, 1}});
  CHECK_THROWS_AS(reduced_operator(*Chain::from_spec("z2wreath"), 3), UnsupportedChainError);
}

TEST_CASE("odd columns match Murnaghan-Nakayama") {
  auto sym = Chain::symmetric();
  for (int n = 2; n <= 10; ++n)
    for (auto& c : enumerate_cycle_types(n)) {
      if (!c.is_odd()) continue;
      auto odd = odd_column(*sym, c, n);
      CHECK(odd.column.values == oracle_column(c, n).values);
    }
  CHECK_THROWS_AS(odd_column(*sym, CycleType{Partition({3})}, 5), std::invalid_argument);
}

TEST_CASE("odd columns stop where pr+ loses information") {
  // Some non-self-conjugate diagram of 15 and its conjugate both vanish on (12).
  bool found = false;
  for (auto& p : enumerate_partitions(15))
    if (p.content_sum() == 0 && conjugate(p) != p) found = true;
  REQUIRE(found);
  CHECK_THROWS_AS(odd_column(*Chain::symmetric(), CycleType{Partition({2})}, 15), std::domain_error);
}
