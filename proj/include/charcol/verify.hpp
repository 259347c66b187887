#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charcol/chain.hpp"
#include "charcol/engine.hpp"
#include "charcol/partitions.hpp"
#include "charcol/sparse.hpp"

namespace charcol {

/// chi_lambda(mu) by Murnaghan-Nakayama: strip rim hooks of length mu_i off
/// lambda (beta-number moves), sign (-1)^height. Memoized.
Integer mn_character(const Partition& lambda, const CycleType& mu);

/// The MN column of mu over the canonical basis of S_n.
CharacterColumn oracle_column(const CycleType& mu, int n);

/// A polynomial lead * prod (X - root).
struct RootPoly {
  Rational lead = 1;
  std::vector<Rational> roots;

  Rational evaluate(const Rational& x) const;
  std::string to_string() const;
};

struct ChainParams {
  enum class Status { Fitted, Inconclusive, Violation };

  std::vector<Rational> ratios;  // a_1, a_2, ...
  Status status = Status::Inconclusive;
  Integer B = 0;
  Integer C = 0;
  bool constant = false;  // all ratios equal
  std::string message;

  /// B = 1, C >= 1 is realised by H^n x| S_n with |H| = C.
  bool known_chain() const { return status == Status::Fitted && B == 1 && C >= 1; }
  /// B^{-l(l-1)/2} X (X - C) (X - (1+B)C) ... ; X when inconclusive.
  RootPoly predicted(int l) const;
};

/// orders = |G_0|, |G_1|, ...
ChainParams fit_chain_params(const std::vector<Integer>& orders);
ChainParams fit_chain_params_from_ratios(const std::vector<Rational>& ratios);
const char* to_string(ChainParams::Status s);

/// A chain given level by level: bases only by size, Res as sparse integer
/// matrices, and conjugacy-class data.
struct IngestedChain {
  struct ClassEntry {
    std::string label;
    Integer size;
    std::string embeds_to;  // label at the next level, empty at the top
  };
  struct Level {
    int n = 0;
    Integer order;
    int basis_size = 0;
    SparseMatrix res;  // R(G_n) -> R(G_{n-1}); empty at the bottom level
    std::vector<ClassEntry> classes;
  };

  std::string name;
  std::vector<Level> levels;  // consecutive n starting at levels[0].n

  int min_n() const { return levels.front().n; }
  int max_n() const { return levels.back().n; }
  const Level& level(int n) const;
  int class_index(int n, const std::string& label) const;  // -1 if absent
  /// Index at level `to` of the class of h (index at level `from`).
  int embed(int from, int class_idx, int to) const;
  /// Ind(t) character at level n, class index c at level n.
  Rational ind_t_character(int n, int c) const;
  std::vector<Integer> orders() const;
};

/// Validates shapes, class data and surjectivity; throws ValidationError
/// ("not a surjective chain at level n" for rank deficiency).
void validate_chain(const IngestedChain& chain);
IngestedChain ingest_chain(const nlohmann::ordered_json& j);
IngestedChain ingest_chain(const std::string& path);
nlohmann::ordered_json export_chain(const IngestedChain& chain);
/// Levels 0..max_n of a built-in chain.
IngestedChain to_ingested(const Chain& chain, int max_n);

struct ConstraintReport {
  bool pass = false;
  Rational ind_t_value;
  Rational lhs;  // f_l(chi_Ind(t)(h))
  Rational rhs;  // |G_n| |[h]_{n-l}| / (|G_{n-l}| |[h]_n|)
};

/// Class constraint for h = class index `h` at level n-l.
ConstraintReport jeongha_class_constraint(const IngestedChain& chain, int h, int n, int l, const RootPoly& f);

struct RootsReport {
  int level_offset = 0;       // b: largest index with |G_b| = 1
  std::vector<Rational> roots;  // of f_l
  struct Candidate {
    int level = 0;
    std::vector<Rational> values;  // non-identity Ind(t) values, ascending, distinct
    bool matches = false;
  };
  std::vector<Candidate> candidates;  // [0] is level l + b, the one that decides
  bool pass = false;
};

RootsReport roots_vs_characters(const IngestedChain& chain, int l, const RootPoly& f);

/// Suites: "heisenberg", "tasyopari", "jeongha", "all". Reports are
/// {"suite","chain","pass","checks":[{"name","pass",...}]}.
nlohmann::ordered_json run_suite(const std::string& suite, std::shared_ptr<const Chain> chain, int max_n);
nlohmann::ordered_json run_suite(const std::string& suite, const IngestedChain& chain, int max_n);

}  // namespace charcol
