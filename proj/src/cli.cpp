#include "charcol/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "charcol/chain.hpp"
#include "charcol/engine.hpp"
#include "charcol/errors.hpp"
#include "charcol/hgroup.hpp"
#include "charcol/lifting.hpp"
#include "charcol/mckay.hpp"
#include "charcol/verify.hpp"

namespace charcol {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string chain = "sym";
  std::string format;
  std::string out_path;
  std::string max_order;

  std::string class_label;
  std::string label;
  std::string policy = "sign-balanced";
  std::string suite = "all";
  std::string export_path;
  std::string table_path;
  int n = -1;
  int k = -1;
  int max_n = 6;
  bool odd = false;
  bool oracle = false;
  bool paper_order = false;
  bool dump = false;
  bool reduced = false;
};

// Position of each canonical index in the mirrored order of hand-drawn tables.
std::vector<std::size_t> paper_permutation(const Chain& chain, int n) {
  if (!chain.is_symmetric()) throw UsageError("--paper-order applies to the symmetric chain only");
  std::vector<std::size_t> order;
  for (auto& p : mirrored_order(n)) order.push_back(chain.index_of(WreathIrrepLabel::single(0, p), n));
  return order;
}

std::vector<std::size_t> identity_order(std::size_t size) {
  std::vector<std::size_t> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = i;
  return order;
}

LabelledTable table_from_file(const Chain& chain, const std::string& path, int k) {
  auto t = load_table(path);
  LabelledTable out;
  out.order = t.order;
  for (auto& c : t.classes) {
    out.classes.push_back(chain.parse_class(c.label, k));
    out.class_sizes.push_back(c.size);
  }
  for (auto& u : t.irreps) {
    out.irreps.push_back(chain.parse_label(u.label));
    out.values.push_back(u.values);
  }
  for (auto& c : out.classes)
    if (c.size() != k) throw UsageError("table class " + chain.format(c) + " is not a class of level " + std::to_string(k));
  return out;
}

int cmd_column(const RunConfig& cfg, std::shared_ptr<const Chain> chain, std::ostream& out) {
  if (cfg.n < 0) throw UsageError("--n is required");
  auto cls = chain->parse_class(cfg.class_label, cfg.n);
  if (cls.size() > cfg.n) throw UsageError("class " + cfg.class_label + " does not fit at level " + std::to_string(cfg.n));

  CharacterColumn col;
  std::optional<std::vector<Integer>> plus;
  std::vector<Partition> plus_basis;
  if (cfg.odd) {
    if (!chain->is_symmetric()) throw UsageError("--odd needs the symmetric chain");
    CycleType tau{cls.by_class[0]};
    if (!tau.is_odd()) throw UsageError("--odd needs an odd class");
    auto oc = odd_column(*chain, tau, cfg.n);
    col = oc.column;
    plus = oc.plus_part;
    plus_basis = reduced_operator(*chain, cfg.n).plus_basis;
  } else {
    Lifter lifter(chain);
    std::optional<int> k;
    if (cfg.k >= 0) k = cfg.k;
    std::optional<LabelledTable> table;
    if (!cfg.table_path.empty()) {
      if (!k) throw UsageError("--table needs --k");
      table = table_from_file(*chain, cfg.table_path, *k);
    }
    col = character_column(lifter, cls, cfg.n, k, table ? &*table : nullptr);
  }

  std::optional<std::vector<Integer>> oracle;
  if (cfg.oracle) {
    if (!chain->is_symmetric()) throw UsageError("--oracle needs the symmetric chain");
    oracle = oracle_column(CycleType{cls.by_class[0]}, cfg.n).values;
  }

  const auto& basis = chain->basis(cfg.n);
  auto order = cfg.paper_order ? paper_permutation(*chain, cfg.n) : identity_order(basis.size());
  std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    Json j;
    j["chain"] = chain->id();
    j["n"] = cfg.n;
    j["class"] = chain->format(col.cls);
    j["order"] = cfg.paper_order ? "paper" : "canonical";
    auto entries = Json::array();
    for (auto i : order) entries.push_back({chain->format(basis[i]), rational_to_json(Rational(col.values[i]))});
    j["values"] = entries;
    if (plus) {
      auto p = Json::array();
      for (std::size_t i = 0; i < plus_basis.size(); ++i)
        p.push_back({to_string(plus_basis[i]), rational_to_json(Rational((*plus)[i]))});
      j["plus"] = p;
    }
    if (oracle) {
      auto o = Json::array();
      for (auto i : order) o.push_back({chain->format(basis[i]), rational_to_json(Rational((*oracle)[i]))});
      j["oracle"] = o;
      j["agrees"] = *oracle == col.values;
    }
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "label,value" << (oracle ? ",oracle" : "") << "\n";
    for (auto i : order) {
      out << "\"" << chain->format(basis[i]) << "\"," << col.values[i].get_str();
      if (oracle) out << "," << (*oracle)[i].get_str();
      out << "\n";
    }
  } else {
    throw UsageError("unknown format '" + format + "' for column (json, csv)");
  }
  return oracle && *oracle != col.values ? kExitVerificationFailed : kExitOk;
}

int cmd_lift(const RunConfig& cfg, std::shared_ptr<const Chain> chain, std::ostream& out) {
  if (cfg.n < 0) throw UsageError("--n is required");
  auto w = chain->parse_label(cfg.label);
  if (cfg.k >= 0 && w.size() != cfg.k)
    throw UsageError("label " + cfg.label + " has " + std::to_string(w.size()) + " boxes, not --k " + std::to_string(cfg.k));
  if (cfg.n < w.size()) throw UsageError("--n must be at least the label size");
  LiftPolicy policy;
  if (cfg.policy == "sign-balanced")
    policy = LiftPolicy::SignBalanced;
  else if (cfg.policy == "first-row")
    policy = LiftPolicy::FirstRow;
  else
    throw UsageError("unknown lift policy '" + cfg.policy + "' (sign-balanced, first-row)");
  auto rec = lift_wreath(chain, w, cfg.n, policy);
  if (!lift_is_exact(*chain, rec)) throw std::logic_error("lift failed its restriction check");
  out << vector_to_json(*chain, rec.vector).dump(2) << "\n";
  return kExitOk;
}

int cmd_indres(const RunConfig& cfg, std::shared_ptr<const Chain> chain, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  const auto& X = chain->ind_res(cfg.n);
  const auto& basis = chain->basis(cfg.n);
  if (cfg.dump) {
    if (cfg.paper_order) throw UsageError("--dump always uses the canonical basis order");
    out << operator_dump(*chain, cfg.n, X).dump(2) << "\n";
    return kExitOk;
  }
  auto order = cfg.paper_order ? paper_permutation(*chain, cfg.n) : identity_order(basis.size());
  for (auto r : order) {
    out << chain->format(basis[r]) << ":";
    for (auto c : order) out << " " << X.at(static_cast<int>(r), static_cast<int>(c)).get_str();
    out << "\n";
  }
  return kExitOk;
}

int cmd_mckay(const RunConfig& cfg, std::shared_ptr<const Chain> chain, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  auto g = cfg.reduced ? reduced_graph(*chain, cfg.n) : build_graph(*chain, cfg.n);
  out << export_graph(g, cfg.format.empty() ? "dot" : cfg.format);
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::shared_ptr<const Chain> chain, std::ostream& out) {
  if (cfg.k < 0) throw UsageError("--k is required");
  if (!cfg.format.empty() && cfg.format != "json") throw UsageError("table output is JSON only");
  auto t = chain->table(cfg.k);
  std::string name = chain->is_symmetric() ? "S" + std::to_string(cfg.k)
                                           : chain->base().table.name + " wr S" + std::to_string(cfg.k);
  auto gt = t.to_group_table(chain->base(), name);
  validate_table(gt);
  out << table_to_json(gt).dump(2) << "\n";
  return kExitOk;
}

bool is_ingestion_file(const std::string& spec) {
  if (spec.size() < 5 || spec.substr(spec.size() - 5) != ".json") return false;
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open '" + spec + "'");
  auto j = nlohmann::ordered_json::parse(in, nullptr, false);
  return j.is_object() && j.contains("levels");
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Json report;
  if (is_ingestion_file(cfg.chain)) {
    if (!cfg.export_path.empty()) throw UsageError("--export works on built-in chains only");
    auto ingested = ingest_chain(cfg.chain);
    report = run_suite(cfg.suite, ingested, cfg.max_n);
  } else {
    auto chain = Chain::from_spec(cfg.chain);
    if (!cfg.export_path.empty()) {
      std::ofstream f(cfg.export_path);
      if (!f) throw UsageError("cannot write '" + cfg.export_path + "'");
      f << export_chain(to_ingested(*chain, cfg.max_n)).dump(2) << "\n";
    }
    report = run_suite(cfg.suite, chain, cfg.max_n);
  }
  out << report.dump(2) << "\n";
  return report["pass"].get<bool>() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Character-table columns of S_n and H wr S_n from Ind/Res falling factorials", "charcol"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--chain", cfg.chain, "sym, z2wreath, wreath:<H>, an H table path, or (verify) a chain file");
  app.add_option("--format", cfg.format, "json|csv (column), dot|json (mckay)");
  app.add_option("--out", cfg.out_path, "write output to this file");
  app.add_option("--max-order", cfg.max_order, "bound on brute-force wreath enumeration");

  auto* column = app.add_subcommand("column", "one character-table column");
  column->add_option("--class", cfg.class_label, "cycle type, e.g. [3,1,1,1], or 1:[1];-1:[1], or e")->required();
  column->add_option("--n", cfg.n, "level")->required();
  column->add_option("--k", cfg.k, "level of the small table (default: class support)");
  column->add_option("--table", cfg.table_path, "GroupTable JSON of level k");
  column->add_flag("--odd", cfg.odd, "use the reduced operator (odd classes of S_n)");
  column->add_flag("--oracle", cfg.oracle, "also print the Murnaghan-Nakayama column");
  column->add_flag("--paper-order", cfg.paper_order, "conjugate-mirrored basis order");

  auto* lift = app.add_subcommand("lift", "lift an irrep of G_k to R(G_n)");
  lift->add_option("--k", cfg.k, "source level");
  lift->add_option("--label", cfg.label, "irrep label")->required();
  lift->add_option("--n", cfg.n, "target level")->required();
  lift->add_option("--policy", cfg.policy, "sign-balanced|first-row");

  auto* indres = app.add_subcommand("indres", "the operator X = Ind Res");
  indres->add_option("--n", cfg.n, "level")->required();
  indres->add_flag("--dump", cfg.dump, "JSON dump");
  indres->add_flag("--paper-order", cfg.paper_order, "conjugate-mirrored basis order");

  auto* mckay = app.add_subcommand("mckay", "McKay graph of Ind(t)");
  mckay->add_option("--n", cfg.n, "level")->required();
  mckay->add_flag("--reduced", cfg.reduced, "reduced graph on the plus basis");

  auto* table = app.add_subcommand("table", "character table of G_k");
  table->add_option("--k", cfg.k, "level")->required();

  auto* verify = app.add_subcommand("verify", "run identity and constraint suites");
  verify->add_option("--suite", cfg.suite, "heisenberg|tasyopari|jeongha|all");
  verify->add_option("--maxN", cfg.max_n, "largest level checked");
  verify->add_option("--export", cfg.export_path, "write the chain in ingestion format");

  std::vector<std::string> argv_store{"charcol"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  struct ResetBound {
    ~ResetBound() { set_max_order_override(std::nullopt); }
  } reset_bound;
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (!cfg.max_order.empty()) {
      Integer bound;
      if (bound.set_str(cfg.max_order, 10) != 0 || bound <= 0) throw UsageError("--max-order must be a positive integer");
      set_max_order_override(bound);
    }
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
      sink = &file;
    }
    int status;
    if (verify->parsed()) {
      status = cmd_verify(cfg, *sink);
    } else {
      auto chain = Chain::from_spec(cfg.chain);
      if (column->parsed())
        status = cmd_column(cfg, chain, *sink);
      else if (lift->parsed())
        status = cmd_lift(cfg, chain, *sink);
      else if (indres->parsed())
        status = cmd_indres(cfg, chain, *sink);
      else if (mckay->parsed())
        status = cmd_mckay(cfg, chain, *sink);
      else
        status = cmd_table(cfg, chain, *sink);
    }
    return status;
  } catch (const ResourceBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceBound;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedChainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace charcol
