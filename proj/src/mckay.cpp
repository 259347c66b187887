#include "charcol/mckay.hpp"

#include <sstream>

#include "charcol/engine.hpp"
#include "charcol/errors.hpp"

namespace charcol {

SparseMatrix McKayGraph::adjacency() const {
  std::vector<SparseMatrix::Entry> entries;
  for (auto& e : edges) {
    entries.push_back({e.u, e.w, e.weight});
    if (e.u != e.w) entries.push_back({e.w, e.u, e.weight});
  }
  int size = static_cast<int>(vertices.size());
  return SparseMatrix(size, size, std::move(entries));
}

McKayGraph McKayGraph::from_adjacency(int n, std::vector<std::string> vertices, const SparseMatrix& a) {
  if (a.rows() != static_cast<int>(vertices.size()) || a.cols() != a.rows())
    throw std::invalid_argument("adjacency does not match the vertex list");
  if (a.transpose() != a) throw ValidationError("McKay adjacency is not symmetric");
  McKayGraph g;
  g.n = n;
  g.vertices = std::move(vertices);
  for (auto& e : a.row_major())
    if (e.row <= e.col) g.edges.push_back({e.row, e.col, e.value});
  return g;
}

McKayGraph build_graph(const Chain& chain, int n) {
  std::vector<std::string> names;
  for (auto& b : chain.basis(n)) names.push_back(chain.format(b));
  return McKayGraph::from_adjacency(n, std::move(names), chain.ind_res(n));
}

McKayGraph reduced_graph(const Chain& chain, int n) {
  auto Y = reduced_operator(chain, n);
  std::vector<std::string> names;
  for (auto& p : Y.plus_basis) names.push_back(to_string(p));
  return McKayGraph::from_adjacency(n, std::move(names), Y.matrix);
}

std::string export_dot(const McKayGraph& g) {
  std::ostringstream out;
  out << "graph mckay {\n";
  for (auto& v : g.vertices) out << "  \"" << v << "\";\n";
  for (auto& e : g.edges)
    out << "  \"" << g.vertices[e.u] << "\" -- \"" << g.vertices[e.w] << "\" [weight=" << e.weight.get_str() << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json export_json(const McKayGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["basis"] = g.vertices;
  auto entries = nlohmann::ordered_json::array();
  for (auto& e : g.adjacency().row_major()) entries.push_back({e.row, e.col, rational_to_json(Rational(e.value))});
  j["entries"] = entries;
  return j;
}

McKayGraph graph_from_json(const nlohmann::ordered_json& j) {
  try {
    auto vertices = j.at("basis").get<std::vector<std::string>>();
    int size = static_cast<int>(vertices.size());
    std::vector<SparseMatrix::Entry> entries;
    for (auto& t : j.at("entries")) {
      Integer v = t.at(2).is_string() ? Integer(t.at(2).get<std::string>()) : Integer(std::to_string(t.at(2).get<long long>()));
      entries.push_back({t.at(0).get<int>(), t.at(1).get<int>(), v});
    }
    return McKayGraph::from_adjacency(j.at("n").get<int>(), std::move(vertices), SparseMatrix(size, size, std::move(entries)));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed graph JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string export_graph(const McKayGraph& g, const std::string& format) {
  if (format == "dot") return export_dot(g);
  if (format == "json") return export_json(g).dump(2) + "\n";
  throw UsageError("unknown graph format '" + format + "' (dot, json)");
}

}  // namespace charcol
