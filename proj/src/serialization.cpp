#include "hcb/serialization.hpp"

#include <fstream>
#include <sstream>

#include "hcb/errors.hpp"

namespace hcb {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("rational entries must be \"p/q\" strings or integers");
}

json relations_json(const Quiver& quiver, const std::vector<Relation>& relations) {
  json rels = json::array();
  for (const auto& r : relations) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      json path = json::array();
      for (auto a : t.arrows) path.push_back(quiver.arrow(a).name);
      terms.push_back({{"coeff", to_string(t.coeff)}, {"path", path}});
    }
    rels.push_back(terms);
  }
  return rels;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

QuiverSpec parse_quiver_spec(const json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : field(j, "vertices")) vertices.push_back(as_string(v, "vertex"));
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    const Quiver bare(vertices, {});
    for (const auto& a : j.at("arrows")) {
      arrows.push_back({as_string(field(a, "name"), "arrow name"),
                        bare.vertex_index(as_string(field(a, "source"), "source")),
                        bare.vertex_index(as_string(field(a, "target"), "target"))});
    }
  }
  QuiverSpec spec{Quiver(std::move(vertices), std::move(arrows)), {}};
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      if (!r.is_array()) throw InputError("a relation is a list of terms");
      std::vector<std::pair<Rational, std::vector<std::string>>> terms;
      for (const auto& t : r) {
        std::vector<std::string> path;
        for (const auto& a : field(t, "path")) path.push_back(as_string(a, "arrow name"));
        terms.emplace_back(t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1), std::move(path));
      }
      spec.relations.push_back(make_relation(spec.quiver, terms));
    }
  }
  return spec;
}

json to_json(const Quiver& quiver, const std::vector<Relation>& relations) {
  json arrows = json::array();
  for (const auto& a : quiver.arrows())
    arrows.push_back({{"name", a.name}, {"source", quiver.vertices()[a.source]}, {"target", quiver.vertices()[a.target]}});
  return {{"vertices", quiver.vertices()}, {"arrows", arrows}, {"relations", relations_json(quiver, relations)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ShapeMismatch("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ShapeMismatch("matrix rows must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

QuiverRep parse_rep(const Quiver& quiver, const json& j) {
  std::vector<std::size_t> dims(quiver.vertex_count(), 0);
  const auto& d = field(j, "dims");
  if (!d.is_object()) throw InputError("'dims' must map vertex names to dimensions");
  for (const auto& [name, value] : d.items()) {
    if (!value.is_number_integer() || value.get<long>() < 0) throw InputError("dimensions must be non-negative integers");
    dims[quiver.vertex_index(name)] = value.get<std::size_t>();
  }
  QuiverRep rep = zero_rep(quiver, dims);
  if (j.contains("maps")) {
    if (!j.at("maps").is_object()) throw InputError("'maps' must map arrow names to matrices");
    for (const auto& [name, value] : j.at("maps").items()) {
      const auto a = quiver.arrow_index(name);
      const auto& ar = quiver.arrow(a);
      rep.maps[a] = matrix_from_json(value, dims[ar.target], dims[ar.source]);
    }
  }
  return rep;
}

json rep_to_json(const Quiver& quiver, const QuiverRep& m) {
  json dims = json::object(), maps = json::object();
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) dims[quiver.vertices()[v]] = m.dims[v];
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) maps[quiver.arrow(a).name] = matrix_to_json(m.maps[a]);
  return {{"dims", dims}, {"maps", maps}};
}

json algebra_to_json(const FDAlgebra& algebra) {
  json basis = json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    const auto& b = algebra.element(i);
    basis.push_back({{"label", algebra.label(i)},
                     {"source", algebra.vertices()[b.source]},
                     {"target", algebra.vertices()[b.target]},
                     {"degree", b.degree}});
  }
  json products = json::array();
  for (std::size_t x = 0; x < algebra.dim(); ++x) {
    for (std::size_t y = 0; y < algebra.dim(); ++y) {
      const auto& p = algebra.product(x, y);
      if (p.empty()) continue;
      json terms = json::array();
      for (const auto& [idx, c] : p) terms.push_back({{"basis", idx}, {"coeff", to_string(c)}});
      products.push_back({{"left", x}, {"right", y}, {"result", terms}});
    }
  }
  json out = {{"dimension", algebra.dim()},
              {"vertices", algebra.vertices()},
              {"graded_dims", algebra.graded_dims()},
              {"basis", basis},
              {"products", products}};
  if (algebra.quiver()) out["presentation"] = to_json(*algebra.quiver(), algebra.relations());
  return out;
}

json serre_quotient_to_json(const SerreQuotient& q) {
  json out = algebra_to_json(q.algebra);
  out["retained"] = q.retained;
  out["basis_in_parent"] = q.basis_in_parent;
  const QuiverPresentation pres = present_as_quiver(q.algebra);
  if (pres.ok) {
    out["presentation"] = to_json(pres.quiver, pres.relations);
  } else {
    out["presentation"] = nullptr;
    out["presentation_failure"] = pres.failure;
  }
  return out;
}

json to_json(const ParameterClass& cls) {
  json out = {{"variant", to_string(cls.kind)}};
  if (cls.kind == ParameterKind::Rational) {
    out["r"] = cls.r;
    out["m"] = cls.m;
  }
  out["negative"] = cls.negative;
  return out;
}

json to_json(const LeafDescriptor& leaf) { return {{"index", leaf.index}, {"parabolic", leaf.parabolic.blocks()}}; }

json to_json(const IdealChain& chain) {
  json entries = json::array();
  for (const auto& e : chain.entries) {
    json entry = {{"ideal", "J_" + std::to_string(e.index)}, {"simple_support", to_json(e.simple_support)}};
    entry["quotient_support"] = e.quotient_support ? to_json(*e.quotient_support) : json(nullptr);
    entries.push_back(entry);
  }
  return {{"n", chain.n}, {"m", chain.m}, {"length", chain.entries.size()}, {"chain", entries}};
}

json to_json(const K0Vector& v) {
  json out = json::array();
  for (const auto& [taus, mult] : v) {
    json key = json::array();
    for (const auto& t : taus) key.push_back(t.to_string());
    out.push_back({{"taus", key}, {"multiplicity", mult}});
  }
  return out;
}

json block_to_json(const BlockModel& block) {
  const Quiver& q = *block.algebra.quiver();
  json leaves = json::array();
  for (const auto& l : block.leaf_map) leaves.push_back(to_json(l));
  return {{"n", block.n},
          {"m", block.m},
          {"k", block.k},
          {"dimension", block.algebra.dim()},
          {"quiver", to_json(q, block.algebra.relations())},
          {"H", rep_to_json(q, block.regular)},
          {"D", rep_to_json(q, block.wall_crossing)},
          {"leaves", leaves}};
}

std::string quiver_to_dot(const Quiver& quiver, const std::vector<std::string>& vertex_labels) {
  std::ostringstream out;
  out << "digraph Q {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
    const std::string& label = v < vertex_labels.size() ? vertex_labels[v] : quiver.vertices()[v];
    out << "  v" << v << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& a : quiver.arrows())
    out << "  v" << a.source << " -> v" << a.target << " [label=\"" << dot_escape(a.name) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string block_to_dot(const BlockModel& block) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < block.leaf_map.size(); ++v)
    labels.push_back("S_" + std::to_string(v) + " (leaf " + std::to_string(block.leaf_map[v].index) + ")");
  return quiver_to_dot(*block.algebra.quiver(), labels);
}

}  // namespace hcb
