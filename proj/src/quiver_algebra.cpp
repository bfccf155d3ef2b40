#include "hcb/quiver_algebra.hpp"

#include <algorithm>
#include <set>

#include "hcb/errors.hpp"
#include "hcb/matrix.hpp"

namespace hcb {

// ---------------------------------------------------------------------------
// Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> names;
  for (const auto& v : vertices_)
    if (!names.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
  for (const auto& a : arrows_) {
    if (!names.insert(a.name).second) throw InputError("duplicate arrow or vertex name '" + a.name + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw InputError("arrow '" + a.name + "' has an undeclared endpoint");
  }
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw InputError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  throw InputError("unknown arrow '" + name + "'");
}

Relation make_relation(const Quiver& quiver, const std::vector<std::pair<Rational, std::vector<std::string>>>& terms) {
  Relation r;
  for (const auto& [coeff, names] : terms) {
    PathTerm t{coeff, {}};
    for (const auto& n : names) {
      const auto a = quiver.arrow_index(n);
      if (!t.arrows.empty() && quiver.arrow(t.arrows.back()).target != quiver.arrow(a).source)
        throw InputError("path is not composable at arrow '" + n + "'");
      t.arrows.push_back(a);
    }
    r.terms.push_back(std::move(t));
  }
  return r;
}

// ---------------------------------------------------------------------------
// SparseEchelon

namespace {

SparseVector to_sparse(const std::map<std::size_t, Rational>& acc) {
  SparseVector out;
  out.reserve(acc.size());
  for (const auto& [i, c] : acc)
    if (sgn(c) != 0) out.emplace_back(i, c);
  return out;
}

}  // namespace

SparseVector SparseEchelon::reduce(const SparseVector& v) const {
  std::map<std::size_t, Rational> acc(v.begin(), v.end());
  auto it = acc.begin();
  while (it != acc.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end() || sgn(it->second) == 0) {
      ++it;
      continue;
    }
    const Rational f = it->second;
    for (const auto& [col, val] : row->second) {
      if (col == it->first) continue;
      Rational& x = acc[col];
      x -= f * val;
      if (sgn(x) == 0) acc.erase(col);
    }
    it = acc.erase(it);
  }
  return to_sparse(acc);
}

bool SparseEchelon::insert(SparseVector v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const Rational lead = r.front().second;
  for (auto& [col, val] : r) val /= lead;
  rows_.emplace(r.front().first, std::move(r));
  return true;
}

// ---------------------------------------------------------------------------
// FDAlgebra

FDAlgebra::FDAlgebra(std::vector<std::string> vertices, std::vector<BasisElement> basis,
                     std::vector<std::string> labels, std::vector<SparseVector> products)
    : vertices_(std::move(vertices)),
      basis_(std::move(basis)),
      labels_(std::move(labels)),
      products_(std::move(products)) {
  if (labels_.size() != basis_.size()) throw ShapeMismatch("one label per basis element required");
  if (products_.size() != basis_.size() * basis_.size()) throw ShapeMismatch("product table must be dim x dim");
  for (const auto& b : basis_)
    if (b.source >= vertices_.size() || b.target >= vertices_.size())
      throw InputError("basis element attached to an unknown vertex");
}

SparseVector FDAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : product(i, j)) acc[k] += a * b * c;
  return to_sparse(acc);
}

std::size_t FDAlgebra::idempotent(std::size_t v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == 0 && basis_[i].source == v && basis_[i].target == v) return i;
  throw DomainError("no idempotent at vertex " + std::to_string(v));
}

std::vector<std::size_t> FDAlgebra::graded_dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis_) {
    if (b.degree >= out.size()) out.resize(b.degree + 1, 0);
    ++out[b.degree];
  }
  return out;
}

std::size_t FDAlgebra::arrow_element(std::size_t a) const {
  if (!quiver_) throw DomainError("algebra has no quiver presentation");
  return arrow_elements_.at(a);
}

SparseVector FDAlgebra::normal_form(std::size_t source, std::span<const std::size_t> word) const {
  if (!quiver_) throw DomainError("algebra has no quiver presentation");
  if (source >= vertices_.size()) throw InputError("unknown source vertex");
  std::size_t at = source;
  for (auto a : word) {
    if (a >= quiver_->arrow_count()) throw InputError("unknown arrow index");
    if (quiver_->arrow(a).source != at) throw InputError("path is not composable");
    at = quiver_->arrow(a).target;
  }
  if (word.empty()) return {{idempotent(source), Rational(1)}};
  if (word.size() >= degrees_.size()) return {};
  const DegreeData& d = degrees_[word.size()];
  const std::vector<std::size_t> key(word.begin(), word.end());
  const SparseVector reduced = d.ideal.reduce({{d.column.at(key), Rational(1)}});
  SparseVector out;
  out.reserve(reduced.size());
  for (const auto& [col, c] : reduced) out.emplace_back(d.basis_of_column[col], c);
  return out;
}

bool FDAlgebra::is_associative() const {
  const std::size_t n = dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (basis_[y].target != basis_[x].source) continue;
      const SparseVector xy = product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (basis_[z].target != basis_[y].source) continue;
        const SparseVector left = multiply(xy, {{z, Rational(1)}});
        const SparseVector right = multiply({{x, Rational(1)}}, product(y, z));
        if (left != right) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// build_algebra

namespace {

constexpr std::size_t kPathBudget = 2'000'000;

struct NormalizedRelation {
  std::size_t length = 0;
  Relation relation;
};

std::vector<NormalizedRelation> normalize_relations(const Quiver& q, const std::vector<Relation>& relations) {
  std::vector<NormalizedRelation> out;
  for (std::size_t ri = 0; ri < relations.size(); ++ri) {
    const std::string where = "relation " + std::to_string(ri);
    std::map<std::vector<std::size_t>, Rational> merged;
    for (const auto& t : relations[ri].terms) {
      for (auto a : t.arrows)
        if (a >= q.arrow_count()) throw InputError(where + ": unknown arrow index");
      if (t.arrows.size() < 2)
        throw NonAdmissible(where + ": term of length " + std::to_string(t.arrows.size()) +
                            " lies outside the square of the arrow ideal");
      for (std::size_t i = 1; i < t.arrows.size(); ++i)
        if (q.arrow(t.arrows[i - 1]).target != q.arrow(t.arrows[i]).source)
          throw InputError(where + ": path is not composable");
      merged[t.arrows] += t.coeff;
    }
    NormalizedRelation nr;
    std::size_t source = 0, target = 0;
    bool first = true;
    for (const auto& [word, c] : merged) {
      if (sgn(c) == 0) continue;
      const std::size_t s = q.arrow(word.front()).source, t = q.arrow(word.back()).target;
      if (first) {
        source = s;
        target = t;
        nr.length = word.size();
        first = false;
      } else {
        if (s != source || t != target) throw InputError(where + ": paths are not parallel");
        if (word.size() != nr.length)
          throw InputError(where + ": relation is not length-homogeneous (all terms must have the same length)");
      }
      nr.relation.terms.push_back({c, word});
    }
    if (!first) out.push_back(std::move(nr));
  }
  return out;
}

std::string word_label(const Quiver& q, const std::vector<std::size_t>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? "." : "") + q.arrow(word[i]).name;
  return out;
}

}  // namespace

FDAlgebra build_algebra(const Quiver& quiver, const std::vector<Relation>& relations, std::size_t max_length) {
  const auto rels = normalize_relations(quiver, relations);

  FDAlgebra alg;
  alg.vertices_ = quiver.vertices();
  alg.quiver_ = quiver;
  for (const auto& r : rels) alg.relations_.push_back(r.relation);

  using DegreeData = FDAlgebra::DegreeData;
  std::vector<std::vector<std::vector<std::size_t>>> words;  // per degree, per column
  std::vector<std::size_t> column_target;

  // Degree 0: the lazy paths, one column per vertex.
  {
    DegreeData d0;
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
      d0.column_source.push_back(v);
      d0.basis_of_column.push_back(alg.basis_.size());
      alg.basis_.push_back({v, v, 0, {}});
      alg.labels_.push_back("e_" + quiver.vertices()[v]);
    }
    alg.degrees_.push_back(std::move(d0));
    words.emplace_back(quiver.vertex_count());
  }

  std::vector<std::vector<std::size_t>> prev_words;
  std::vector<std::size_t> prev_targets;
  bool vanished = quiver.vertex_count() == 0;
  for (std::size_t length = 1; length <= max_length && !vanished; ++length) {
    // Free paths of this length, sorted lexicographically by arrow indices.
    std::vector<std::vector<std::size_t>> paths;
    if (length == 1) {
      for (std::size_t a = 0; a < quiver.arrow_count(); ++a) paths.push_back({a});
    } else {
      for (std::size_t p = 0; p < prev_words.size(); ++p)
        for (std::size_t a = 0; a < quiver.arrow_count(); ++a)
          if (quiver.arrow(a).source == prev_targets[p]) {
            auto w = prev_words[p];
            w.push_back(a);
            paths.push_back(std::move(w));
          }
      if (paths.size() > kPathBudget)
        throw NotFiniteDimensional("path space of length " + std::to_string(length) +
                                   " exceeds the enumeration budget before any degree vanished");
    }
    std::sort(paths.begin(), paths.end());

    DegreeData d;
    std::vector<std::size_t> targets;
    for (std::size_t c = 0; c < paths.size(); ++c) {
      d.column.emplace(paths[c], c);
      d.column_source.push_back(quiver.arrow(paths[c].front()).source);
      targets.push_back(quiver.arrow(paths[c].back()).target);
    }

    auto to_columns = [&](std::map<std::size_t, Rational> acc) { return to_sparse(acc); };

    // The degree-(L-1) part of the ideal, multiplied by one arrow on either side.
    if (length >= 2) {
      const DegreeData& below = alg.degrees_[length - 1];
      for (const auto& [pivot, row] : below.ideal.rows()) {
        const std::size_t src = below.column_source[row.front().first];
        const std::size_t tgt = quiver.arrow(prev_words[row.front().first].back()).target;
        for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
          if (quiver.arrow(a).source == tgt) {
            std::map<std::size_t, Rational> acc;
            for (const auto& [col, c] : row) {
              auto w = prev_words[col];
              w.push_back(a);
              acc[d.column.at(w)] += c;
            }
            d.ideal.insert(to_columns(std::move(acc)));
          }
          if (quiver.arrow(a).target == src) {
            std::map<std::size_t, Rational> acc;
            for (const auto& [col, c] : row) {
              std::vector<std::size_t> w{a};
              w.insert(w.end(), prev_words[col].begin(), prev_words[col].end());
              acc[d.column.at(w)] += c;
            }
            d.ideal.insert(to_columns(std::move(acc)));
          }
        }
      }
    }
    for (const auto& r : rels) {
      if (r.length != length) continue;
      std::map<std::size_t, Rational> acc;
      for (const auto& t : r.relation.terms) acc[d.column.at(t.arrows)] += t.coeff;
      d.ideal.insert(to_columns(std::move(acc)));
    }

    d.basis_of_column.assign(paths.size(), static_cast<std::size_t>(-1));
    std::size_t standard = 0;
    for (std::size_t c = 0; c < paths.size(); ++c) {
      if (d.ideal.is_pivot(c)) continue;
      d.basis_of_column[c] = alg.basis_.size();
      alg.basis_.push_back({d.column_source[c], targets[c], length, paths[c]});
      alg.labels_.push_back(word_label(quiver, paths[c]));
      ++standard;
    }
    if (standard == 0) {
      vanished = true;
    } else {
      alg.degrees_.push_back(std::move(d));
      prev_words = std::move(paths);
      prev_targets = std::move(targets);
    }
  }
  if (!vanished)
    throw NotFiniteDimensional("no vanishing graded component up to path length " + std::to_string(max_length));

  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const DegreeData& d1 = alg.degrees_.at(1);
    alg.arrow_elements_.push_back(d1.basis_of_column[d1.column.at({a})]);
  }

  const std::size_t n = alg.basis_.size();
  alg.products_.assign(n * n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const BasisElement& bx = alg.basis_[x];
      const BasisElement& by = alg.basis_[y];
      if (by.target != bx.source) continue;
      if (by.degree == 0) {
        alg.products_[x * n + y] = {{x, Rational(1)}};
      } else if (bx.degree == 0) {
        alg.products_[x * n + y] = {{y, Rational(1)}};
      } else {
        std::vector<std::size_t> w = by.word;
        w.insert(w.end(), bx.word.begin(), bx.word.end());
        alg.products_[x * n + y] = alg.normal_form(by.source, w);
      }
    }
  return alg;
}

// ---------------------------------------------------------------------------
// Serre quotients and tensor products

SerreQuotient serre_quotient(const FDAlgebra& algebra, const std::vector<std::size_t>& kill) {
  std::vector<bool> killed(algebra.vertex_count(), false);
  for (auto v : kill) {
    if (v >= algebra.vertex_count()) throw InputError("kill set names an unknown vertex");
    killed[v] = true;
  }
  SerreQuotient q;
  std::vector<std::size_t> new_vertex(algebra.vertex_count(), static_cast<std::size_t>(-1));
  std::vector<std::string> names;
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v)
    if (!killed[v]) {
      new_vertex[v] = q.retained.size();
      q.retained.push_back(v);
      names.push_back(algebra.vertices()[v]);
    }

  std::vector<std::size_t> new_index(algebra.dim(), static_cast<std::size_t>(-1));
  std::vector<BasisElement> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    const auto& b = algebra.element(i);
    if (killed[b.source] || killed[b.target]) continue;
    new_index[i] = q.basis_in_parent.size();
    q.basis_in_parent.push_back(i);
    basis.push_back({new_vertex[b.source], new_vertex[b.target], b.degree, b.word});
    labels.push_back(algebra.label(i));
  }

  const std::size_t n = basis.size();
  std::vector<SparseVector> products(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [k, c] : algebra.product(q.basis_in_parent[x], q.basis_in_parent[y]))
        products[x * n + y].emplace_back(new_index[k], c);
  q.algebra = FDAlgebra(std::move(names), std::move(basis), std::move(labels), std::move(products));
  return q;
}

FDAlgebra tensor_algebra(const FDAlgebra& a, const FDAlgebra& b) {
  const std::size_t va = a.vertex_count(), vb = b.vertex_count();
  std::vector<std::string> names;
  for (std::size_t u = 0; u < va; ++u)
    for (std::size_t v = 0; v < vb; ++v) names.push_back(a.vertices()[u] + "|" + b.vertices()[v]);

  const std::size_t da = a.dim(), db = b.dim(), n = da * db;
  std::vector<BasisElement> basis;
  std::vector<std::string> labels;
  basis.reserve(n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      const auto& x = a.element(i);
      const auto& y = b.element(j);
      basis.push_back({x.source * vb + y.source, x.target * vb + y.target, x.degree + y.degree, {}});
      labels.push_back(a.label(i) + "(x)" + b.label(j));
    }

  std::vector<SparseVector> products(n * n);
  for (std::size_t x1 = 0; x1 < da; ++x1)
    for (std::size_t y1 = 0; y1 < da; ++y1) {
      const auto& p1 = a.product(x1, y1);
      if (p1.empty()) continue;
      for (std::size_t x2 = 0; x2 < db; ++x2)
        for (std::size_t y2 = 0; y2 < db; ++y2) {
          const auto& p2 = b.product(x2, y2);
          if (p2.empty()) continue;
          SparseVector& out = products[(x1 * db + x2) * n + (y1 * db + y2)];
          for (const auto& [k1, c1] : p1)
            for (const auto& [k2, c2] : p2) out.emplace_back(k1 * db + k2, c1 * c2);
        }
    }
  return FDAlgebra(std::move(names), std::move(basis), std::move(labels), std::move(products));
}

std::pair<Quiver, std::vector<Relation>> tensor_presentation(const FDAlgebra& a, const FDAlgebra& b) {
  if (!a.quiver() || !b.quiver()) throw DomainError("tensor_presentation needs quiver-presented factors");
  const Quiver& qa = *a.quiver();
  const Quiver& qb = *b.quiver();
  const std::size_t vb = qb.vertex_count();

  std::vector<std::string> vertices;
  for (const auto& u : qa.vertices())
    for (const auto& v : qb.vertices()) vertices.push_back(u + "|" + v);

  std::vector<Arrow> arrows;
  // left_arrow[a][v], right_arrow[u][b]
  std::vector<std::vector<std::size_t>> left(qa.arrow_count()), right(qa.vertex_count());
  for (std::size_t x = 0; x < qa.arrow_count(); ++x)
    for (std::size_t v = 0; v < vb; ++v) {
      left[x].push_back(arrows.size());
      const auto& ar = qa.arrow(x);
      arrows.push_back({ar.name + "|" + qb.vertices()[v], ar.source * vb + v, ar.target * vb + v});
    }
  for (std::size_t u = 0; u < qa.vertex_count(); ++u)
    for (std::size_t y = 0; y < qb.arrow_count(); ++y) {
      right[u].push_back(arrows.size());
      const auto& ar = qb.arrow(y);
      arrows.push_back({qa.vertices()[u] + "|" + ar.name, u * vb + ar.source, u * vb + ar.target});
    }

  std::vector<Relation> relations;
  for (const auto& r : a.relations())
    for (std::size_t v = 0; v < vb; ++v) {
      Relation t;
      for (const auto& term : r.terms) {
        PathTerm p{term.coeff, {}};
        for (auto x : term.arrows) p.arrows.push_back(left[x][v]);
        t.terms.push_back(std::move(p));
      }
      relations.push_back(std::move(t));
    }
  for (const auto& r : b.relations())
    for (std::size_t u = 0; u < qa.vertex_count(); ++u) {
      Relation t;
      for (const auto& term : r.terms) {
        PathTerm p{term.coeff, {}};
        for (auto y : term.arrows) p.arrows.push_back(right[u][y]);
        t.terms.push_back(std::move(p));
      }
      relations.push_back(std::move(t));
    }
  for (std::size_t x = 0; x < qa.arrow_count(); ++x)
    for (std::size_t y = 0; y < qb.arrow_count(); ++y) {
      const auto& ax = qa.arrow(x);
      const auto& by = qb.arrow(y);
      Relation comm;
      comm.terms.push_back({Rational(1), {left[x][by.source], right[ax.target][y]}});
      comm.terms.push_back({Rational(-1), {right[ax.source][y], left[x][by.target]}});
      relations.push_back(std::move(comm));
    }
  return {Quiver(std::move(vertices), std::move(arrows)), std::move(relations)};
}

// ---------------------------------------------------------------------------
// Re-presentation of a graded algebra

QuiverPresentation present_as_quiver(const FDAlgebra& algebra) {
  QuiverPresentation out;
  std::size_t lazy = 0;
  for (const auto& b : algebra.basis())
    if (b.degree == 0) {
      if (b.source != b.target) {
        out.failure = "degree-zero part is not spanned by vertex idempotents";
        return out;
      }
      ++lazy;
    }
  if (lazy != algebra.vertex_count()) {
    out.failure = "degree-zero part is not spanned by vertex idempotents";
    return out;
  }

  // rad^2 inside the positive-degree ideal, then greedy arrow choice modulo rad^2.
  SparseEchelon span;
  for (std::size_t x = 0; x < algebra.dim(); ++x)
    for (std::size_t y = 0; y < algebra.dim(); ++y)
      if (algebra.element(x).degree > 0 && algebra.element(y).degree > 0) span.insert(algebra.product(x, y));

  std::vector<Arrow> arrows;
  std::set<std::string> used(algebra.vertices().begin(), algebra.vertices().end());
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    const auto& b = algebra.element(i);
    if (b.degree == 0) continue;
    if (!span.insert({{i, Rational(1)}})) continue;
    std::string name = algebra.label(i);
    if (name.find_first_of(".()") != std::string::npos) name = "[" + name + "]";
    while (!used.insert(name).second) name += "'";
    arrows.push_back({name, b.source, b.target});
    out.arrow_elements.push_back(i);
  }
  out.quiver = Quiver(algebra.vertices(), arrows);
  const Quiver& q = out.quiver;

  // Relations degree by degree in the new path length.
  std::vector<std::vector<std::size_t>> words;
  std::vector<SparseVector> values;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    words.push_back({a});
    values.push_back({{out.arrow_elements[a], Rational(1)}});
  }
  SparseEchelon ideal;  // degree-(L-1) ideal over the columns of `words`
  for (std::size_t length = 2; !words.empty(); ++length) {
    if (length > algebra.dim() + 2) {
      out.failure = "radical is not nilpotent in the expected range";
      return out;
    }
    std::vector<std::vector<std::size_t>> next_words;
    std::vector<SparseVector> next_values;
    std::map<std::vector<std::size_t>, std::size_t> column;
    for (std::size_t p = 0; p < words.size(); ++p)
      for (std::size_t a = 0; a < arrows.size(); ++a)
        if (q.arrow(a).source == q.arrow(words[p].back()).target) {
          auto w = words[p];
          w.push_back(a);
          next_values.push_back(algebra.multiply({{out.arrow_elements[a], Rational(1)}}, values[p]));
          next_words.push_back(std::move(w));
        }
    if (next_words.size() > kPathBudget) {
      out.failure = "path enumeration budget exceeded";
      return out;
    }
    for (std::size_t c = 0; c < next_words.size(); ++c) column.emplace(next_words[c], c);

    SparseEchelon next_ideal;
    for (const auto& [pivot, row] : ideal.rows()) {
      const auto& first = words[row.front().first];
      const std::size_t src = q.arrow(first.front()).source, tgt = q.arrow(first.back()).target;
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (q.arrow(a).source == tgt) {
          std::map<std::size_t, Rational> acc;
          for (const auto& [col, c] : row) {
            auto w = words[col];
            w.push_back(a);
            acc[column.at(w)] += c;
          }
          next_ideal.insert(to_sparse(acc));
        }
        if (q.arrow(a).target == src) {
          std::map<std::size_t, Rational> acc;
          for (const auto& [col, c] : row) {
            std::vector<std::size_t> w{a};
            w.insert(w.end(), words[col].begin(), words[col].end());
            acc[column.at(w)] += c;
          }
          next_ideal.insert(to_sparse(acc));
        }
      }
    }

    // Kernel of evaluation: columns are the values of the paths.
    Matrix eval(algebra.dim(), next_words.size());
    bool all_zero = true;
    for (std::size_t c = 0; c < next_values.size(); ++c)
      for (const auto& [k, v] : next_values[c]) {
        eval(k, c) = v;
        all_zero = false;
      }
    const Matrix kernel = eval.nullspace();
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      SparseVector kv;
      for (std::size_t i = 0; i < kernel.rows(); ++i)
        if (sgn(kernel(i, j)) != 0) kv.emplace_back(i, kernel(i, j));
      if (next_ideal.insert(kv)) {
        Relation r;
        for (const auto& [col, c] : kv) r.terms.push_back({c, next_words[col]});
        out.relations.push_back(std::move(r));
      }
    }
    if (all_zero) break;
    words = std::move(next_words);
    values = std::move(next_values);
    ideal = std::move(next_ideal);
  }

  try {
    const FDAlgebra rebuilt = build_algebra(q, out.relations);
    if (rebuilt.dim() != algebra.dim()) {
      out.failure = "length-homogeneous relations in the new arrows give dimension " + std::to_string(rebuilt.dim()) +
                    " instead of " + std::to_string(algebra.dim());
      return out;
    }
  } catch (const std::exception& e) {
    out.failure = e.what();
    return out;
  }
  out.ok = true;
  return out;
}

bool structure_constants_agree(const FDAlgebra& a, const FDAlgebra& b, std::span<const std::size_t> basis_map) {
  if (a.dim() != b.dim() || basis_map.size() != a.dim()) return false;
  std::vector<bool> hit(b.dim(), false);
  for (auto i : basis_map) {
    if (i >= b.dim() || hit[i]) return false;
    hit[i] = true;
  }
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      std::map<std::size_t, Rational> moved;
      for (const auto& [k, c] : a.product(x, y)) moved[basis_map[k]] = c;
      if (to_sparse(moved) != b.product(basis_map[x], basis_map[y])) return false;
    }
  return true;
}

}  // namespace hcb
