#include "hcb/representation.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "hcb/errors.hpp"

namespace hcb {

std::size_t QuiverRep::total_dim() const {
  std::size_t total = 0;
  for (auto d : dims) total += d;
  return total;
}

const Quiver& require_quiver(const FDAlgebra& algebra) {
  if (!algebra.quiver()) throw DomainError("operation needs a quiver-presented algebra");
  return *algebra.quiver();
}

QuiverRep zero_rep(const Quiver& quiver, std::vector<std::size_t> dims) {
  if (dims.size() != quiver.vertex_count()) throw ShapeMismatch("one dimension per vertex required");
  QuiverRep m{std::move(dims), {}};
  for (const auto& a : quiver.arrows()) m.maps.emplace_back(m.dims[a.target], m.dims[a.source]);
  return m;
}

Matrix path_matrix(const Quiver& quiver, const QuiverRep& m, std::size_t source, std::span<const std::size_t> word) {
  Matrix acc = Matrix::identity(m.dims.at(source));
  std::size_t at = source;
  for (auto a : word) {
    if (quiver.arrow(a).source != at) throw InputError("path is not composable");
    acc = m.maps.at(a) * acc;
    at = quiver.arrow(a).target;
  }
  return acc;
}

Matrix element_matrix(const FDAlgebra& algebra, const QuiverRep& m, std::size_t b) {
  const auto& e = algebra.element(b);
  return path_matrix(require_quiver(algebra), m, e.source, e.word);
}

namespace {

bool shapes_ok(const Quiver& q, const QuiverRep& m) {
  if (m.dims.size() != q.vertex_count() || m.maps.size() != q.arrow_count()) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (m.maps[a].rows() != m.dims[q.arrow(a).target] || m.maps[a].cols() != m.dims[q.arrow(a).source]) return false;
  return true;
}

}  // namespace

bool satisfies_relations(const FDAlgebra& algebra, const QuiverRep& m) {
  const Quiver& q = require_quiver(algebra);
  if (!shapes_ok(q, m)) return false;
  for (const auto& r : algebra.relations()) {
    if (r.terms.empty()) continue;
    const auto& first = r.terms.front().arrows;
    const std::size_t s = q.arrow(first.front()).source, t = q.arrow(first.back()).target;
    Matrix sum(m.dims[t], m.dims[s]);
    for (const auto& term : r.terms) sum = sum + path_matrix(q, m, s, term.arrows).scaled(term.coeff);
    if (!sum.is_zero()) return false;
  }
  return true;
}

void validate_rep(const FDAlgebra& algebra, const QuiverRep& m) {
  if (!shapes_ok(require_quiver(algebra), m)) throw ShapeMismatch("representation shapes do not match the quiver");
  if (!satisfies_relations(algebra, m)) throw InputError("representation violates a relation");
}

QuiverRep simple_rep(const FDAlgebra& algebra, std::size_t vertex) {
  const Quiver& q = require_quiver(algebra);
  if (vertex >= q.vertex_count()) throw InputError("unknown vertex");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[vertex] = 1;
  return zero_rep(q, std::move(dims));
}

namespace {

// Basis indices e_t A e_v grouped by t, in basis order.
std::vector<std::vector<std::size_t>> paths_from(const FDAlgebra& algebra, std::size_t v) {
  std::vector<std::vector<std::size_t>> out(algebra.vertex_count());
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (algebra.element(i).source == v) out[algebra.element(i).target].push_back(i);
  return out;
}

// Basis indices e_v A e_s grouped by s.
std::vector<std::vector<std::size_t>> paths_to(const FDAlgebra& algebra, std::size_t v) {
  std::vector<std::vector<std::size_t>> out(algebra.vertex_count());
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (algebra.element(i).target == v) out[algebra.element(i).source].push_back(i);
  return out;
}

std::size_t position(const std::vector<std::size_t>& list, std::size_t value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) throw DomainError("structure constants leave the expected vertex component");
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

QuiverRep projective_rep(const FDAlgebra& algebra, std::size_t vertex) {
  const Quiver& q = require_quiver(algebra);
  if (vertex >= q.vertex_count()) throw InputError("unknown vertex");
  const auto by_target = paths_from(algebra, vertex);
  std::vector<std::size_t> dims;
  for (const auto& l : by_target) dims.push_back(l.size());
  QuiverRep p = zero_rep(q, dims);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    const std::size_t elem = algebra.arrow_element(a);
    for (std::size_t j = 0; j < by_target[ar.source].size(); ++j)
      for (const auto& [k, c] : algebra.product(elem, by_target[ar.source][j]))
        p.maps[a](position(by_target[ar.target], k), j) = c;
  }
  return p;
}

QuiverRep injective_rep(const FDAlgebra& algebra, std::size_t vertex) {
  const Quiver& q = require_quiver(algebra);
  if (vertex >= q.vertex_count()) throw InputError("unknown vertex");
  const auto by_source = paths_to(algebra, vertex);
  std::vector<std::size_t> dims;
  for (const auto& l : by_source) dims.push_back(l.size());
  QuiverRep inj = zero_rep(q, dims);
  // (a f)(b) = f(b a): entry (b, b') is the coefficient of b' in b * a.
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    const std::size_t elem = algebra.arrow_element(a);
    for (std::size_t i = 0; i < by_source[ar.target].size(); ++i)
      for (const auto& [k, c] : algebra.product(by_source[ar.target][i], elem))
        inj.maps[a](i, position(by_source[ar.source], k)) = c;
  }
  return inj;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (a.dims.size() != b.dims.size() || a.maps.size() != b.maps.size())
    throw ShapeMismatch("direct sum of representations of different quivers");
  QuiverRep out;
  for (std::size_t v = 0; v < a.dims.size(); ++v) out.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) out.maps.push_back(hcb::direct_sum(a.maps[k], b.maps[k]));
  return out;
}

QuiverRep tensor_rep(const Quiver& qa, const Quiver& qb, const QuiverRep& m, const QuiverRep& n) {
  if (m.dims.size() != qa.vertex_count() || n.dims.size() != qb.vertex_count())
    throw ShapeMismatch("tensor_rep: representations do not match the factor quivers");
  QuiverRep out;
  for (std::size_t u = 0; u < qa.vertex_count(); ++u)
    for (std::size_t v = 0; v < qb.vertex_count(); ++v) out.dims.push_back(m.dims[u] * n.dims[v]);
  // Arrow order matches tensor_presentation: all (a|v), then all (u|b).
  for (std::size_t x = 0; x < qa.arrow_count(); ++x)
    for (std::size_t v = 0; v < qb.vertex_count(); ++v) out.maps.push_back(kron(m.maps[x], Matrix::identity(n.dims[v])));
  for (std::size_t u = 0; u < qa.vertex_count(); ++u)
    for (std::size_t y = 0; y < qb.arrow_count(); ++y) out.maps.push_back(kron(Matrix::identity(m.dims[u]), n.maps[y]));
  return out;
}

std::vector<Morphism> hom_basis(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n) {
  const Quiver& q = require_quiver(algebra);
  if (!shapes_ok(q, m) || !shapes_ok(q, n)) throw ShapeMismatch("representation shapes do not match the quiver");
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const std::size_t vars = offset.back();

  std::size_t eqs = 0;
  for (const auto& ar : q.arrows()) eqs += n.dims[ar.target] * m.dims[ar.source];
  Matrix system(eqs, vars);
  std::size_t row = 0;
  // phi_t M(a) - N(a) phi_s = 0
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    const std::size_t s = ar.source, t = ar.target;
    const Matrix& ma = m.maps[a];
    const Matrix& na = n.maps[a];
    for (std::size_t i = 0; i < n.dims[t]; ++i)
      for (std::size_t j = 0; j < m.dims[s]; ++j, ++row) {
        for (std::size_t k = 0; k < m.dims[t]; ++k)
          if (sgn(ma(k, j)) != 0) system(row, offset[t] + i * m.dims[t] + k) += ma(k, j);
        for (std::size_t k = 0; k < n.dims[s]; ++k)
          if (sgn(na(i, k)) != 0) system(row, offset[s] + k * m.dims[s] + j) -= na(i, k);
      }
  }
  const Matrix null = system.nullspace();
  std::vector<Morphism> out;
  for (std::size_t c = 0; c < null.cols(); ++c) {
    Morphism f;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      Matrix comp(n.dims[v], m.dims[v]);
      for (std::size_t i = 0; i < n.dims[v]; ++i)
        for (std::size_t j = 0; j < m.dims[v]; ++j) comp(i, j) = null(offset[v] + i * m.dims[v] + j, c);
      f.components.push_back(std::move(comp));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n) {
  return hom_basis(algebra, m, n).size();
}

bool is_morphism(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n, const Morphism& f) {
  const Quiver& q = require_quiver(algebra);
  if (f.components.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (f.components[v].rows() != n.dims[v] || f.components[v].cols() != m.dims[v]) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (!(f.components[ar.target] * m.maps[a] == n.maps[a] * f.components[ar.source])) return false;
  }
  return true;
}

Subrep subrep(const FDAlgebra& algebra, const QuiverRep& m, const std::vector<Matrix>& spaces) {
  const Quiver& q = require_quiver(algebra);
  Subrep out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out.embedding.push_back(spaces.at(v).cols() == 0 ? Matrix(m.dims[v], 0) : spaces[v]);
    out.rep.dims.push_back(out.embedding.back().cols());
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    auto x = solve(out.embedding[ar.target], m.maps[a] * out.embedding[ar.source]);
    if (!x) throw InputError("subspaces are not invariant under arrow '" + ar.name + "'");
    out.rep.maps.push_back(std::move(*x));
  }
  return out;
}

QuiverRep quotient_rep(const FDAlgebra& algebra, const QuiverRep& m, const std::vector<Matrix>& spaces) {
  const Quiver& q = require_quiver(algebra);
  std::vector<Matrix> sub, comp;
  QuiverRep out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    sub.push_back(spaces.at(v).cols() == 0 ? Matrix(m.dims[v], 0) : spaces[v]);
    comp.push_back(complement_basis(sub.back(), m.dims[v]));
    out.dims.push_back(comp.back().cols());
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    const Matrix full = hstack(sub[ar.target], comp[ar.target]);
    auto x = solve(full, m.maps[a] * comp[ar.source]);
    if (!x) throw DomainError("quotient: change of basis failed");
    out.maps.push_back(x->rows_range(sub[ar.target].cols(), comp[ar.target].cols()));
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    // invariance check: M(a) U_s stays inside U_t
    if (sub[ar.source].cols() && !solve(sub[ar.target], m.maps[a] * sub[ar.source]))
      throw InputError("subspaces are not invariant under arrow '" + ar.name + "'");
  }
  return out;
}

Subrep kernel(const FDAlgebra& algebra, const QuiverRep& m, const Morphism& f) {
  std::vector<Matrix> spaces;
  for (std::size_t v = 0; v < m.dims.size(); ++v) spaces.push_back(f.components.at(v).nullspace());
  return subrep(algebra, m, spaces);
}

std::vector<Matrix> radical_spaces(const FDAlgebra& algebra, const QuiverRep& m) {
  const Quiver& q = require_quiver(algebra);
  std::vector<Matrix> gens(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) gens[v] = Matrix(m.dims[v], 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    gens[q.arrow(a).target] = hstack(gens[q.arrow(a).target], m.maps[a]);
  for (auto& g : gens) g = g.column_basis();
  return gens;
}

std::vector<Matrix> socle_spaces(const FDAlgebra& algebra, const QuiverRep& m) {
  const Quiver& q = require_quiver(algebra);
  std::vector<Matrix> out_maps(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out_maps[v] = Matrix(0, m.dims[v]);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    out_maps[q.arrow(a).source] = vstack(out_maps[q.arrow(a).source], m.maps[a]);
  std::vector<Matrix> out;
  for (auto& x : out_maps) out.push_back(x.nullspace());
  return out;
}

QuiverRep radical(const FDAlgebra& algebra, const QuiverRep& m) {
  return subrep(algebra, m, radical_spaces(algebra, m)).rep;
}

QuiverRep socle(const FDAlgebra& algebra, const QuiverRep& m) {
  return subrep(algebra, m, socle_spaces(algebra, m)).rep;
}

std::vector<std::size_t> head_dims(const FDAlgebra& algebra, const QuiverRep& m) {
  const auto rad = radical_spaces(algebra, m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.dims.size(); ++v) out.push_back(m.dims[v] - rad[v].cols());
  return out;
}

std::vector<std::size_t> socle_dims(const FDAlgebra& algebra, const QuiverRep& m) {
  std::vector<std::size_t> out;
  for (const auto& s : socle_spaces(algebra, m)) out.push_back(s.cols());
  return out;
}

std::vector<std::vector<std::size_t>> radical_layers(const FDAlgebra& algebra, const QuiverRep& m) {
  const Quiver& q = require_quiver(algebra);
  std::vector<Matrix> current;
  for (auto d : m.dims) current.push_back(Matrix::identity(d));
  std::vector<std::vector<std::size_t>> layers;
  for (std::size_t step = 0;; ++step) {
    std::size_t remaining = 0;
    for (const auto& c : current) remaining += c.cols();
    if (remaining == 0) break;
    if (step > m.total_dim()) throw DomainError("radical filtration does not terminate; arrows are not nilpotent");
    std::vector<Matrix> next(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) next[v] = Matrix(m.dims[v], 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& ar = q.arrow(a);
      next[ar.target] = hstack(next[ar.target], m.maps[a] * current[ar.source]);
    }
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      next[v] = next[v].column_basis();
      layer.push_back(current[v].cols() - next[v].cols());
    }
    layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return layers;
}

std::vector<std::size_t> composition_series(const FDAlgebra& algebra, const QuiverRep& m) {
  std::vector<std::size_t> out;
  for (const auto& layer : radical_layers(algebra, m))
    for (std::size_t v = 0; v < layer.size(); ++v) out.insert(out.end(), layer[v], v);
  return out;
}

bool is_uniserial(const FDAlgebra& algebra, const QuiverRep& m) {
  if (m.total_dim() == 0) return false;
  for (const auto& layer : radical_layers(algebra, m)) {
    std::size_t s = 0;
    for (auto d : layer) s += d;
    if (s != 1) return false;
  }
  return true;
}

ProjectiveCover projective_cover(const FDAlgebra& algebra, const QuiverRep& m) {
  const Quiver& q = require_quiver(algebra);
  const auto rad = radical_spaces(algebra, m);
  ProjectiveCover out;
  out.cover = zero_rep(q, std::vector<std::size_t>(q.vertex_count(), 0));
  out.projection.components.resize(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.projection.components[v] = Matrix(m.dims[v], 0);

  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const Matrix lifts = complement_basis(rad[v], m.dims[v]);
    if (lifts.cols() == 0) continue;
    const QuiverRep p = projective_rep(algebra, v);
    const auto by_target = paths_from(algebra, v);
    for (std::size_t c = 0; c < lifts.cols(); ++c) {
      const Matrix x = lifts.column(c);
      out.cover = direct_sum(out.cover, p);
      out.summands.push_back(v);
      for (std::size_t t = 0; t < q.vertex_count(); ++t) {
        Matrix images(m.dims[t], by_target[t].size());
        for (std::size_t j = 0; j < by_target[t].size(); ++j) {
          const Matrix col = element_matrix(algebra, m, by_target[t][j]) * x;
          for (std::size_t i = 0; i < m.dims[t]; ++i) images(i, j) = col(i, 0);
        }
        out.projection.components[t] = hstack(out.projection.components[t], images);
      }
    }
  }
  return out;
}

std::size_t ext1(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n) {
  validate_rep(algebra, m);
  validate_rep(algebra, n);
  const ProjectiveCover pc = projective_cover(algebra, m);
  const Subrep k = kernel(algebra, pc.cover, pc.projection);
  // 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(K,N) -> Ext^1(M,N) -> 0, Hom(P(v), N) = N_v.
  std::size_t hom_p0 = 0;
  for (auto v : pc.summands) hom_p0 += n.dims[v];
  return hom_dim(algebra, k.rep, n) + hom_dim(algebra, m, n) - hom_p0;
}

std::vector<std::vector<std::size_t>> ext1_simples_matrix(const FDAlgebra& algebra) {
  const std::size_t nv = algebra.vertex_count();
  std::vector<QuiverRep> simples;
  for (std::size_t v = 0; v < nv; ++v) simples.push_back(simple_rep(algebra, v));
  std::vector<std::vector<std::size_t>> out(nv, std::vector<std::size_t>(nv, 0));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) out[i][j] = ext1(algebra, simples[i], simples[j]);
  return out;
}

bool is_isomorphic(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n) {
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const auto homs = hom_basis(algebra, m, n);
  if (homs.empty()) return false;
  if (hom_dim(algebra, n, m) != homs.size()) return false;

  auto invertible = [&](const Morphism& f) {
    for (std::size_t v = 0; v < f.components.size(); ++v)
      if (f.components[v].rank() != m.dims[v]) return false;
    return true;
  };
  std::mt19937 rng(0x5eedu);
  std::uniform_int_distribution<int> coeff(-64, 64);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Morphism f;
    for (std::size_t v = 0; v < m.dims.size(); ++v) f.components.emplace_back(m.dims[v], m.dims[v]);
    for (const auto& h : homs) {
      const Rational c = homs.size() == 1 ? Rational(1) : Rational(coeff(rng));
      for (std::size_t v = 0; v < m.dims.size(); ++v) f.components[v] = f.components[v] + h.components[v].scaled(c);
    }
    if (invertible(f)) return true;
    if (homs.size() == 1) return false;
  }
  return false;
}

bool is_indecomposable(const FDAlgebra& algebra, const QuiverRep& m) {
  if (m.total_dim() == 0) return false;
  const auto end = hom_basis(algebra, m, m);
  const std::size_t d = end.size();
  Matrix trace_form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational tr = 0;
      for (std::size_t v = 0; v < m.dims.size(); ++v) {
        const Matrix prod = end[i].components[v] * end[j].components[v];
        for (std::size_t k = 0; k < prod.rows(); ++k) tr += prod(k, k);
      }
      trace_form(i, j) = tr;
    }
  return trace_form.rank() == 1;
}

QuiverRep transpose_dual(const Quiver& quiver, const QuiverRep& m, std::span<const std::size_t> swap) {
  if (swap.size() != quiver.arrow_count()) throw ShapeMismatch("arrow involution has the wrong length");
  QuiverRep out{m.dims, {}};
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto& ar = quiver.arrow(a);
    if (swap[a] >= quiver.arrow_count()) throw InputError("arrow involution index out of range");
    const auto& partner = quiver.arrow(swap[a]);
    if (partner.source != ar.target || partner.target != ar.source)
      throw InputError("arrow involution must pair each arrow with a reversed one");
    out.maps.push_back(m.maps.at(swap[a]).transpose());
  }
  return out;
}

AlgebraModule quotient_functor(const FDAlgebra& parent, const SerreQuotient& quotient, const QuiverRep& m) {
  validate_rep(parent, m);
  AlgebraModule out;
  for (auto v : quotient.retained) out.dims.push_back(m.dims[v]);
  for (auto b : quotient.basis_in_parent) out.action.push_back(element_matrix(parent, m, b));
  return out;
}

bool is_module(const FDAlgebra& algebra, const AlgebraModule& m) {
  if (m.dims.size() != algebra.vertex_count() || m.action.size() != algebra.dim()) return false;
  for (std::size_t x = 0; x < algebra.dim(); ++x) {
    const auto& bx = algebra.element(x);
    if (m.action[x].rows() != m.dims[bx.target] || m.action[x].cols() != m.dims[bx.source]) return false;
  }
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v)
    if (!(m.action[algebra.idempotent(v)] == Matrix::identity(m.dims[v]))) return false;
  for (std::size_t x = 0; x < algebra.dim(); ++x)
    for (std::size_t y = 0; y < algebra.dim(); ++y) {
      if (algebra.element(y).target != algebra.element(x).source) continue;
      Matrix expected(m.dims[algebra.element(x).target], m.dims[algebra.element(y).source]);
      for (const auto& [k, c] : algebra.product(x, y)) expected = expected + m.action[k].scaled(c);
      if (!(m.action[x] * m.action[y] == expected)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// String modules

namespace {

struct Letter {
  std::size_t arrow;
  bool inverse;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

std::size_t letter_start(const Quiver& q, Letter l) { return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source; }
std::size_t letter_end(const Quiver& q, Letter l) { return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target; }

// A new last letter may not complete a zero relation inside the trailing run of
// same-direction letters.
bool avoids_relations(const std::vector<Letter>& s, const std::vector<std::vector<std::size_t>>& zero_paths) {
  const bool inverse = s.back().inverse;
  std::vector<std::size_t> run;  // traversal order path
  for (std::size_t i = s.size(); i-- > 0 && s[i].inverse == inverse;) run.push_back(s[i].arrow);
  if (!inverse) std::reverse(run.begin(), run.end());
  // Every suffix of the direct run (or prefix of the reversed inverse run) ending at the new letter.
  for (const auto& z : zero_paths) {
    if (z.size() > run.size()) continue;
    const bool hit = inverse ? std::equal(z.begin(), z.end(), run.begin())
                             : std::equal(z.begin(), z.end(), run.end() - static_cast<std::ptrdiff_t>(z.size()));
    if (hit) return false;
  }
  return true;
}

std::vector<Letter> inverted(const std::vector<Letter>& s) {
  std::vector<Letter> out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back({it->arrow, !it->inverse});
  return out;
}

QuiverRep string_rep(const Quiver& q, std::size_t start, const std::vector<Letter>& s) {
  std::vector<std::size_t> walk{start};
  for (auto l : s) walk.push_back(letter_end(q, l));
  std::vector<std::size_t> dims(q.vertex_count(), 0), index;
  for (auto v : walk) index.push_back(dims[v]++);
  QuiverRep m = zero_rep(q, dims);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].inverse)
      m.maps[s[i].arrow](index[i], index[i + 1]) = 1;
    else
      m.maps[s[i].arrow](index[i + 1], index[i]) = 1;
  }
  return m;
}

std::string string_name(const Quiver& q, const std::vector<Letter>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + q.arrow(s[i].arrow).name + (s[i].inverse ? "^-1" : "");
  return out;
}

}  // namespace

StringModules string_modules(const FDAlgebra& algebra, std::size_t max_length) {
  const Quiver& q = require_quiver(algebra);
  std::vector<std::vector<std::size_t>> zero_paths;
  for (const auto& r : algebra.relations()) {
    if (r.terms.size() != 1) throw DomainError("string modules need monomial relations");
    zero_paths.push_back(r.terms.front().arrows);
  }
  std::vector<std::size_t> in(q.vertex_count(), 0), out_deg(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) {
    ++out_deg[a.source];
    ++in[a.target];
  }
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (in[v] > 2 || out_deg[v] > 2) throw DomainError("string modules need a special biserial quiver");

  StringModules result;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    result.modules.push_back(simple_rep(algebra, v));
    result.strings.push_back("e_" + q.vertices()[v]);
  }

  std::vector<std::vector<Letter>> level;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    level.push_back({{a, false}});
    level.push_back({{a, true}});
  }
  for (std::size_t length = 1; !level.empty(); ++length) {
    if (length > max_length) {
      result.truncated = true;
      break;
    }
    for (const auto& s : level) {
      const auto inv = inverted(s);
      if (inv < s) continue;
      result.modules.push_back(string_rep(q, letter_start(q, s.front()), s));
      result.strings.push_back(string_name(q, s));
    }
    std::vector<std::vector<Letter>> next;
    for (const auto& s : level)
      for (std::size_t a = 0; a < q.arrow_count(); ++a)
        for (bool inverse : {false, true}) {
          const Letter l{a, inverse};
          if (letter_start(q, l) != letter_end(q, s.back())) continue;
          if (l.arrow == s.back().arrow && l.inverse != s.back().inverse) continue;
          auto t = s;
          t.push_back(l);
          if (avoids_relations(t, zero_paths)) next.push_back(std::move(t));
        }
    level = std::move(next);
  }
  return result;
}

}  // namespace hcb
