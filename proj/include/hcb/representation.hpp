#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hcb/matrix.hpp"
#include "hcb/quiver_algebra.hpp"

namespace hcb {

/// A representation of a quiver with relations: one vector space per vertex
/// (given by its dimension) and one matrix per arrow, of shape
/// dims[target] x dims[source].
struct QuiverRep {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  std::size_t total_dim() const;
  bool operator==(const QuiverRep&) const = default;
};

/// A morphism of representations, one matrix per vertex.
struct Morphism {
  std::vector<Matrix> components;
};

/// A subrepresentation together with its embedding (basis columns per vertex).
struct Subrep {
  QuiverRep rep;
  std::vector<Matrix> embedding;
};

const Quiver& require_quiver(const FDAlgebra& algebra);

QuiverRep zero_rep(const Quiver& quiver, std::vector<std::size_t> dims);

/// Matrix of a path (arrows in traversal order, starting at `source`) acting on M.
Matrix path_matrix(const Quiver& quiver, const QuiverRep& m, std::size_t source, std::span<const std::size_t> word);
/// Action of basis element b of a quiver-presented algebra.
Matrix element_matrix(const FDAlgebra& algebra, const QuiverRep& m, std::size_t b);

/// Shapes match the quiver and every relation evaluates to zero.
bool satisfies_relations(const FDAlgebra& algebra, const QuiverRep& m);
/// Throws InputError when satisfies_relations fails or shapes are wrong.
void validate_rep(const FDAlgebra& algebra, const QuiverRep& m);

QuiverRep simple_rep(const FDAlgebra& algebra, std::size_t vertex);
/// A e_i: basis the path classes starting at i, graded by their target.
QuiverRep projective_rep(const FDAlgebra& algebra, std::size_t vertex);
/// Dual of the right projective e_i A.
QuiverRep injective_rep(const FDAlgebra& algebra, std::size_t vertex);

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

/// M (x) N as a representation of the quiver produced by tensor_presentation(A, B).
QuiverRep tensor_rep(const Quiver& qa, const Quiver& qb, const QuiverRep& m, const QuiverRep& n);

std::vector<Morphism> hom_basis(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n);
std::size_t hom_dim(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n);
bool is_morphism(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n, const Morphism& f);

/// Subrepresentation on the given (invariant) subspaces; throws InputError if not invariant.
Subrep subrep(const FDAlgebra& algebra, const QuiverRep& m, const std::vector<Matrix>& spaces);
/// M / U for invariant subspaces U.
QuiverRep quotient_rep(const FDAlgebra& algebra, const QuiverRep& m, const std::vector<Matrix>& spaces);
Subrep kernel(const FDAlgebra& algebra, const QuiverRep& m, const Morphism& f);

/// Sum of the images of all arrows (the arrow ideal acting on M).
std::vector<Matrix> radical_spaces(const FDAlgebra& algebra, const QuiverRep& m);
/// Vectors killed by every arrow.
std::vector<Matrix> socle_spaces(const FDAlgebra& algebra, const QuiverRep& m);
QuiverRep radical(const FDAlgebra& algebra, const QuiverRep& m);
QuiverRep socle(const FDAlgebra& algebra, const QuiverRep& m);
/// Dimension vector of M / rad M.
std::vector<std::size_t> head_dims(const FDAlgebra& algebra, const QuiverRep& m);
std::vector<std::size_t> socle_dims(const FDAlgebra& algebra, const QuiverRep& m);

/// Dimension vectors of rad^j M / rad^{j+1} M, from the head down.
std::vector<std::vector<std::size_t>> radical_layers(const FDAlgebra& algebra, const QuiverRep& m);
/// Composition factors (vertex labels) from head to socle, refined by the
/// radical filtration; ties inside a layer follow vertex order.
std::vector<std::size_t> composition_series(const FDAlgebra& algebra, const QuiverRep& m);
bool is_uniserial(const FDAlgebra& algebra, const QuiverRep& m);

struct ProjectiveCover {
  QuiverRep cover;
  Morphism projection;
  std::vector<std::size_t> summands;  // vertex of each indecomposable projective summand
};
/// Minimal projective cover, built from a lift of the head; lifts are chosen
/// among unit vectors in vertex order.
ProjectiveCover projective_cover(const FDAlgebra& algebra, const QuiverRep& m);

/// dim Ext^1(M, N) from a projective presentation 0 -> K -> P0 -> M -> 0:
/// Ext^1 = coker(Hom(P0, N) -> Hom(K, N)).
std::size_t ext1(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n);
/// The matrix dim Ext^1(S_i, S_j).
std::vector<std::vector<std::size_t>> ext1_simples_matrix(const FDAlgebra& algebra);

/// Isomorphism test. A random combination of a Hom basis is tried for
/// invertibility with a fixed seed, so "true" is always certified; "false" is
/// certified when dimensions or Hom dimensions differ, otherwise it holds with
/// overwhelming probability.
bool is_isomorphic(const FDAlgebra& algebra, const QuiverRep& m, const QuiverRep& n);

/// Absolutely indecomposable: End(M) modulo its radical is one-dimensional.
/// The radical is the kernel of the trace form (x, y) -> tr(xy) on M.
bool is_indecomposable(const FDAlgebra& algebra, const QuiverRep& m);

/// Vertex spaces dualized and arrow maps transposed along an arrow involution
/// that reverses every arrow (swap[a] runs target(a) -> source(a)).
QuiverRep transpose_dual(const Quiver& quiver, const QuiverRep& m, std::span<const std::size_t> swap);

/// A module over a (possibly quiver-less) FDAlgebra: one matrix per basis element.
struct AlgebraModule {
  std::vector<std::size_t> dims;
  std::vector<Matrix> action;
};

/// e M for the quotient eAe: the retained vertex spaces with the surviving path classes acting.
AlgebraModule quotient_functor(const FDAlgebra& parent, const SerreQuotient& quotient, const QuiverRep& m);

/// The action respects the structure constants and idempotents act as identities.
bool is_module(const FDAlgebra& algebra, const AlgebraModule& m);

struct StringModules {
  std::vector<QuiverRep> modules;
  std::vector<std::string> strings;
  /// Strings of the maximal length exist, so the list may be incomplete.
  bool truncated = false;
};

/// String modules of a monomial special biserial algebra, one per string up to
/// inversion, for strings of at most `max_length` letters. Throws DomainError
/// if some relation is not a single path.
StringModules string_modules(const FDAlgebra& algebra, std::size_t max_length);

}  // namespace hcb
