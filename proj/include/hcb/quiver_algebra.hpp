#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcb/rational.hpp"

namespace hcb {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws InputError on duplicate names or arrows with undeclared endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }

  /// Throws InputError for unknown names.
  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A linear combination of paths. Each path is a list of arrow indices in
/// traversal order: {a1, a2} means "a1 then a2", the product a2 * a1.
struct PathTerm {
  Rational coeff;
  std::vector<std::size_t> arrows;
};

struct Relation {
  std::vector<PathTerm> terms;
};

/// Builds a relation from arrow names (traversal order).
Relation make_relation(const Quiver& quiver, const std::vector<std::pair<Rational, std::vector<std::string>>>& terms);

/// Sparse vector as (index, coefficient) pairs, indices strictly increasing, no zero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t degree = 0;
  /// Representative path in traversal order; empty for idempotents and for
  /// algebras that were not built from a quiver.
  std::vector<std::size_t> word;
};

/// Incremental row echelon form over sparse rows. The pivot of a row is its
/// smallest column; reducing a vector clears every pivot column, which makes
/// the reduced vector a normal form modulo the span.
class SparseEchelon {
 public:
  /// Returns true if v was independent of the rows already present.
  bool insert(SparseVector v);
  SparseVector reduce(const SparseVector& v) const;
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

/// A finite-dimensional basic algebra with a basis of vertex-homogeneous elements
/// (each element lies in e_target A e_source) and an exact structure-constant table.
///
/// product(x, y) is x * y in functional order: y acts first, so it is nonzero
/// only when target(y) == source(x).
class FDAlgebra {
 public:
  FDAlgebra() = default;
  /// Direct construction from a multiplication table (dim * dim entries, row-major in (x, y)).
  FDAlgebra(std::vector<std::string> vertices, std::vector<BasisElement> basis, std::vector<std::string> labels,
            std::vector<SparseVector> products);

  std::size_t dim() const { return basis_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const BasisElement& element(std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  const SparseVector& product(std::size_t x, std::size_t y) const { return products_[x * dim() + y]; }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;

  /// Basis index of the idempotent at vertex v.
  std::size_t idempotent(std::size_t v) const;
  /// Dimensions of the graded pieces, by degree.
  std::vector<std::size_t> graded_dims() const;

  /// The presenting quiver, when the algebra came from build_algebra.
  const std::optional<Quiver>& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  /// Basis index of arrow a (requires a presentation).
  std::size_t arrow_element(std::size_t a) const;
  /// Class of the path (source vertex, arrows in traversal order) in the basis.
  /// Throws DomainError for algebras without a presentation.
  SparseVector normal_form(std::size_t source, std::span<const std::size_t> word) const;

  /// Every product of three basis elements associates.
  bool is_associative() const;

 private:
  friend FDAlgebra build_algebra(const Quiver&, const std::vector<Relation>&, std::size_t);

  struct DegreeData {
    std::map<std::vector<std::size_t>, std::size_t> column;  // free path word -> column
    std::vector<std::size_t> column_source;
    SparseEchelon ideal;
    std::vector<std::size_t> basis_of_column;  // basis index for standard columns
  };

  std::vector<std::string> vertices_;
  std::vector<BasisElement> basis_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;

  std::optional<Quiver> quiver_;
  std::vector<Relation> relations_;
  std::vector<DegreeData> degrees_;  // one entry per degree below the vanishing degree
  std::vector<std::size_t> arrow_elements_;
};

inline constexpr std::size_t kDefaultMaxLength = 64;

/// Path algebra modulo the ideal generated by length-homogeneous relations of
/// length >= 2, with a path basis found by degree-wise elimination.
/// Throws NonAdmissible for a relation term of length < 2, InputError for
/// malformed or non-homogeneous relations, and NotFiniteDimensional when no
/// degree up to max_length vanishes.
FDAlgebra build_algebra(const Quiver& quiver, const std::vector<Relation>& relations,
                        std::size_t max_length = kDefaultMaxLength);

struct SerreQuotient {
  FDAlgebra algebra;                         // eAe
  std::vector<std::size_t> retained;         // parent vertex of each quotient vertex
  std::vector<std::size_t> basis_in_parent;  // parent basis index of each eAe basis element
};

/// eAe for e the sum of the idempotents at the vertices not in `kill`.
SerreQuotient serre_quotient(const FDAlgebra& algebra, const std::vector<std::size_t>& kill);

/// Tensor product with Kronecker structure constants; vertex (u, v) has index
/// u * B.vertex_count() + v and basis element (i, j) has index i * B.dim() + j.
FDAlgebra tensor_algebra(const FDAlgebra& a, const FDAlgebra& b);

/// Quiver with relations presenting A (x) B: arrows "a@v" and "u@b" plus the
/// commutation relations between them. Both inputs need presentations.
std::pair<Quiver, std::vector<Relation>> tensor_presentation(const FDAlgebra& a, const FDAlgebra& b);

struct QuiverPresentation {
  bool ok = false;
  std::string failure;
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<std::size_t> arrow_elements;  // basis index of the algebra element behind each arrow
};

/// Tries to re-present a graded basic algebra (for example an eAe) as a quiver
/// with length-homogeneous relations. Reports failure instead of guessing when
/// the relations would need to mix lengths.
QuiverPresentation present_as_quiver(const FDAlgebra& algebra);

/// True if B's structure constants are A's transported along basis_map
/// (basis_map[i] = index in B of A's basis element i).
bool structure_constants_agree(const FDAlgebra& a, const FDAlgebra& b, std::span<const std::size_t> basis_map);

}  // namespace hcb
