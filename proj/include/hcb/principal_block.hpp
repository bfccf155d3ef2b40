#pragma once

#include <string>
#include <vector>

#include "hcb/hc_model.hpp"
#include "hcb/quiver_algebra.hpp"
#include "hcb/representation.hpp"

namespace hcb {

/// The principal block of HC(c, c) at c = r/m, k = floor(n/m): the double
/// linear quiver on S_0..S_k with alpha_i : S_i -> S_{i-1},
/// beta_i : S_{i-1} -> S_i and relations alpha_i beta_i = beta_i alpha_i = 0.
struct BlockModel {
  int n = 0;
  int m = 0;
  int k = 0;
  FDAlgebra algebra;
  QuiverRep regular;          // H: every alpha = 1, every beta = 0
  QuiverRep wall_crossing;    // D: every beta = 1, every alpha = 0
  std::vector<LeafDescriptor> leaf_map;  // vertex S_i -> leaf i
  std::vector<std::size_t> duality_swap;  // alpha_i <-> beta_i

  static std::size_t alpha(int i) { return static_cast<std::size_t>(2 * (i - 1)); }
  static std::size_t beta(int i) { return static_cast<std::size_t>(2 * (i - 1) + 1); }
};

/// The block algebra on k + 1 vertices; depends on k only.
FDAlgebra block_algebra(int k);

/// Throws ParameterError for n < 1 or m < 2. For m > n the block is the
/// one-vertex algebra (k = 0).
BlockModel build_block(int n, int m);

/// The duality on the block: dual spaces, transposed maps, alpha_i <-> beta_i.
/// It also moves the parameter c to -c + N; the target block has the same
/// presentation, so only the representation changes here.
QuiverRep duality(const BlockModel& block, const QuiverRep& m);

SerreQuotient quotient_block(const BlockModel& block, const std::vector<std::size_t>& kill);

/// Indecomposable representations of the block, as string modules.
StringModules block_indecomposables(const BlockModel& block, std::size_t max_length = 64);

/// Distinguished objects under restriction to the parabolic S_m^{x ell}.
struct RestrictionData {
  int ell = 0;
  FDAlgebra parabolic;              // ell-fold tensor power of the k = 1 block
  QuiverRep regular_image;          // H restricts to H^{(x) ell}
  QuiverRep wall_crossing_image;    // D restricts to D^{(x) ell}
  /// restricts_nonzero[i]: S_i survives restriction to leaf ell, i.e. i <= ell.
  std::vector<bool> restricts_nonzero;
  /// Coinduction of H^{(x) ell} is H, induction of D^{(x) ell} is D.
  std::string regular_coinduction = "H";
  std::string wall_crossing_induction = "D";
};

/// Throws ParameterError unless 2 <= m <= n and 0 <= ell <= floor(n/m).
RestrictionData restrict_distinguished(int n, int m, int ell);

}  // namespace hcb
