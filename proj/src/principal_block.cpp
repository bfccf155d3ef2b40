#include "hcb/principal_block.hpp"

#include "hcb/errors.hpp"

namespace hcb {

FDAlgebra block_algebra(int k) {
  if (k < 0) throw ParameterError("block needs k >= 0");
  std::vector<std::string> vertices;
  for (int i = 0; i <= k; ++i) vertices.push_back("S_" + std::to_string(i));
  std::vector<Arrow> arrows;
  for (int i = 1; i <= k; ++i) {
    const auto up = static_cast<std::size_t>(i), down = static_cast<std::size_t>(i - 1);
    arrows.push_back({"alpha_" + std::to_string(i), up, down});
    arrows.push_back({"beta_" + std::to_string(i), down, up});
  }
  std::vector<Relation> relations;
  for (int i = 1; i <= k; ++i) {
    const auto a = BlockModel::alpha(i), b = BlockModel::beta(i);
    relations.push_back({{{Rational(1), {b, a}}}});  // alpha_i beta_i
    relations.push_back({{{Rational(1), {a, b}}}});  // beta_i alpha_i
  }
  return build_algebra(Quiver(std::move(vertices), std::move(arrows)), relations);
}

BlockModel build_block(int n, int m) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (m < 2) throw ParameterError("the block needs m >= 2, got " + std::to_string(m));
  BlockModel block;
  block.n = n;
  block.m = m;
  block.k = n / m;
  block.algebra = block_algebra(block.k);
  const Quiver& q = *block.algebra.quiver();
  const std::vector<std::size_t> ones(q.vertex_count(), 1);
  block.regular = zero_rep(q, ones);
  block.wall_crossing = zero_rep(q, ones);
  for (int i = 1; i <= block.k; ++i) {
    block.regular.maps[BlockModel::alpha(i)](0, 0) = 1;
    block.wall_crossing.maps[BlockModel::beta(i)](0, 0) = 1;
    block.duality_swap.push_back(BlockModel::beta(i));
    block.duality_swap.push_back(BlockModel::alpha(i));
  }
  for (int i = 0; i <= block.k; ++i) block.leaf_map.push_back(leaf(n, m, i));
  return block;
}

QuiverRep duality(const BlockModel& block, const QuiverRep& m) {
  validate_rep(block.algebra, m);
  return transpose_dual(*block.algebra.quiver(), m, block.duality_swap);
}

SerreQuotient quotient_block(const BlockModel& block, const std::vector<std::size_t>& kill) {
  return serre_quotient(block.algebra, kill);
}

StringModules block_indecomposables(const BlockModel& block, std::size_t max_length) {
  return string_modules(block.algebra, max_length);
}

RestrictionData restrict_distinguished(int n, int m, int ell) {
  if (n < 1 || m < 2 || m > n) throw ParameterError("restriction needs 2 <= m <= n");
  const int k = n / m;
  if (ell < 0 || ell > k) throw ParameterError("ell must lie in [0, floor(n/m)]");

  RestrictionData out;
  out.ell = ell;
  for (int i = 0; i <= k; ++i) out.restricts_nonzero.push_back(i <= ell);

  if (ell == 0) {
    out.parabolic = build_algebra(Quiver({"pt"}, {}), {});
    out.regular_image = zero_rep(*out.parabolic.quiver(), {1});
    out.wall_crossing_image = out.regular_image;
    return out;
  }

  const BlockModel factor = build_block(m, m);
  out.parabolic = factor.algebra;
  out.regular_image = factor.regular;
  out.wall_crossing_image = factor.wall_crossing;
  for (int j = 1; j < ell; ++j) {
    const Quiver left = *out.parabolic.quiver();
    auto [q, rels] = tensor_presentation(out.parabolic, factor.algebra);
    out.parabolic = build_algebra(q, rels);
    out.regular_image = tensor_rep(left, *factor.algebra.quiver(), out.regular_image, factor.regular);
    out.wall_crossing_image = tensor_rep(left, *factor.algebra.quiver(), out.wall_crossing_image, factor.wall_crossing);
  }
  return out;
}

}  // namespace hcb
