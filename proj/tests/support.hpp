#pragma once

#include <random>
#include <string>

#include "hcb/principal_block.hpp"
#include "hcb/representation.hpp"
#include "oracles.hpp"

namespace support {

inline std::string data_path(const std::string& name) { return std::string(HCB_TEST_DATA_DIR) + "/" + name; }

inline std::vector<oracle::Edge> edges(const hcb::Quiver& q) {
  std::vector<oracle::Edge> out;
  for (const auto& a : q.arrows()) out.push_back({static_cast<int>(a.source), static_cast<int>(a.target)});
  return out;
}

inline std::vector<oracle::Rel> rels(const std::vector<hcb::Relation>& relations) {
  std::vector<oracle::Rel> out;
  for (const auto& r : relations) {
    oracle::Rel rel;
    for (const auto& t : r.terms) rel.push_back({t.coeff, std::vector<int>(t.arrows.begin(), t.arrows.end())});
    out.push_back(rel);
  }
  return out;
}

inline oracle::Rows rows(const hcb::Matrix& m) {
  oracle::Rows out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::Rep rep(const hcb::QuiverRep& m) {
  oracle::Rep out{m.dims, {}};
  for (const auto& x : m.maps) out.maps.push_back(rows(x));
  return out;
}

/// dim Ext^1 by the cocycle oracle.
inline std::size_t ext1_oracle(const hcb::FDAlgebra& alg, const hcb::QuiverRep& m, const hcb::QuiverRep& n) {
  const auto& q = *alg.quiver();
  return oracle::ext1_cocycles(edges(q), static_cast<int>(q.vertex_count()), rels(alg.relations()), rep(m), rep(n));
}

inline hcb::Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  hcb::Matrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = d(rng);
  return out;
}

/// A random representation of the k-block: alpha_i random (sometimes zero),
/// beta_i = K X C with K spanning ker alpha_i and C alpha_i = 0, so both
/// composites vanish.
inline hcb::QuiverRep random_block_rep(const hcb::BlockModel& block, std::size_t max_dim, std::mt19937& rng) {
  const auto& q = *block.algebra.quiver();
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  std::vector<std::size_t> dims(q.vertex_count());
  for (auto& d : dims) d = dim(rng);
  hcb::QuiverRep m = hcb::zero_rep(q, dims);
  std::bernoulli_distribution zero_alpha(0.25);
  for (int i = 1; i <= block.k; ++i) {
    const std::size_t up = dims[static_cast<std::size_t>(i)], down = dims[static_cast<std::size_t>(i - 1)];
    hcb::Matrix alpha = zero_alpha(rng) ? hcb::Matrix(down, up) : random_matrix(down, up, rng);
    const hcb::Matrix kernel = alpha.nullspace();                // up x r
    const hcb::Matrix cokernel = alpha.transpose().nullspace();  // down x s, columns c with c^T alpha = 0
    const hcb::Matrix x = random_matrix(kernel.cols(), cokernel.cols(), rng);
    m.maps[hcb::BlockModel::alpha(i)] = alpha;
    m.maps[hcb::BlockModel::beta(i)] = kernel * x * cokernel.transpose();
  }
  return m;
}

}  // namespace support
