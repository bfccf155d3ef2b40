#include <doctest.h>

#include <numeric>
#include <random>

#include "hcb/errors.hpp"
#include "hcb/principal_block.hpp"
#include "hcb/representation.hpp"
#include "hcb/serialization.hpp"
#include "support.hpp"

using namespace hcb;

namespace {

FDAlgebra example61() {
  const auto spec = parse_quiver_spec(read_json_file(support::data_path("example61.json")));
  return build_algebra(spec.quiver, spec.relations);
}

/// Simples, projectives, injectives and a few sums: a small zoo of modules.
std::vector<QuiverRep> zoo(const FDAlgebra& alg) {
  std::vector<QuiverRep> out;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    out.push_back(simple_rep(alg, v));
    out.push_back(projective_rep(alg, v));
    out.push_back(injective_rep(alg, v));
  }
  out.push_back(direct_sum(out[0], out[1]));
  out.push_back(radical(alg, out[1]));
  out.push_back(quotient_rep(alg, out[2], socle_spaces(alg, out[2])));
  return out;
}

std::size_t sum(const std::vector<std::size_t>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

}  // namespace

TEST_CASE("standard modules satisfy the relations") {
  for (const FDAlgebra& alg : {example61(), block_algebra(3)})
    for (const auto& m : zoo(alg)) CHECK(satisfies_relations(alg, m));
}

TEST_CASE("hom dimensions") {
  const FDAlgebra alg = example61();
  const auto mods = zoo(alg);
  for (std::size_t i = 0; i < alg.vertex_count(); ++i) {
    for (std::size_t j = 0; j < alg.vertex_count(); ++j)
      CHECK(hom_dim(alg, simple_rep(alg, i), simple_rep(alg, j)) == (i == j ? 1u : 0u));
    for (const auto& m : mods) CHECK(hom_dim(alg, projective_rep(alg, i), m) == m.dims[i]);
  }
  for (const auto& m : mods)
    for (const auto& n : mods)
      for (const auto& f : hom_basis(alg, m, n)) CHECK(is_morphism(alg, m, n, f));
  CHECK(alg.dim() == [&] {
    std::size_t total = 0;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) total += projective_rep(alg, v).total_dim();
    return total;
  }());
}

TEST_CASE("ext against the cocycle oracle") {
  for (const FDAlgebra& alg : {example61(), block_algebra(2), block_algebra(3)}) {
    const auto mods = zoo(alg);
    for (const auto& m : mods)
      for (const auto& n : mods) CHECK(ext1(alg, m, n) == support::ext1_oracle(alg, m, n));
    for (std::size_t v = 0; v < alg.vertex_count(); ++v)
      for (const auto& n : mods) CHECK(ext1(alg, projective_rep(alg, v), n) == 0);
  }
  std::mt19937 rng(7);
  const BlockModel block = build_block(6, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const QuiverRep m = support::random_block_rep(block, 2, rng);
    const QuiverRep n = support::random_block_rep(block, 2, rng);
    REQUIRE(satisfies_relations(block.algebra, m));
    CHECK(ext1(block.algebra, m, n) == support::ext1_oracle(block.algebra, m, n));
  }
}

TEST_CASE("ext quiver of the three-vertex example matches its arrows") {
  const FDAlgebra alg = example61();
  const auto e = ext1_simples_matrix(alg);
  CHECK(e == std::vector<std::vector<std::size_t>>{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
}

TEST_CASE("radical, socle and composition series") {
  const FDAlgebra alg = example61();
  const QuiverRep p2 = projective_rep(alg, 1);
  CHECK(p2.dims == std::vector<std::size_t>{1, 2, 1});
  CHECK(head_dims(alg, p2) == std::vector<std::size_t>{0, 1, 0});
  CHECK(socle_dims(alg, p2) == std::vector<std::size_t>{0, 1, 0});
  CHECK(radical_layers(alg, p2) == std::vector<std::vector<std::size_t>>{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK_FALSE(is_uniserial(alg, p2));

  const QuiverRep semi = direct_sum(simple_rep(alg, 0), simple_rep(alg, 2));
  CHECK(radical(alg, semi).total_dim() == 0);
  CHECK(composition_series(alg, semi) == std::vector<std::size_t>{0, 2});
  CHECK(socle(alg, semi).total_dim() == 2);

  for (const FDAlgebra& a : {alg, block_algebra(3)})
    for (const auto& m : zoo(a)) {
      const auto series = composition_series(a, m);
      std::vector<std::size_t> counts(a.vertex_count(), 0);
      for (auto v : series) ++counts[v];
      CHECK(counts == m.dims);
      CHECK(sum(head_dims(a, m)) + radical(a, m).total_dim() == m.total_dim());
    }
}

TEST_CASE("projective covers") {
  const FDAlgebra alg = block_algebra(2);
  for (const auto& m : zoo(alg)) {
    const ProjectiveCover pc = projective_cover(alg, m);
    CHECK(is_morphism(alg, pc.cover, m, pc.projection));
    std::size_t rank = 0;
    for (const auto& c : pc.projection.components) rank += c.rank();
    CHECK(rank == m.total_dim());
    CHECK(pc.summands.size() == sum(head_dims(alg, m)));
  }
}

TEST_CASE("subrepresentations and kernels") {
  const FDAlgebra alg = example61();
  const QuiverRep p2 = projective_rep(alg, 1);
  const auto rad = radical_spaces(alg, p2);
  const Subrep sub = subrep(alg, p2, rad);
  CHECK(satisfies_relations(alg, sub.rep));
  const QuiverRep quo = quotient_rep(alg, p2, rad);
  CHECK(quo.dims == std::vector<std::size_t>{0, 1, 0});

  std::vector<Matrix> bad(3);
  bad[0] = Matrix(1, 0);
  bad[1] = Matrix::identity(2).columns(0, 1);
  bad[2] = Matrix(1, 0);
  const bool invariant_by_luck = [&] {
    try {
      subrep(alg, p2, bad);
      return true;
    } catch (const InputError&) {
      return false;
    }
  }();
  CHECK_FALSE(invariant_by_luck);

  const ProjectiveCover pc = projective_cover(alg, simple_rep(alg, 1));
  const Subrep k = kernel(alg, pc.cover, pc.projection);
  CHECK(k.rep.total_dim() == pc.cover.total_dim() - 1);
}

TEST_CASE("isomorphism and indecomposability") {
  const FDAlgebra alg = block_algebra(2);
  const QuiverRep h = projective_rep(alg, 2);
  CHECK(is_indecomposable(alg, h));
  CHECK(is_isomorphic(alg, h, injective_rep(alg, 0)));
  CHECK_FALSE(is_isomorphic(alg, h, projective_rep(alg, 0)));
  CHECK_FALSE(is_indecomposable(alg, direct_sum(simple_rep(alg, 0), simple_rep(alg, 1))));
  CHECK(is_isomorphic(alg, direct_sum(simple_rep(alg, 0), h), direct_sum(h, simple_rep(alg, 0))));

  // A change of basis gives an isomorphic copy.
  QuiverRep twisted = h;
  twisted.maps[0] = twisted.maps[0].scaled(Rational(5, 3));
  CHECK(is_isomorphic(alg, h, twisted));
}

TEST_CASE("quotient functor is exact on radical sequences") {
  const FDAlgebra alg = example61();
  const SerreQuotient q = serre_quotient(alg, {0, 2});
  for (const auto& m : zoo(alg)) {
    const auto rad = radical_spaces(alg, m);
    const Subrep sub = subrep(alg, m, rad);
    const QuiverRep top = quotient_rep(alg, m, rad);
    const AlgebraModule em = quotient_functor(alg, q, m);
    const AlgebraModule es = quotient_functor(alg, q, sub.rep);
    const AlgebraModule et = quotient_functor(alg, q, top);
    CHECK(is_module(q.algebra, em));
    CHECK(sum(em.dims) == sum(es.dims) + sum(et.dims));
  }
}

TEST_CASE("string modules of the k = 1 block") {
  const FDAlgebra alg = block_algebra(1);
  const StringModules sm = string_modules(alg, 16);
  CHECK_FALSE(sm.truncated);
  CHECK(sm.modules.size() == 4);
  for (const auto& m : sm.modules) {
    CHECK(satisfies_relations(alg, m));
    CHECK(is_indecomposable(alg, m));
  }
  CHECK_THROWS_AS(string_modules(example61(), 8), DomainError);
}

TEST_CASE("rep validation") {
  const FDAlgebra alg = block_algebra(1);
  QuiverRep m = zero_rep(*alg.quiver(), {1, 1});
  m.maps[0](0, 0) = 1;
  m.maps[1](0, 0) = 1;
  CHECK_FALSE(satisfies_relations(alg, m));
  CHECK_THROWS_AS(validate_rep(alg, m), InputError);
  m.maps[1] = Matrix(2, 2);
  CHECK_THROWS_AS(validate_rep(alg, m), InputError);
}
