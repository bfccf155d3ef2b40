#include <doctest.h>

#include <numeric>

#include "hcb/errors.hpp"
#include "hcb/principal_block.hpp"
#include "hcb/quiver_algebra.hpp"
#include "hcb/serialization.hpp"
#include "support.hpp"

using namespace hcb;

namespace {

FDAlgebra example61() {
  const auto spec = parse_quiver_spec(read_json_file(support::data_path("example61.json")));
  return build_algebra(spec.quiver, spec.relations);
}

FDAlgebra dual_numbers() {
  Quiver q({"x"}, {{"t", 0, 0}});
  return build_algebra(q, {make_relation(q, {{Rational(1), {"t", "t"}}})});
}

std::vector<std::size_t> oracle_dims(const FDAlgebra& alg, int max_len) {
  const auto& q = *alg.quiver();
  auto dims = oracle::graded_dims(support::edges(q), static_cast<int>(q.vertex_count()), support::rels(alg.relations()), max_len);
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

void check_idempotents(const FDAlgebra& alg) {
  SparseVector one;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) one.push_back({alg.idempotent(v), Rational(1)});
  std::sort(one.begin(), one.end());
  for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
      const auto& p = alg.product(alg.idempotent(v), alg.idempotent(w));
      if (v == w) {
        REQUIRE(p.size() == 1);
        CHECK(p[0].first == alg.idempotent(v));
        CHECK(p[0].second == 1);
      } else {
        CHECK(p.empty());
      }
    }
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    const SparseVector x{{b, Rational(1)}};
    CHECK(alg.multiply(one, x) == x);
    CHECK(alg.multiply(x, one) == x);
  }
}

}  // namespace

TEST_CASE("block algebras have dimension (k+1)^2") {
  for (int k = 0; k <= 6; ++k) {
    const FDAlgebra alg = block_algebra(k);
    CHECK(alg.dim() == static_cast<std::size_t>((k + 1) * (k + 1)));
    CHECK(alg.dim() == oracle::block_path_count(k));
    CHECK(alg.graded_dims() == oracle_dims(alg, k + 2));
    check_idempotents(alg);
    if (k <= 3) CHECK(alg.is_associative());
  }
}

TEST_CASE("the three-vertex example") {
  const FDAlgebra alg = example61();
  CHECK(alg.dim() == 10);
  CHECK(alg.graded_dims() == std::vector<std::size_t>{3, 4, 3});
  CHECK(alg.graded_dims() == oracle_dims(alg, 5));
  check_idempotents(alg);
  CHECK(alg.is_associative());

  // The two sides of the commutativity relation agree.
  const auto& q = *alg.quiver();
  const std::vector<std::size_t> left{q.arrow_index("beta_1"), q.arrow_index("alpha_1")};
  const std::vector<std::size_t> right{q.arrow_index("alpha_2"), q.arrow_index("beta_2")};
  CHECK(alg.normal_form(1, left) == alg.normal_form(1, right));
  CHECK_FALSE(alg.normal_form(1, left).empty());
  const std::vector<std::size_t> dead{q.arrow_index("alpha_1"), q.arrow_index("beta_1")};
  CHECK(alg.normal_form(0, dead).empty());
}

TEST_CASE("algebras without arrows and the dual numbers") {
  const Quiver q({"a", "b", "c"}, {});
  const FDAlgebra alg = build_algebra(q, {});
  CHECK(alg.dim() == 3);
  check_idempotents(alg);

  const FDAlgebra d = dual_numbers();
  CHECK(d.dim() == 2);
  const std::size_t t = d.arrow_element(0);
  CHECK(d.product(t, t).empty());
  CHECK(ext1(d, simple_rep(d, 0), simple_rep(d, 0)) == 1);
  CHECK(support::ext1_oracle(d, simple_rep(d, 0), simple_rep(d, 0)) == 1);
}

TEST_CASE("build_algebra errors") {
  const Quiver loop({"x"}, {{"t", 0, 0}});
  CHECK_THROWS_AS(build_algebra(loop, {}), NotFiniteDimensional);
  CHECK_THROWS_AS(build_algebra(loop, {}, 8), NotFiniteDimensional);
  CHECK_THROWS_AS(build_algebra(loop, {make_relation(loop, {{Rational(1), {"t"}}})}), NonAdmissible);
  CHECK_THROWS_AS(build_algebra(loop, {make_relation(loop, {{Rational(1), {"t", "t"}}, {Rational(-1), {"t", "t", "t"}}})}),
                  InputError);
  const Quiver two({"x", "y"}, {{"a", 0, 1}, {"b", 1, 0}});
  CHECK_THROWS_AS(make_relation(two, {{Rational(1), {"a", "a"}}}), InputError);
  CHECK_THROWS_AS(make_relation(two, {{Rational(1), {"a", "z"}}}), InputError);
  CHECK_THROWS_AS(Quiver({"x", "x"}, {}), InputError);
  CHECK_THROWS_AS(Quiver({"x"}, {{"a", 0, 3}}), InputError);
}

TEST_CASE("serre quotients") {
  const FDAlgebra alg = example61();
  const auto& q = *alg.quiver();

  const SerreQuotient dual = serre_quotient(alg, {q.vertex_index("1"), q.vertex_index("3")});
  CHECK(dual.algebra.dim() == 2);
  CHECK(dual.algebra.vertex_count() == 1);
  CHECK(dual.retained == std::vector<std::size_t>{1});
  std::size_t nil = dual.algebra.idempotent(0) == 0 ? 1 : 0;
  CHECK(dual.algebra.product(nil, nil).empty());
  const auto pres = present_as_quiver(dual.algebra);
  CHECK(pres.ok);
  CHECK(pres.quiver.arrow_count() == 1);

  const SerreQuotient same = serre_quotient(alg, {});
  CHECK(same.algebra.dim() == alg.dim());
  std::vector<std::size_t> identity(alg.dim());
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(same.basis_in_parent == identity);
  CHECK(structure_constants_agree(alg, same.algebra, identity));

  const SerreQuotient none = serre_quotient(alg, {0, 1, 2});
  CHECK(none.algebra.dim() == 0);
  CHECK_THROWS_AS(serre_quotient(alg, {7}), InputError);

  // Killing the middle vertex leaves two paths of length 2 whose composites vanish.
  const SerreQuotient ends = serre_quotient(alg, {1});
  CHECK(ends.algebra.dim() == 4);
  const auto ends_pres = present_as_quiver(ends.algebra);
  CHECK(ends_pres.ok);
  CHECK(ends_pres.quiver.arrow_count() == 2);
  const FDAlgebra rebuilt = build_algebra(ends_pres.quiver, ends_pres.relations);
  CHECK(rebuilt.dim() == 4);
}

TEST_CASE("re-presentation reports mixed lengths") {
  // At x the corner algebra is generated by t and u = ba with t^4 = u^2:
  // homogeneous in the original grading, not in the new arrows.
  const Quiver q({"x", "y"}, {{"t", 0, 0}, {"a", 0, 1}, {"b", 1, 0}});
  const FDAlgebra alg = build_algebra(q, {make_relation(q, {{Rational(1), {"t", "t", "t", "t"}}, {Rational(-1), {"a", "b", "a", "b"}}}),
                                          make_relation(q, {{Rational(1), {"t", "a"}}}),
                                          make_relation(q, {{Rational(1), {"b", "t"}}})});
  const SerreQuotient e = serre_quotient(alg, {1});
  CHECK(e.algebra.dim() == 6);
  const auto pres = present_as_quiver(e.algebra);
  CHECK_FALSE(pres.ok);
  CHECK_FALSE(pres.failure.empty());
}

TEST_CASE("tensor products") {
  const FDAlgebra b1 = block_algebra(1);
  const FDAlgebra t = tensor_algebra(b1, b1);
  CHECK(t.dim() == 16);
  CHECK(t.vertex_count() == 4);
  CHECK(t.is_associative());
  check_idempotents(t);

  auto [q, rels] = tensor_presentation(b1, b1);
  CHECK(q.vertex_count() == 4);
  CHECK(q.arrow_count() == 8);
  const FDAlgebra presented = build_algebra(q, rels);
  CHECK(presented.dim() == 16);
  CHECK(presented.graded_dims() == t.graded_dims());

  const FDAlgebra d = dual_numbers();
  CHECK(tensor_algebra(d, block_algebra(2)).dim() == 18);
}
