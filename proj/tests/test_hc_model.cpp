#include <doctest.h>

#include <numeric>

#include "hcb/errors.hpp"
#include "hcb/hc_model.hpp"
#include "oracles.hpp"

using namespace hcb;

namespace {
CherednikParameter C(const char* text) { return CherednikParameter::parse(text); }
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("parameters") {
  CHECK(C("2/4").value() == Rational(1, 2));
  CHECK(C("-3/6").negative());
  CHECK(C("-3/6").to_string() == "-1/2");
  CHECK(C("5").to_string() == "5");
  CHECK_THROWS_AS(C("1/0"), InputError);
  CHECK_THROWS_AS(C("x"), InputError);
  CHECK_THROWS_AS(C("1/-2"), InputError);
  CHECK(CherednikParameter::irrational().is_irrational());
  CHECK(CherednikParameter::irrational(true).negative());
}

TEST_CASE("classify_parameter") {
  const auto half = classify_parameter(C("1/2"), 2);
  CHECK(half.kind == ParameterKind::Rational);
  CHECK(half.r == 1);
  CHECK(half.m == 2);
  CHECK_FALSE(half.negative);
  CHECK(classify_parameter(C("3"), 5).kind == ParameterKind::Integral);
  CHECK(classify_parameter(C("1/7"), 3).kind == ParameterKind::Generic);
  CHECK(classify_parameter(CherednikParameter::irrational(), 3).kind == ParameterKind::Generic);
  const auto neg = classify_parameter(C("-2/3"), 4);
  CHECK(neg.kind == ParameterKind::Rational);
  CHECK(neg.negative);
  CHECK(neg.r == -2);
  CHECK(classify_parameter(C("0"), 2).kind == ParameterKind::Integral);
  CHECK_THROWS_AS(classify_parameter(C("1/2"), 0), ParameterError);
}

TEST_CASE("simple labels and counts") {
  CHECK(simple_labels(2, C("1/2")).labels == std::vector<Partition>{P({2}), P({1, 1})});
  CHECK(simple_labels(5, C("1/7")).labels == std::vector<Partition>{P({5})});
  CHECK(simple_labels(3, C("2")).labels.size() == 3);
  CHECK(count_simples(2, C("1/2")) == 2);
  CHECK(count_simples(4, C("1/2")) == 4);
  CHECK(count_simples(5, CherednikParameter::irrational()) == 1);
  CHECK(simple_labels(4, C("-1/2")).sign_twisted);
  CHECK(simple_labels(4, C("-1/2")).labels == simple_labels(4, C("1/2")).labels);

  for (int n = 1; n <= 10; ++n) {
    CHECK(static_cast<long long>(count_simples(n, C("7"))) == oracle::pentagonal_count(n));
    for (int m = 2; m <= n; ++m) {
      const auto expected = static_cast<std::size_t>(oracle::brute_simple_count(n, m));
      for (int r : {1, m + 1, -1, 2 * m - 1}) {
        if (std::gcd(r, m) != 1) continue;
        const CherednikParameter c{Rational(r, m)};
        CHECK(count_simples(n, c) == expected);
      }
    }
    for (const auto& c : {C("1/2"), C("3"), C("1/11"), C("-2/3")}) {
      const auto labels = simple_labels(n, c).labels;
      CHECK(std::find(labels.begin(), labels.end(), P({n})) != labels.end());
    }
  }
}

TEST_CASE("leaves") {
  const auto l = leaf(7, 3, 2);
  CHECK(l.index == 2);
  CHECK(l.parabolic.blocks() == std::vector<int>{3, 3, 1});
  CHECK(leaf(4, 2, 0).parabolic.blocks() == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS_AS(leaf(4, 3, 2), ParameterError);
}

TEST_CASE("ideal chains") {
  const auto c22 = ideal_chain(2, 2);
  REQUIRE(c22.entries.size() == 2);
  CHECK(c22.entries[0].simple_support.index == 0);
  CHECK(c22.entries[0].quotient_support->index == 1);
  CHECK_FALSE(c22.entries[1].quotient_support.has_value());

  CHECK(ideal_chain(5, 2).entries.size() == 3);
  CHECK(ideal_chain(3, 5).entries.empty());
  CHECK_THROWS_AS(ideal_chain(3, 1), ParameterError);
  CHECK(ideal_chain(4, C("1/3")).entries.size() == 2);
  CHECK(ideal_chain(4, C("2")).entries.empty());
  CHECK(ideal_chain(4, C("1/9")).entries.empty());

  for (int n = 2; n <= 12; ++n)
    for (int m = 2; m <= n; ++m) {
      const auto chain = ideal_chain(n, m);
      CHECK(chain.entries.size() == static_cast<std::size_t>(n / m + 1));
      for (std::size_t i = 0; i < chain.entries.size(); ++i) {
        CHECK(chain.entries[i].index == static_cast<int>(i));
        if (chain.entries[i].quotient_support) CHECK(chain.entries[i].quotient_support->index == static_cast<int>(i) + 1);
        if (i > 0) CHECK(chain.entries[i].simple_support.index > chain.entries[i - 1].simple_support.index);
      }
    }
}

TEST_CASE("two-parameter classification") {
  auto cls = two_param_class(C("1/2"), C("3/2"), 2);
  CHECK(cls.kind == TwoParamCase::DerivedEquivalence);
  cls = two_param_class(C("1/5"), C("2/5"), 5);
  CHECK(cls.kind == TwoParamCase::RepOfSymmetricGroup);
  CHECK(cls.group_rank == 1);
  CHECK(cls.simple_count == 1);
  CHECK(two_param_class(C("1/2"), C("1/3"), 6).kind == TwoParamCase::Zero);
  CHECK(two_param_class(C("1/3"), C("-1/3"), 4).kind == TwoParamCase::DerivedEquivalence);
  CHECK(two_param_class(C("1/3"), C("2/3"), 4).kind == TwoParamCase::DerivedEquivalence);
  CHECK(two_param_class(C("1/4"), C("3/4"), 8).kind == TwoParamCase::DerivedEquivalence);
  CHECK(two_param_class(C("1/4"), C("-3/4"), 8).kind == TwoParamCase::DerivedEquivalence);
  CHECK(two_param_class(C("1/3"), C("7/3"), 6).kind == TwoParamCase::DerivedEquivalence);
  cls = two_param_class(C("1/5"), C("3/5"), 10);
  CHECK(cls.kind == TwoParamCase::RepOfSymmetricGroup);
  CHECK(cls.group_rank == 2);
  CHECK(cls.simple_count == 2);
  CHECK(two_param_class(C("1/5"), C("3/5"), 7).kind == TwoParamCase::Zero);
  CHECK_THROWS_AS(two_param_class(CherednikParameter::irrational(), C("1/2"), 2), ParameterError);

  for (int num = -6; num <= 6; ++num)
    for (int den = 1; den <= 6; ++den) {
      const CherednikParameter c{Rational(num, den)};
      for (int n = 1; n <= 6; ++n) CHECK(two_param_class(c, c, n).kind != TwoParamCase::Zero);
    }
}
