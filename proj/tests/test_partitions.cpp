#include <doctest.h>

#include "hcb/errors.hpp"
#include "hcb/partitions.hpp"
#include "oracles.hpp"

using namespace hcb;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("partition validation and text form") {
  CHECK(Partition::parse("7,5,1,1").parts() == std::vector<int>{7, 5, 1, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse(" 3, 1 ").to_string() == "3,1");
  CHECK(P({4, 2}).size() == 6);
  CHECK(P({4, 2}).part(5) == 0);
  CHECK(Partition::from_padded({2, 1, 0, 0}) == P({2, 1}));
  CHECK_THROWS_AS(P({1, 2}), InputError);
  CHECK_THROWS_AS(P({2, 0}), InputError);
  CHECK_THROWS_AS(Partition::parse("3,,1"), InputError);
  CHECK_THROWS_AS(Partition::parse("a"), InputError);
  CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
  CHECK(Partition().transpose().empty());
}

TEST_CASE("decompose examples") {
  auto d = decompose(P({7, 5, 1, 1}), 3);
  CHECK(d.mu == P({4, 2, 1, 1}));
  CHECK(d.nu == P({1, 1}));
  d = decompose(Partition(), 4);
  CHECK(d.mu.empty());
  CHECK(d.nu.empty());
  d = decompose(P({3, 1}), 2);
  CHECK(d.mu == P({1, 1}));
  CHECK(d.nu == P({1}));
  CHECK_THROWS_AS(decompose(P({2}), 1), ParameterError);
}

TEST_CASE("decompose reconstructs and is restricted up to size 20") {
  for (int n = 0; n <= 20; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int m = 2; m <= 6; ++m) {
        const auto d = decompose(lambda, m);
        for (std::size_t i = 0; i < lambda.length(); ++i) REQUIRE(d.mu.part(i) + m * d.nu.part(i) == lambda.part(i));
        REQUIRE(is_m_restricted(d.mu, m));
      }
}

TEST_CASE("decompose matches the exhaustive pair search") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& parts : oracle::partitions(n))
      for (int m = 2; m <= 5; ++m) {
        const auto pairs = oracle::restricted_pairs(parts, m);
        REQUIRE(pairs.size() == 1);
        const auto d = decompose(Partition(parts), m);
        CHECK(d.mu.parts() == pairs[0].mu);
        CHECK(d.nu.parts() == pairs[0].nu);
      }
}

TEST_CASE("restricted and trivial predicates") {
  CHECK(is_m_restricted(P({4, 2, 1, 1}), 3));
  CHECK_FALSE(is_m_restricted(P({3}), 3));
  CHECK(is_m_restricted(Partition(), 5));
  CHECK(is_m_restricted(Partition(), 1));
  CHECK_FALSE(is_m_restricted(P({1}), 1));
  CHECK(is_m_trivial(P({2, 2, 1}), 3));
  CHECK(is_m_trivial(P({2, 2, 2}), 3));
  CHECK_FALSE(is_m_trivial(P({2, 1, 1}), 3));
  CHECK(is_m_trivial(Partition(), 3));
  CHECK_FALSE(is_m_trivial(P({3}), 3));
  CHECK_THROWS_AS(is_m_trivial(P({1}), 1), ParameterError);

  // Size 4, m = 3: only (2,2) is 3-trivial.
  int count = 0;
  for (const auto& p : enumerate_partitions(4)) count += is_m_trivial(p, 3);
  CHECK(count == 1);

  for (int n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (int m = 2; m <= 5; ++m) {
        CHECK(is_m_trivial(p, m) == oracle::trivial_shape(p.parts(), m));
        CHECK(is_m_restricted(p, m) == oracle::restricted(p.parts(), m));
        if (is_m_trivial(p, m)) CHECK(is_m_restricted(p, m));
      }
}

TEST_CASE("triv_partition") {
  CHECK(triv_partition(7, 3) == P({2, 2, 2, 1}));
  CHECK(triv_partition(0, 4).empty());
  CHECK(triv_partition(5, 2) == P({1, 1, 1, 1, 1}));
  for (int k = 0; k <= 20; ++k)
    for (int m = 2; m <= 6; ++m) {
      const Partition t = triv_partition(k, m);
      CHECK(t.size() == k);
      CHECK(is_m_trivial(t, m));
      int trivial = 0;
      for (const auto& p : oracle::partitions(k)) trivial += oracle::trivial_shape(p, m);
      CHECK(trivial == 1);
    }
}

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(3) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(enumerate_partitions(10).size() == 42);
  for (int n = 0; n <= 25; ++n) {
    CHECK(static_cast<long long>(enumerate_partitions(n).size()) == oracle::pentagonal_count(n));
    CHECK(partition_count(n) == oracle::pentagonal_count(n));
  }
  const auto list = enumerate_partitions(8);
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] > list[i]);
}

TEST_CASE("phi_image_labels") {
  CHECK(phi_image_labels(2, 2) == std::vector<Partition>{P({2}), P({1, 1})});
  CHECK(phi_image_labels(3, 2) == std::vector<Partition>{P({3}), P({1, 1, 1})});
  CHECK(phi_image_labels(4, 2) == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({1, 1, 1, 1})});
  CHECK_THROWS_AS(phi_image_labels(3, 4), ParameterError);
  CHECK_THROWS_AS(phi_image_labels(3, 1), ParameterError);
  for (int n = 2; n <= 12; ++n)
    for (int m = 2; m <= n; ++m) {
      const auto labels = phi_image_labels(n, m);
      CHECK(static_cast<long long>(labels.size()) == oracle::brute_simple_count(n, m));
      CHECK(labels.size() >= static_cast<std::size_t>(n / m + 1));
    }
}
