#include <doctest.h>

#include "oracles.hpp"
#include "sheet_atlas/partitions.hpp"

using namespace sheet_atlas;

TEST_CASE("conjugate of small partitions") {
  CHECK(conjugate(Partition({2, 1, 1})) == Partition({3, 1}));
  CHECK(conjugate(Partition({1, 1, 1, 1, 1})) == Partition({5}));
  CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugate agrees with counting parts >= i") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition m = oracle::random_partition(rng, rng.uniform(1, 40));
    const Partition c = conjugate(m);
    REQUIRE(static_cast<int>(c.length()) == m.largest());
    for (int i = 1; i <= m.largest(); ++i) {
      int count = 0;
      for (int x : m.parts()) count += x >= i ? 1 : 0;
      CHECK(c[static_cast<std::size_t>(i - 1)] == count);
    }
  }
}

TEST_CASE("profile counts parts") {
  const auto p = profile(Partition({2, 1, 1}));
  CHECK(p.s() == 2);
  CHECK(p.l(1) == 2);
  CHECK(p.l(2) == 1);
  const auto q = profile(Partition({2, 2}));
  CHECK(q.l(1) == 0);
  CHECK(q.l(2) == 2);
  const auto r = profile(Partition({7}));
  CHECK(r.s() == 7);
  for (int i = 1; i < 7; ++i) CHECK(r.l(i) == 0);
  CHECK(r.l(7) == 1);
  CHECK(profile(Partition()).s() == 0);
}

TEST_CASE("random partitions: involution, size and profile identities") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const Partition m = oracle::random_partition(rng, rng.uniform(0, 40));
    const Partition c = conjugate(m);
    CHECK(conjugate(c) == m);
    CHECK(c.n() == m.n());
    const auto prof = profile(m);
    CHECK(prof.weighted_total() == m.n());
    CHECK(prof.total() == static_cast<int>(m.length()));
    CHECK(prof.total() == (c.empty() ? 0 : c[0]));
    for (int i = 1; i <= prof.s(); ++i) {
      const int ni = i <= static_cast<int>(c.length()) ? c[static_cast<std::size_t>(i - 1)] : 0;
      const int next = i < static_cast<int>(c.length()) ? c[static_cast<std::size_t>(i)] : 0;
      CHECK(prof.l(i) == ni - next);
    }
  }
}

TEST_CASE("constructor sorts and rejects bad parts") {
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition({1, 3, 2}).n() == 6);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK_THROWS_AS(Partition({-1}), DomainError);
  CHECK(Partition::from_blocks({{3, 2}, {2, 0}, {1, 1}}) == Partition({3, 3, 1}));
}

TEST_CASE("partitions_of: counts and reverse-lex order") {
  for (int n = 0; n <= 25; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == oracle::partition_count(n));
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));
  for (std::size_t i = 0; i + 1 < p4.size(); ++i) CHECK(reverse_lex_less(p4[i], p4[i + 1]));
  CHECK_THROWS_AS(partitions_of(-1), DomainError);
}

TEST_CASE("orbit parity rule") {
  CHECK(is_valid_orbit_partition(GroupKind::sp(3), Partition({2, 2, 1, 1})));
  CHECK(is_valid_orbit_partition(GroupKind::so_odd(3), Partition({3, 2, 2})));
  CHECK_FALSE(is_valid_orbit_partition(GroupKind::sp(3), Partition({3, 2, 1})));
  CHECK_FALSE(is_valid_orbit_partition(GroupKind::so_even(2), Partition({2, 1, 1})));
  CHECK_FALSE(is_valid_orbit_partition(GroupKind::so_even(3), Partition({4, 2})));
  CHECK(is_valid_orbit_partition(GroupKind::gl(3), Partition({2, 1})));
  CHECK_THROWS_AS(is_valid_orbit_partition(GroupKind::sp(2), Partition({2, 1})), DomainError);
  CHECK_THROWS_AS(is_valid_orbit_partition(GroupKind::f4(), Partition({2})), DomainError);
}

TEST_CASE("group kinds") {
  CHECK(GroupKind::sp(2).dim_g() == 10);
  CHECK(GroupKind::so_odd(2).dim_g() == 10);
  CHECK(GroupKind::so_even(3).dim_g() == 15);
  CHECK(GroupKind::gl(4).dim_g() == 16);
  CHECK(GroupKind::f4().dim_g() == 52);
  CHECK_THROWS_AS(GroupKind::so_even(1).validate(), DomainError);
  CHECK_THROWS_AS(GroupKind::sp(0).validate(), DomainError);
  CHECK(to_string(GroupKind::sp(3)) == "C3");
  CHECK(parse_family("D") == Family::D);
  CHECK_THROWS_AS(parse_family("E"), DomainError);
}
