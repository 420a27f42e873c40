#include <doctest.h>

#include "oracles.hpp"
#include "sheet_atlas/hitchin.hpp"

using namespace sheet_atlas;

TEST_CASE("h0 of powers of K") {
  CHECK(h0_canonical_power(2, 1) == 2);
  CHECK(h0_canonical_power(2, 2) == 3);
  CHECK(h0_canonical_power(3, 4) == 14);
  CHECK_THROWS_AS(h0_canonical_power(1, 2), DomainError);
  CHECK_THROWS_AS(h0_canonical_power(2, 0), DomainError);
  CHECK_THROWS_AS(CurveParams(1), DomainError);
  CHECK(CurveParams(3).genus == 3);
}

TEST_CASE("S-Hitchin base of gl_n examples") {
  CHECK(dim_s_hitchin_base_gln(Partition({2, 1, 1}), 2) == 7);
  CHECK(dim_s_hitchin_base_gln(Partition({2, 2}), 2) == 5);
  for (int g = 2; g <= 5; ++g) CHECK(dim_s_hitchin_base_gln(Partition({1, 1, 1, 1, 1}), g) == dim_hitchin_base(GroupKind::gl(5), g));
}

TEST_CASE("sp4 base dimensions") {
  CHECK(dim_hitchin_base_sp4(2) == 10);
  CHECK(dim_hitchin_base_sp4(3) == 20);
  CHECK(dim_hitchin_base_sp4(4) == 30);
  for (int g = 2; g <= 12; ++g) {
    CHECK(dim_hitchin_base_sp4(g) == 10 * (g - 1));
    CHECK(dim_hitchin_base(GroupKind::sp(2), g) == 10 * (g - 1));
  }
  CHECK(dim_s_hitchin_base_sp4_dix(2) == 2);
  CHECK(dim_s_hitchin_base_sp4_dix(3) == 3);
  const auto dix = find_sheet("C2:S_Dix");
  CHECK(slice_weights(dix).weights == std::vector<int>{1});
  for (int g = 2; g <= 5; ++g) CHECK(dim_from_weights(slice_weights(dix), g) == dim_s_hitchin_base_sp4_dix(g));
}

TEST_CASE("weight formula agrees with the double sum on gl_n") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& s : enumerate_sheets_gln(n)) {
      const auto w = slice_weights(s);
      CHECK(static_cast<int>(w.weights.size()) == s.dim_z);
      for (int g = 2; g <= 4; ++g) {
        const int via_weights = dim_from_weights(w, g);
        CHECK(via_weights == dim_s_hitchin_base_gln(s.levi.gl_parts, g));
        const int full = dim_hitchin_base(s.kind, g);
        CHECK(via_weights <= full);
        const bool regular = s.levi.gl_parts == Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
        CHECK((via_weights == full) == regular);
      }
    }
  }
}

TEST_CASE("fundamental degrees account for the dimension of g") {
  const std::vector<GroupKind> kinds = {GroupKind::gl(5),    GroupKind::so_odd(3), GroupKind::sp(4),
                                        GroupKind::so_even(4), GroupKind::so_even(5), GroupKind::f4()};
  for (const auto& k : kinds) {
    int total = 0;
    for (int d : fundamental_degrees(k)) total += 2 * d - 1;
    CHECK(total == k.dim_g());
  }
  CHECK(fundamental_degrees(GroupKind::so_even(4)) == std::vector<int>{2, 4, 4, 6});
  CHECK(fundamental_degrees(GroupKind::f4()) == std::vector<int>{2, 6, 8, 12});
}

TEST_CASE("slice weights of other sheets") {
  CHECK(slice_weights(find_sheet("C2:reg")).weights == std::vector<int>{2, 4});
  CHECK(slice_weights(find_sheet("C2:S'_Dix")).weights == std::vector<int>{2});
  CHECK(slice_weights(find_sheet("C2:0")).weights.empty());
  CHECK(slice_weights(f4_b3_sheet()).weights == std::vector<int>{2});
  for (const auto& s : maximal_levi_table(12)) {
    if (s.kind.family == Family::A) continue;
    CHECK(slice_weights(s).weights.size() == 1);
  }
}

TEST_CASE("component counts") {
  for (int g = 2; g <= 6; ++g) CHECK(component_count(1, g) == 1);
  CHECK(component_count(2, 2) == 16);
  CHECK(component_count(2, 3) == 64);
  CHECK(component_count(2, 20) == Integer("1099511627776"));
  CHECK_THROWS_AS(component_count(3, 2), DomainError);
  CHECK_THROWS_AS(component_count(2, 1), DomainError);
}

TEST_CASE("S-cameral degree") {
  CHECK(s_cameral_degree(find_sheet("C2:S_Dix")) == 2);
  CHECK(s_cameral_degree(gln_sheet(Partition({2, 1, 1}))) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(s_cameral_degree(gln_sheet(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))) == oracle::int_factorial(n));
  CHECK_THROWS_AS(s_cameral_degree(find_sheet("C2:O_min")), DomainError);
  for (const auto& s : maximal_levi_table(12)) CHECK(s_cameral_degree(s) == s.w_l_order);
}
