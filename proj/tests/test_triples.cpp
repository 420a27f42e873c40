#include <doctest.h>

#include "oracles.hpp"
#include "sheet_atlas/liealg.hpp"
#include "sheet_atlas/triples.hpp"

using namespace sheet_atlas;

namespace {

std::vector<Rational> flatten(const RationalMatrix& m) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out.push_back(m(i, j));
  return out;
}

// f is the unique solution of [e,y] = h, [h,y] = -2y iff this map is injective.
bool f_is_unique(const Sl2Triple& t) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& b : t.model.basis) {
    auto v = flatten(bracket(t.e, b));
    const auto w = flatten(bracket(t.h, b) + Rational(2) * b);
    v.insert(v.end(), w.begin(), w.end());
    cols.push_back(std::move(v));
  }
  return rank(cols) == t.model.dim();
}

bool relations_hold(const Sl2Triple& t) {
  return bracket(t.h, t.e) == Rational(2) * t.e && bracket(t.h, t.f) == Rational(-2) * t.f && bracket(t.e, t.f) == t.h;
}

}  // namespace

TEST_CASE("GL triple examples") {
  const auto t21 = build_gl_triple(2, 1);
  CHECK(t21.h == RationalMatrix::diagonal({1, 0, -1}));
  CHECK(t21.abelianization_value == 3);
  REQUIRE(t21.h_prime.has_value());
  CHECK(*t21.h_prime == RationalMatrix::unit(3, 1, 1));
  CHECK(bracket(*t21.h_prime, t21.e).is_zero());

  const auto t11 = build_gl_triple(1, 1);
  CHECK(t11.h == RationalMatrix::diagonal({1, -1}));
  CHECK(t11.abelianization_value == 2);
  CHECK_FALSE(t11.h_prime.has_value());

  const auto t22 = build_gl_triple(2, 2);
  CHECK(t22.h == RationalMatrix::diagonal({1, 1, -1, -1}));
  CHECK(t22.abelianization_value == 8);

  CHECK_THROWS_AS(build_gl_triple(1, 2), DomainError);
  CHECK_THROWS_AS(build_gl_triple(11, 10), DomainError);
}

TEST_CASE("GL triples with m1 + m2 <= 8") {
  for (int n = 2; n <= 8; ++n)
    for (int m2 = 1; 2 * m2 <= n; ++m2) {
      const int m1 = n - m2;
      CAPTURE(m1);
      CAPTURE(m2);
      const auto t = build_gl_triple(m1, m2);
      CHECK(relations_hold(t));
      CHECK(is_strictly_block_upper(t.e, t.flag_dims));
      CHECK(is_block_diagonal(t.h, t.flag_dims));
      CHECK(t.abelianization_value != 0);
      CHECK(static_cast<int>(centralizer_dim(t.e, t.model)) == m1 * m1 + m2 * m2);
      CHECK(t.h_prime.has_value() == (m1 > m2));
      const auto type = m1 == m2 ? SheetType::Type2 : SheetType::Type1;
      CHECK(verify_triple("gl", t, type, m1 * m1 + m2 * m2).all_ok());
      if (n <= 6) CHECK(f_is_unique(t));
    }
}

TEST_CASE("B/C/D triple examples") {
  const auto b2 = build_bcd_triple(GroupKind::so_odd(2), LeviLabel::max_levi(2, 1));
  CHECK(b2.abelianization_value == 2);
  CHECK(relations_hold(b2));
  const auto plan_b2 = plan_jordan_basis(GroupKind::so_odd(2), LeviLabel::max_levi(2, 1));
  CHECK(plan_b2.orbit == Partition({3, 1, 1}));

  const auto c2 = build_bcd_triple(GroupKind::sp(2), LeviLabel::max_levi(1, 1));
  CHECK(c2.abelianization_value == 1);
  CHECK(relations_hold(c2));

  const auto c2b = build_bcd_triple(GroupKind::sp(2), LeviLabel::max_levi(2, 0));
  CHECK(relations_hold(c2b));
  CHECK(verify_triple("C2 2;0", c2b, SheetType::Type2, 4).all_ok());
}

TEST_CASE("every maximal-Levi construction with n <= 12") {
  int count = 0;
  for (const auto& s : maximal_levi_table(12)) {
    if (s.kind.family == Family::A) continue;
    CAPTURE(s.id);
    const auto plan = plan_jordan_basis(s.kind, s.levi);
    CHECK(plan.orbit == std::get<Partition>(s.nilpotent_orbit));
    const auto beta = plan.beta;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      const auto bj = static_cast<std::size_t>(beta[j]);
      CHECK(static_cast<std::size_t>(beta[bj]) == j);
      CHECK(plan.orbit[bj] == plan.orbit[j]);
    }
    if (s.type_tag == SheetType::Type1) CHECK(beta[static_cast<std::size_t>(plan.a - 1)] == plan.a);

    const RationalMatrix g = plan_gram(plan);
    const bool symplectic = s.kind.family == Family::C;
    CHECK(g.transpose() == (symplectic ? Rational(-1) * g : g));
    CHECK(determinant(g) != 0);

    const auto t = build_bcd_triple(s.kind, s.levi);
    CHECK(relations_hold(t));
    CHECK(in_algebra(t.e, t.model));
    CHECK(in_algebra(t.h, t.model));
    CHECK(in_algebra(t.f, t.model));
    CHECK(is_strictly_block_upper(t.e, t.flag_dims));
    CHECK(is_block_diagonal(t.h, t.flag_dims));
    CHECK(t.abelianization_value > 0);
    if (s.type_tag == SheetType::Type1) {
      REQUIRE(t.h_prime.has_value());
      CHECK(bracket(*t.h_prime, t.e).is_zero());
      CHECK(is_block_diagonal(*t.h_prime, t.flag_dims));
      CHECK(in_algebra(*t.h_prime, t.model));
      CHECK(*t.h_prime_value != 0);
    }
    const auto report = verify_triple(s.id, t, s.type_tag, s.d);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CHECK(c.ok);
    }
    if (s.kind.natural_dim() <= 6) CHECK(f_is_unique(t));
    ++count;
  }
  CHECK(count > 40);
}

TEST_CASE("sp4 triple") {
  const auto t = sp4_triple();
  CHECK(relations_hold(t));
  CHECK(t.h == RationalMatrix::diagonal({1, 1, -1, -1}));
  CHECK(verify_triple("sp4", t, SheetType::Type1, 4).all_ok());
}

TEST_CASE("sp4 slice, corrected") {
  const auto model = sp4_model();
  CHECK(in_algebra(sp4_slice_symbolic(), model));
  CHECK(char_poly(sp4_slice(Rational(1))) == GradedPolynomial<Rational>::from_weights({0, -1, 0, 0}));
  CHECK(Rational(4) * sp4_slice(Rational(0)) == sp4_triple().e);
  CHECK(centralizer_dim(sp4_slice(Rational(0)), model) == 4);
  CHECK(centralizer_dim(sp4_slice(Rational(1)), model) == 4);
  const RationalPoly t = RationalPoly::variable();
  CHECK(char_poly(sp4_slice_symbolic()) ==
        GradedPolynomial<RationalPoly>::from_weights({RationalPoly(), -(t * t), RationalPoly(), RationalPoly()}));
  CHECK(verify_sp4_slice(SliceVariant::Corrected).all_ok());
}

TEST_CASE("sp4 flip action") {
  CHECK(sp4_flip_action(Rational(1)) == sp4_slice(Rational(-1)));
  CHECK(sp4_flip_action(Rational(0)) == sp4_slice(Rational(0)));
  CHECK(sp4_flip_action_symbolic() == negate_parameter(sp4_slice_symbolic()));
  const RationalMatrix s = sp4_flip_generator();
  const RationalMatrix j = sp4_gram();
  CHECK(s.transpose() * j * s == j);
}

TEST_CASE("sp4 slice, as printed") {
  const auto cp = char_poly(sp4_slice(Rational(1), SliceVariant::AsPrinted));
  CHECK(cp.weight_coefficient(4) == Rational(9, 256));
  CHECK(cp.weight_coefficient(2) == Rational(-5, 8));
  CHECK(in_algebra(sp4_slice_symbolic(SliceVariant::AsPrinted), sp4_model()));
  const auto report = verify_sp4_slice(SliceVariant::AsPrinted);
  CHECK_FALSE(report.all_ok());
}

TEST_CASE("flag helpers") {
  CHECK(is_strictly_block_upper(RationalMatrix::unit(3, 0, 2), {1, 2, 3}));
  CHECK_FALSE(is_strictly_block_upper(RationalMatrix::unit(3, 0, 0), {1, 2, 3}));
  CHECK(is_block_diagonal(RationalMatrix::unit(3, 1, 1), {1, 2, 3}));
  CHECK_FALSE(is_block_diagonal(RationalMatrix::unit(3, 2, 0), {1, 2, 3}));
}
