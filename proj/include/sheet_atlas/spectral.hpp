#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sheet_atlas/graded_polynomial.hpp"
#include "sheet_atlas/partitions.hpp"

namespace sheet_atlas {

/// A point (xi_1, ..., xi_s) of the S-Hitchin base of a gl_n sheet, with
/// deg xi_i = l_i. Coefficients live in R (Q, or Q[t] for a chart).
template <class R>
struct SheetBasePoint {
  MultiplicityProfile profile;
  std::vector<GradedPolynomial<R>> factors;

  /// Throws DomainError unless there are s factors and deg xi_i = l_i.
  void validate() const {
    if (static_cast<int>(factors.size()) != profile.s()) {
      throw DomainError("expected " + std::to_string(profile.s()) + " factors, got " + std::to_string(factors.size()));
    }
    for (int i = 1; i <= profile.s(); ++i) {
      const int deg = factors[static_cast<std::size_t>(i - 1)].degree();
      if (deg != profile.l(i)) {
        throw DomainError("factor xi_" + std::to_string(i) + " has degree " + std::to_string(deg) + ", profile needs l_" +
                          std::to_string(i) + " = " + std::to_string(profile.l(i)));
      }
    }
  }

  /// n = sum of i * l_i.
  int n() const { return profile.weighted_total(); }

  friend bool operator==(const SheetBasePoint& a, const SheetBasePoint& b) {
    return a.profile == b.profile && a.factors == b.factors;
  }
};

template <class R>
SheetBasePoint<R> make_base_point(MultiplicityProfile profile, std::vector<GradedPolynomial<R>> factors) {
  SheetBasePoint<R> p{std::move(profile), std::move(factors)};
  p.validate();
  return p;
}

/// xi = prod_i xi_i^i.
template <class R>
GradedPolynomial<R> mu_s(const SheetBasePoint<R>& p) {
  p.validate();
  GradedPolynomial<R> out;
  for (std::size_t i = 0; i < p.factors.size(); ++i) out = out * p.factors[i].pow(static_cast<unsigned>(i + 1));
  return out;
}

/// prod_i xi_i, each factor once.
template <class R>
GradedPolynomial<R> min_poly(const SheetBasePoint<R>& p) {
  p.validate();
  GradedPolynomial<R> out;
  for (const auto& f : p.factors) out = out * f;
  return out;
}

/// Every xi_i is squarefree.
template <class R>
bool in_heart(const SheetBasePoint<R>& p) {
  p.validate();
  for (const auto& f : p.factors) {
    if (!is_squarefree(f.poly())) return false;
  }
  return true;
}

/// The two points ((λ-a)^2, λ+a) and ((λ+a)^2, λ-a) over m = (2,1,1), which
/// share the image (λ-a)^2 (λ+a)^2. Throws DomainError for a = 0.
template <class R>
std::pair<SheetBasePoint<R>, SheetBasePoint<R>> witness_noninjectivity(const R& a) {
  if (a == RingTraits<R>::zero()) throw DomainError("witness_noninjectivity needs a != 0");
  const R minus_a = -a;
  const auto lm = GradedPolynomial<R>::linear(a);
  const auto lp = GradedPolynomial<R>::linear(minus_a);
  const MultiplicityProfile prof = profile(Partition({2, 1, 1}));
  auto first = make_base_point<R>(prof, {lm.pow(2), lp});
  auto second = make_base_point<R>(prof, {lp.pow(2), lm});
  if (mu_s(first) != mu_s(second)) throw std::logic_error("witness points have different images");
  if (in_heart(first) || in_heart(second)) throw std::logic_error("witness points lie in the heart");
  return {std::move(first), std::move(second)};
}

/// λ^4 - b^2 λ^2.
template <class R>
GradedPolynomial<R> sp4_dix_image(const R& b) {
  const R zero = RingTraits<R>::zero();
  return GradedPolynomial<R>::from_weights({zero, R(-(b * b)), zero, zero});
}

/// Parses one monic factor written as coefficients, highest degree first:
/// "1,0,-4" is λ^2 - 4 and "1" is the constant 1.
GradedPolynomial<Rational> parse_factor(const std::string& text);

/// Factors separated by ';', e.g. "1;1,0,-4".
std::vector<GradedPolynomial<Rational>> parse_factors(const std::string& text);

extern template GradedPolynomial<Rational> mu_s(const SheetBasePoint<Rational>&);
extern template GradedPolynomial<RationalPoly> mu_s(const SheetBasePoint<RationalPoly>&);

}  // namespace sheet_atlas
