#pragma once

#include <string>
#include <vector>

#include "sheet_atlas/polynomial.hpp"

namespace sheet_atlas {

/// Monic polynomial lambda^d + a_1 lambda^(d-1) + ... + a_d, where a_k is
/// the coefficient of weight k. The constant 1 (d = 0) is allowed.
template <class R>
class GradedPolynomial {
 public:
  GradedPolynomial() : poly_(RingTraits<R>::one()) {}
  explicit GradedPolynomial(Polynomial<R> p) : poly_(std::move(p)) {
    if (!poly_.is_monic()) throw DomainError("graded polynomial must be monic");
  }
  /// From the weighted coefficients a_1..a_d.
  static GradedPolynomial from_weights(const std::vector<R>& a) {
    std::vector<R> asc(a.size() + 1, RingTraits<R>::zero());
    asc[a.size()] = RingTraits<R>::one();
    for (std::size_t k = 0; k < a.size(); ++k) asc[a.size() - 1 - k] = a[k];
    return GradedPolynomial(Polynomial<R>(std::move(asc)));
  }
  static GradedPolynomial one() { return {}; }
  /// lambda - root.
  static GradedPolynomial linear(const R& root) { return from_weights({R(-root)}); }

  int degree() const { return poly_.degree(); }
  const Polynomial<R>& poly() const { return poly_; }
  /// a_k, the coefficient of lambda^(d-k); a_0 = 1.
  R weight_coefficient(int k) const {
    if (k < 0 || k > degree()) throw DomainError("weight out of range");
    return poly_.coefficient(static_cast<std::size_t>(degree() - k));
  }

  GradedPolynomial pow(unsigned k) const { return GradedPolynomial(poly_.pow(k)); }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    return GradedPolynomial(a.poly_ * b.poly_);
  }
  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) { return a.poly_ == b.poly_; }
  friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) { return !(a == b); }

 private:
  Polynomial<R> poly_;
};

template <class R>
std::string to_string(const GradedPolynomial<R>& p, const std::string& var = "λ") {
  return to_string(p.poly(), var);
}

}  // namespace sheet_atlas
