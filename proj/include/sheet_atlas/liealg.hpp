#pragma once

#include <optional>
#include <vector>

#include "sheet_atlas/graded_polynomial.hpp"
#include "sheet_atlas/matrix.hpp"
#include "sheet_atlas/partitions.hpp"

namespace sheet_atlas {

enum class FormSymmetry { Symmetric, Antisymmetric };

/// Non-degenerate bilinear form (v, w) = v^T G w.
class ClassicalForm {
 public:
  /// Throws DomainError if `gram` has the wrong symmetry or is singular.
  ClassicalForm(FormSymmetry symmetry, RationalMatrix gram);

  FormSymmetry symmetry() const { return symmetry_; }
  const RationalMatrix& gram() const { return gram_; }

 private:
  FormSymmetry symmetry_;
  RationalMatrix gram_;
};

/// A classical Lie algebra realised inside gl_n, with an explicit basis.
struct LieAlgebraModel {
  GroupKind kind;
  std::optional<ClassicalForm> form;
  std::vector<RationalMatrix> basis;

  std::size_t n() const { return basis.empty() ? 0 : basis.front().dim(); }
  std::size_t dim() const { return basis.size(); }
};

/// gl_n with the matrix-unit basis.
LieAlgebraModel gl_model(int n);

/// The algebra {X : X^T G + G X = 0} preserving `form`, with basis G^{-1} A
/// for A running over elementary (anti)symmetric matrices.
LieAlgebraModel form_model(const GroupKind& kind, const ClassicalForm& form);

/// Antidiagonal Gram matrix for the kind: all ones for B/D; for C, +1 in the
/// upper half and -1 in the lower half (so C2 gives the J used for sp4).
RationalMatrix standard_gram(const GroupKind& kind);
LieAlgebraModel standard_model(const GroupKind& kind);

/// sp4 with the antidiagonal J = [[0,0,0,1],[0,0,1,0],[0,-1,0,0],[-1,0,0,0]].
RationalMatrix sp4_gram();
LieAlgebraModel sp4_model();

template <class R>
Matrix<R> bracket(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b - b * a;
}

/// X^T G + G X = 0 for B/C/D models; always true for type A.
bool in_algebra(const RationalMatrix& x, const LieAlgebraModel& model);
bool in_algebra(const ParamMatrix& x, const LieAlgebraModel& model);

/// dim of {y in g : [x, y] = 0}, by exact rank of ad(x) on the model basis.
/// Throws DomainError if x is not in the algebra.
std::size_t centralizer_dim(const RationalMatrix& x, const LieAlgebraModel& model);

namespace detail {
inline Rational divide_by(const Rational& x, long k) { return Rational(x / k); }
inline RationalPoly divide_by(const RationalPoly& x, long k) { return Rational(1, k) * x; }
}  // namespace detail

/// det(lambda I - x) by the Faddeev-LeVerrier recursion.
template <class R>
GradedPolynomial<R> char_poly(const Matrix<R>& x) {
  const std::size_t n = x.dim();
  std::vector<R> c(n + 1, RingTraits<R>::zero());
  c[n] = RingTraits<R>::one();
  Matrix<R> m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = x * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const R tr = (x * m).trace();
    c[n - k] = -detail::divide_by(tr, static_cast<long>(k));
  }
  return GradedPolynomial<R>(Polynomial<R>(std::move(c)));
}

}  // namespace sheet_atlas
