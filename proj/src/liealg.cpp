#include "sheet_atlas/liealg.hpp"

namespace sheet_atlas {

ClassicalForm::ClassicalForm(FormSymmetry symmetry, RationalMatrix gram)
    : symmetry_(symmetry), gram_(std::move(gram)) {
  const RationalMatrix expected = symmetry_ == FormSymmetry::Symmetric ? gram_ : RationalMatrix(-gram_);
  if (gram_.transpose() != expected) {
    throw DomainError(symmetry_ == FormSymmetry::Symmetric ? "Gram matrix is not symmetric"
                                                           : "Gram matrix is not antisymmetric");
  }
  if (determinant(gram_) == 0) throw DomainError("Gram matrix is degenerate");
}

LieAlgebraModel gl_model(int n) {
  if (n < 1) throw DomainError("gl_n needs n >= 1");
  LieAlgebraModel model{GroupKind::gl(n), std::nullopt, {}};
  const auto d = static_cast<std::size_t>(n);
  model.basis.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) model.basis.push_back(RationalMatrix::unit(d, i, j));
  return model;
}

LieAlgebraModel form_model(const GroupKind& kind, const ClassicalForm& form) {
  kind.validate();
  const std::size_t n = form.gram().dim();
  if (static_cast<int>(n) != kind.natural_dim()) throw DomainError("Gram matrix size does not match " + to_string(kind));
  const bool want_symmetric = kind.orthogonal();
  if (kind.family == Family::A || kind.family == Family::F4) throw DomainError("form models are for B, C, D only");
  if ((form.symmetry() == FormSymmetry::Symmetric) != want_symmetric) {
    throw DomainError("form symmetry does not match " + to_string(kind));
  }
  const RationalMatrix ginv = inverse(form.gram());
  LieAlgebraModel model{kind, form, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RationalMatrix a(n);
      if (want_symmetric) {
        if (i == j) continue;
        a(i, j) = 1;
        a(j, i) = -1;
      } else {
        a(i, j) += 1;
        a(j, i) += 1;
      }
      model.basis.push_back(ginv * a);
    }
  }
  return model;
}

RationalMatrix standard_gram(const GroupKind& kind) {
  kind.validate();
  if (kind.family == Family::A || kind.family == Family::F4) throw DomainError("no bilinear form for " + to_string(kind));
  const auto n = static_cast<std::size_t>(kind.natural_dim());
  RationalMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool negate = kind.family == Family::C && i >= n / 2;
    g(i, n - 1 - i) = negate ? -1 : 1;
  }
  return g;
}

LieAlgebraModel standard_model(const GroupKind& kind) {
  if (kind.family == Family::A) return gl_model(kind.rank);
  const auto sym = kind.orthogonal() ? FormSymmetry::Symmetric : FormSymmetry::Antisymmetric;
  return form_model(kind, ClassicalForm(sym, standard_gram(kind)));
}

RationalMatrix sp4_gram() { return standard_gram(GroupKind::sp(2)); }

LieAlgebraModel sp4_model() { return standard_model(GroupKind::sp(2)); }

namespace {

void check_dims(std::size_t x_dim, const LieAlgebraModel& model) {
  if (x_dim != model.n()) {
    throw DomainError("matrix of size " + std::to_string(x_dim) + " does not live in a model on " +
                      std::to_string(model.n()) + "-space");
  }
}

}  // namespace

bool in_algebra(const RationalMatrix& x, const LieAlgebraModel& model) {
  check_dims(x.dim(), model);
  if (!model.form) return true;
  const auto& g = model.form->gram();
  return (x.transpose() * g + g * x).is_zero();
}

bool in_algebra(const ParamMatrix& x, const LieAlgebraModel& model) {
  check_dims(x.dim(), model);
  if (!model.form) return true;
  const ParamMatrix g = lift(model.form->gram());
  return (x.transpose() * g + g * x).is_zero();
}

std::size_t centralizer_dim(const RationalMatrix& x, const LieAlgebraModel& model) {
  if (!in_algebra(x, model)) throw DomainError("element is not in the Lie algebra of the model");
  const std::size_t n = x.dim();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(model.basis.size());
  for (const auto& b : model.basis) {
    const RationalMatrix c = bracket(x, b);
    std::vector<Rational> v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(c(i, j));
    rows.push_back(std::move(v));
  }
  return model.basis.size() - rank(rows);
}

}  // namespace sheet_atlas
