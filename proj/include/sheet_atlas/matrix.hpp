#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sheet_atlas/polynomial.hpp"
#include "sheet_atlas/rational.hpp"

namespace sheet_atlas {

/// Square matrix over an exact commutative ring, row-major.
template <class R>
class Matrix {
 public:
  using value_type = R;

  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, RingTraits<R>::zero()) {}
  Matrix(std::initializer_list<std::initializer_list<R>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DomainError("matrix literal is not square");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = RingTraits<R>::one();
    return m;
  }
  /// Matrix unit E_{ij}.
  static Matrix unit(std::size_t dim, std::size_t i, std::size_t j) {
    Matrix m(dim);
    m(i, j) = RingTraits<R>::one();
    return m;
  }
  static Matrix diagonal(const std::vector<R>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const { return dim_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (x != RingTraits<R>::zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  R trace() const {
    R s = RingTraits<R>::zero();
    for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const R& s, Matrix a) {
    for (auto& x : a.data_) x = R(s * x);
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const R& aik = a(i, k);
        if (aik == RingTraits<R>::zero()) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (o.dim_ != dim_) {
      throw DomainError("matrix dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
    }
  }

  std::size_t dim_ = 0;
  std::vector<R> data_;
};

using RationalMatrix = Matrix<Rational>;
/// Matrices whose entries are polynomials in a formal parameter t.
using ParamMatrix = Matrix<RationalPoly>;

/// Embeds a rational matrix into the polynomial-entry ring.
inline ParamMatrix lift(const RationalMatrix& m) {
  ParamMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = RationalPoly(m(i, j));
  return out;
}

/// Substitutes t := value into every entry.
inline RationalMatrix substitute(const ParamMatrix& m, const Rational& value) {
  RationalMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).evaluate(value);
  return out;
}

/// Rank of a rectangular rational matrix (list of rows) by fraction-free
/// Bareiss elimination over the integers after clearing row denominators.
std::size_t rank(const std::vector<std::vector<Rational>>& rows);

/// Determinant by fraction-free elimination.
Rational determinant(const RationalMatrix& m);

/// Inverse by Gauss-Jordan elimination; throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace sheet_atlas
