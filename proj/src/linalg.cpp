#include <utility>

#include "sheet_atlas/matrix.hpp"

namespace sheet_atlas {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows clear_denominators(const std::vector<std::vector<Rational>>& rows) {
  IntRows out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Integer l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(Integer(x.get_num() * (l / x.get_den())));
    out.push_back(std::move(r));
  }
  return out;
}

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps and
// `last_pivot` is the final leading minor (the determinant for full-rank
// square input).
std::size_t bareiss(IntRows& m, int& sign, Integer& last_pivot) {
  sign = 1;
  last_pivot = 1;
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    const Integer pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = pivot * m[i][j] - lead * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

std::size_t rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  IntRows m = clear_denominators(rows);
  int sign = 1;
  Integer last;
  return bareiss(m, sign, last);
}

Rational determinant(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
  // Row scaling by l_i multiplies the determinant by l_i; undo it at the end.
  Rational scale = 1;
  for (const auto& row : rows) {
    Integer l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale *= Rational(l);
  }
  IntRows m = clear_denominators(rows);
  int sign = 1;
  Integer last;
  if (bareiss(m, sign, last) < n) return Rational(0);
  Rational det(last * sign);
  return Rational(det / scale);
}

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  RationalMatrix work = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && work(p, c) == 0) ++p;
    if (p == n) throw DomainError("matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(p, j), work(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational piv_inv = 1 / work(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) *= piv_inv;
      inv(c, j) *= piv_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || work(i, c) == 0) continue;
      const Rational f = work(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace sheet_atlas
