#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sheet_atlas/matrix.hpp"
#include "sheet_atlas/partitions.hpp"
#include "sheet_atlas/polynomial.hpp"
#include "sheet_atlas/sheets.hpp"

namespace oracle {

using namespace sheet_atlas;

/// Laplace expansion along the first row.
template <class P>
P cofactor_det(const std::vector<std::vector<P>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return RingTraits<P>::one();
  if (n == 1) return m[0][0];
  P total = RingTraits<P>::zero();
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == RingTraits<P>::zero()) continue;
    std::vector<std::vector<P>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<P> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const P term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

/// det(λI - A) with λ adjoined over the entry ring.
template <class R>
Polynomial<R> char_poly_cofactor(const Matrix<R>& a) {
  using P = Polynomial<R>;
  const std::size_t n = a.dim();
  std::vector<std::vector<P>> m(n, std::vector<P>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = P(R(-a(i, j)));
      if (i == j) m[i][j] += P::variable();
    }
  return cofactor_det(m);
}

inline Integer int_factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Collapse to the nearest partition obeying the parity rule of the kind:
/// repeatedly lower the last occurrence of the largest offending part and
/// raise the next part that is at least two smaller.
inline Partition collapse(std::vector<int> parts, bool orthogonal) {
  const int bad = orthogonal ? 0 : 1;
  for (;;) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    int offender = 0;
    for (int v : parts) {
      if (v > 0 && v % 2 == bad && std::count(parts.begin(), parts.end(), v) % 2 == 1) {
        offender = v;
        break;
      }
    }
    if (offender == 0) break;
    std::size_t last = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] == offender) last = i;
    }
    parts[last] -= 1;
    std::size_t j = last + 1;
    while (j < parts.size() && parts[j] >= offender - 1) ++j;
    if (j == parts.size()) parts.push_back(0);
    parts[j] += 1;
  }
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  return Partition(parts);
}

/// Partition of the orbit induced from the zero orbit of GL_a x G(residual).
inline Partition induced_from_zero(const GroupKind& kind, int a, int residual) {
  const int q = kind.family == Family::C ? 2 * residual : residual;
  std::vector<int> parts(static_cast<std::size_t>(std::max(a, q)), 0);
  for (int i = 0; i < q; ++i) parts[static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < a; ++i) parts[static_cast<std::size_t>(i)] += 2;
  return collapse(parts, kind.orthogonal());
}

/// |N_W(L)/W_L| by brute force: the number of Weyl images of a generic
/// central element that stay in the centre.
inline int relative_weyl_order(const GroupKind& kind, const LeviLabel& levi) {
  if (kind.family == Family::A) {
    std::vector<int> z;
    const auto& m = levi.gl_parts.parts();
    for (std::size_t b = 0; b < m.size(); ++b) z.insert(z.end(), static_cast<std::size_t>(m[b]), static_cast<int>(b) + 1);
    std::vector<int> w = z;
    std::sort(w.begin(), w.end());
    int count = 0;
    do {
      bool central = true;
      std::size_t start = 0;
      for (int size : m) {
        for (std::size_t k = start; k < start + static_cast<std::size_t>(size); ++k) central = central && w[k] == w[start];
        start += static_cast<std::size_t>(size);
      }
      count += central ? 1 : 0;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
  }
  const int r = kind.rank;
  std::vector<int> z(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < levi.a; ++i) z[static_cast<std::size_t>(i)] = 1;
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> images;
  do {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      if (kind.family == Family::D && __builtin_popcount(mask) % 2 == 1) continue;
      std::vector<int> w(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) {
        const int sign = (mask >> i) & 1u ? -1 : 1;
        w[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = sign * z[static_cast<std::size_t>(i)];
      }
      images.insert(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> minus = z;
  for (auto& x : minus) x = -x;
  return static_cast<int>(images.count(z) + images.count(minus));
}

/// Yun's squarefree decomposition: f = prod a_i^i with a_i squarefree and
/// pairwise coprime. Returns a_1, ..., a_k (trailing factor non-constant).
inline std::vector<RationalPoly> recover_tuple(const RationalPoly& f) {
  std::vector<RationalPoly> out;
  const RationalPoly one(Rational(1));
  if (f.degree() <= 0) return out;
  const RationalPoly a0 = gcd(f, f.derivative());
  RationalPoly b = exact_quotient(f, a0);
  RationalPoly c = exact_quotient(f.derivative(), a0);
  RationalPoly d = c - b.derivative();
  while (b.degree() > 0) {
    const RationalPoly a = gcd(b, d);
    out.push_back(a);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rational small_rational() { return Rational(uniform(-9, 9)) / uniform(1, 4); }
};

inline Partition random_partition(Rng& rng, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int p = rng.uniform(1, left);
    parts.push_back(p);
    left -= p;
  }
  return Partition(parts);
}

/// Jordan matrix in gl_n with blocks of the given sizes (1 on the superdiagonal).
inline RationalMatrix jordan_nilpotent(const Partition& p) {
  RationalMatrix m(static_cast<std::size_t>(p.n()));
  std::size_t start = 0;
  for (int size : p.parts()) {
    for (int k = 0; k + 1 < size; ++k) m(start + static_cast<std::size_t>(k), start + static_cast<std::size_t>(k) + 1) = 1;
    start += static_cast<std::size_t>(size);
  }
  return m;
}

/// Number of partitions of n by the pentagonal recurrence.
inline long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    long s = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const long sign = j % 2 == 1 ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(k - g1)];
      if (g2 <= k) s += sign * p[static_cast<std::size_t>(k - g2)];
    }
    p[static_cast<std::size_t>(k)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace oracle
