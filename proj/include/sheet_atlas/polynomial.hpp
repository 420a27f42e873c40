#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sheet_atlas/rational.hpp"

namespace sheet_atlas {

template <class R>
class Polynomial;

/// Zero, one, field-ness and scalar formatting for the coefficient tower
/// Q, Q[t], Q[t][x].
template <class R>
struct RingTraits {
  static R zero() { return R(0); }
  static R one() { return R(1); }
  static R from_int(long v) { return R(v); }
  static constexpr bool is_field = true;
};

template <class S>
struct RingTraits<Polynomial<S>> {
  static Polynomial<S> zero() { return {}; }
  static Polynomial<S> one() { return Polynomial<S>(RingTraits<S>::one()); }
  static Polynomial<S> from_int(long v) { return Polynomial<S>(RingTraits<S>::from_int(v)); }
  static constexpr bool is_field = false;
};

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;
  explicit Polynomial(R constant) {
    coeffs_.push_back(std::move(constant));
    trim();
  }
  explicit Polynomial(std::vector<R> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial variable() { return monomial(RingTraits<R>::one(), 1); }
  static Polynomial monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, RingTraits<R>::zero());
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && leading() == RingTraits<R>::one(); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  R coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : RingTraits<R>::zero(); }
  const R& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingTraits<R>::zero());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingTraits<R>::zero());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == RingTraits<R>::zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const R& s, Polynomial a) {
    for (auto& c : a.coeffs_) c = s * c;
    a.trim();
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const {
    Polynomial result(RingTraits<R>::one());
    Polynomial base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(RingTraits<R>::from_int(static_cast<long>(k)) * coeffs_[k]);
    return Polynomial(std::move(out));
  }

  /// Horner evaluation at a point of any ring containing R.
  template <class S>
  S evaluate(const S& x) const {
    S acc = RingTraits<S>::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }
  R evaluate(const R& x) const {
    R acc = RingTraits<R>::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = R(acc * x + *it);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == RingTraits<R>::zero()) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

/// Exact quotient a/b in the coefficient tower; throws if b does not divide a.
inline Rational exact_quotient(const Rational& a, const Rational& b) {
  if (b == 0) throw DomainError("division by zero");
  return Rational(a / b);
}

template <class R>
Polynomial<R> exact_quotient(const Polynomial<R>& a, const Polynomial<R>& b);

/// Long division. Requires the leading coefficient of b to divide every
/// leading coefficient met along the way (always true over a field or for
/// monic b). Returns {quotient, remainder}.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<R> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<R>{}, a};
  std::vector<R> quot(static_cast<std::size_t>(a.degree() - db + 1), RingTraits<R>::zero());
  for (int k = a.degree(); k >= db; --k) {
    const R& top = rem[static_cast<std::size_t>(k)];
    if (top == RingTraits<R>::zero()) continue;
    R c = exact_quotient(top, b.leading());
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coefficients()[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(k - db)] = std::move(c);
  }
  return {Polynomial<R>(std::move(quot)), Polynomial<R>(std::move(rem))};
}

template <class R>
Polynomial<R> exact_quotient(const Polynomial<R>& a, const Polynomial<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
Polynomial<R> pseudo_remainder(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw DomainError("pseudo-division by zero");
  Polynomial<R> r = a;
  const int db = b.degree();
  const Polynomial<R> lc(b.leading());
  int steps = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const Polynomial<R> shift = Polynomial<R>::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db));
    r = lc * r - shift * b;
    --steps;
  }
  for (; steps > 0; --steps) r = lc * r;
  return r;
}

template <class R>
Polynomial<R> gcd(const Polynomial<R>& a, const Polynomial<R>& b);
template <class R>
Polynomial<R> primitive_part(const Polynomial<R>& p);
template <class R>
Polynomial<R> normalize_unit(const Polynomial<R>& p);

inline Rational gcd_coefficient(const Rational& a, const Rational& b) {
  // Over a field every nonzero element is a unit.
  return (a == 0 && b == 0) ? Rational(0) : Rational(1);
}

template <class S>
Polynomial<S> gcd_coefficient(const Polynomial<S>& a, const Polynomial<S>& b) {
  return gcd(a, b);
}

template <class R>
R content(const Polynomial<R>& p) {
  R c = RingTraits<R>::zero();
  for (const auto& x : p.coefficients()) c = gcd_coefficient(c, x);
  return c;
}

/// Greatest common divisor. Over a field the result is monic; over Q[t] the
/// primitive Euclidean remainder sequence is used and the result is
/// normalised so that its leading coefficient is monic in t.
template <class R>
Polynomial<R> gcd(const Polynomial<R>& a, const Polynomial<R>& b) {
  if constexpr (RingTraits<R>::is_field) {
    Polynomial<R> x = a, y = b;
    while (!y.is_zero()) {
      auto r = divmod(x, y).second;
      x = std::move(y);
      y = std::move(r);
    }
    if (x.is_zero()) return x;
    const R inv = R(RingTraits<R>::one() / x.leading());
    return inv * x;
  } else {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    const R ca = content(a), cb = content(b);
    const R c = gcd_coefficient(ca, cb);
    Polynomial<R> x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
      auto r = pseudo_remainder(x, y);
      x = std::move(y);
      y = r.is_zero() ? r : primitive_part(r);
    }
    return normalize_unit(c * x);
  }
}

template <class R>
Polynomial<R> primitive_part(const Polynomial<R>& p) {
  if (p.is_zero()) return p;
  const R c = content(p);
  std::vector<R> out;
  out.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) out.push_back(exact_quotient(x, c));
  return Polynomial<R>(std::move(out));
}

/// Scales by a unit of the coefficient ring so the result is canonical.
template <class R>
Polynomial<R> normalize_unit(const Polynomial<R>& p) {
  if (p.is_zero()) return p;
  if constexpr (RingTraits<R>::is_field) {
    return R(RingTraits<R>::one() / p.leading()) * p;
  } else {
    // Units of Q[t] are the nonzero rationals.
    const auto& lc = p.leading();
    using S = typename R::coefficient_type;
    const S inv = S(RingTraits<S>::one() / lc.leading());
    return R(inv) * p;
  }
}

/// True iff gcd(p, p') is a unit, i.e. p has no repeated factor.
template <class R>
bool is_squarefree(const Polynomial<R>& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace detail {

inline std::string coefficient_text(const Rational& c, bool& is_atom) {
  is_atom = true;
  return c.get_str();
}

template <class S>
std::string coefficient_text(const Polynomial<S>& c, bool& is_atom);

}  // namespace detail

/// Human-readable form, highest degree first: "x^2 - 1/2*x + 3".
template <class R>
std::string to_string(const Polynomial<R>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const R& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == RingTraits<R>::zero()) continue;
    bool atom = true;
    std::string text = detail::coefficient_text(c, atom);
    bool negative = atom && !text.empty() && text[0] == '-';
    if (negative) text.erase(0, 1);
    if (!atom) text = "(" + text + ")";
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = atom && text == "1";
    if (k == 0) {
      os << text;
    } else {
      if (!unit) os << text << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace detail {

template <class S>
std::string coefficient_text(const Polynomial<S>& c, bool& is_atom) {
  is_atom = c.degree() <= 0 || (c.coefficients().size() > 0 && [&] {
              int nonzero = 0;
              for (const auto& x : c.coefficients()) nonzero += x == RingTraits<S>::zero() ? 0 : 1;
              return nonzero == 1;
            }());
  return to_string(c, "t");
}

}  // namespace detail

}  // namespace sheet_atlas
