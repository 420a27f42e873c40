#include "sheet_atlas/triples.hpp"

#include <map>
#include <stdexcept>

namespace sheet_atlas {

namespace {

std::size_t block_of(std::size_t index, const std::vector<int>& flag_dims) {
  for (std::size_t b = 0; b < flag_dims.size(); ++b) {
    if (index < static_cast<std::size_t>(flag_dims[b])) return b;
  }
  return flag_dims.size();
}

Rational trace_on_prefix(const RationalMatrix& x, int k) {
  Rational s = 0;
  for (int i = 0; i < k; ++i) s += x(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  return s;
}

}  // namespace

bool is_strictly_block_upper(const RationalMatrix& x, const std::vector<int>& flag_dims) {
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) {
      if (x(r, c) != 0 && block_of(r, flag_dims) >= block_of(c, flag_dims)) return false;
    }
  return true;
}

bool is_block_diagonal(const RationalMatrix& x, const std::vector<int>& flag_dims) {
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) {
      if (x(r, c) != 0 && block_of(r, flag_dims) != block_of(c, flag_dims)) return false;
    }
  return true;
}

JordanBasisPlan plan_jordan_basis(const GroupKind& kind, const LeviLabel& levi) {
  if (kind.family != Family::B && kind.family != Family::C && kind.family != Family::D) {
    throw DomainError("Jordan basis plans are for B, C, D");
  }
  const SheetDescriptor sheet = maximal_levi_sheet(kind, levi);
  JordanBasisPlan plan;
  plan.kind = kind;
  plan.orbit = std::get<Partition>(sheet.nilpotent_orbit);
  plan.a = levi.a;
  const int chains = static_cast<int>(plan.orbit.length());
  const int eps = kind.orthogonal() ? 1 : -1;
  const bool type1 = sheet.type_tag == SheetType::Type1;
  if (plan.a > chains || (type1 && plan.a + 1 > chains)) {
    throw std::logic_error("orbit " + to_string(plan.orbit) + " has too few Jordan chains for a = " + std::to_string(plan.a));
  }
  auto len = [&](int j) { return plan.orbit[static_cast<std::size_t>(j)]; };
  auto sign_factor = [&](int j) { return eps * (len(j) % 2 == 1 ? 1 : -1); };

  plan.beta.assign(static_cast<std::size_t>(chains), -1);
  plan.signs.assign(static_cast<std::size_t>(chains), Rational(0));
  for (int j = 0; j < chains; ++j) {
    if (plan.beta[static_cast<std::size_t>(j)] >= 0) continue;
    const bool forced_pair = type1 && j == plan.a - 1;
    if (!forced_pair && sign_factor(j) == 1) {
      plan.beta[static_cast<std::size_t>(j)] = j;
      plan.signs[static_cast<std::size_t>(j)] = 1;
      continue;
    }
    const int k = j + 1;
    if (k >= chains || len(k) != len(j) || plan.beta[static_cast<std::size_t>(k)] >= 0) {
      throw std::logic_error("no partner chain for chain " + std::to_string(j + 1) + " of " + to_string(plan.orbit));
    }
    plan.beta[static_cast<std::size_t>(j)] = k;
    plan.beta[static_cast<std::size_t>(k)] = j;
    plan.signs[static_cast<std::size_t>(j)] = 1;
    plan.signs[static_cast<std::size_t>(k)] = sign_factor(j);
  }

  std::vector<ChainVector> plus, minus, middle;
  for (int j = 0; j < plan.a; ++j) {
    plus.push_back({1, j});
    const int b = plan.beta[static_cast<std::size_t>(j)];
    minus.push_back({len(b), b});
  }
  auto contains = [](const std::vector<ChainVector>& v, const ChainVector& x) {
    for (const auto& y : v) {
      if (y == x) return true;
    }
    return false;
  };
  for (const auto& v : plus) {
    if (contains(minus, v)) throw std::logic_error("V+ and V- overlap in the plan for " + to_string(plan.orbit));
  }
  for (int j = 0; j < chains; ++j)
    for (int i = 1; i <= len(j); ++i) {
      const ChainVector v{i, j};
      if (!contains(plus, v) && !contains(minus, v)) middle.push_back(v);
    }
  plan.order = plus;
  plan.order.insert(plan.order.end(), middle.begin(), middle.end());
  plan.order.insert(plan.order.end(), minus.begin(), minus.end());
  const int n = plan.orbit.n();
  plan.flag_dims = {plan.a, n - plan.a, n};
  return plan;
}

namespace {

std::map<std::pair<int, int>, std::size_t> position_map(const JordanBasisPlan& plan) {
  std::map<std::pair<int, int>, std::size_t> pos;
  for (std::size_t p = 0; p < plan.order.size(); ++p) pos[{plan.order[p].i, plan.order[p].j}] = p;
  return pos;
}

}  // namespace

RationalMatrix plan_gram(const JordanBasisPlan& plan) {
  const auto pos = position_map(plan);
  RationalMatrix g(plan.order.size());
  for (std::size_t p = 0; p < plan.order.size(); ++p) {
    const auto [i, j] = plan.order[p];
    const int nj = plan.orbit[static_cast<std::size_t>(j)];
    const int b = plan.beta[static_cast<std::size_t>(j)];
    const Rational sign = (i % 2 == 1 ? 1 : -1) * plan.signs[static_cast<std::size_t>(j)];
    g(p, pos.at({nj + 1 - i, b})) = sign;
  }
  return g;
}

Sl2Triple build_gl_triple(int m1, int m2) {
  if (m2 < 1 || m1 < m2) throw DomainError("build_gl_triple needs m1 >= m2 >= 1");
  const int n = m1 + m2;
  if (n > 20) throw DomainError("build_gl_triple supports m1 + m2 <= 20");
  const auto d = static_cast<std::size_t>(n);
  Sl2Triple t;
  t.model = gl_model(n);
  t.e = RationalMatrix(d);
  t.f = RationalMatrix(d);
  // 1-based: e v_j = v_{j-m1} for j > m1, f v_j = v_{j+m1} for j <= m2.
  for (int j = m1 + 1; j <= n; ++j) t.e(static_cast<std::size_t>(j - m1 - 1), static_cast<std::size_t>(j - 1)) = 1;
  for (int j = 1; j <= m2; ++j) t.f(static_cast<std::size_t>(j + m1 - 1), static_cast<std::size_t>(j - 1)) = 1;
  t.h = bracket(t.e, t.f);
  t.flag_dims = {m1, n};
  const Rational first = trace_on_prefix(t.h, m1);
  const Rational second = t.h.trace() - first;
  t.abelianization_value = m2 * first - m1 * second;
  if (m1 > m2) {
    t.h_prime = RationalMatrix::unit(d, static_cast<std::size_t>(m2), static_cast<std::size_t>(m2));
    const Rational hp_first = trace_on_prefix(*t.h_prime, m1);
    t.h_prime_value = m2 * hp_first - m1 * (t.h_prime->trace() - hp_first);
  }
  return t;
}

Sl2Triple build_bcd_triple(const GroupKind& kind, const LeviLabel& levi) {
  if (kind.natural_dim() > 16) throw DomainError("build_bcd_triple supports n <= 16");
  const JordanBasisPlan plan = plan_jordan_basis(kind, levi);
  const auto pos = position_map(plan);
  const auto sym = kind.orthogonal() ? FormSymmetry::Symmetric : FormSymmetry::Antisymmetric;
  Sl2Triple t;
  t.model = form_model(kind, ClassicalForm(sym, plan_gram(plan)));
  const std::size_t d = plan.order.size();
  t.e = RationalMatrix(d);
  t.h = RationalMatrix(d);
  t.f = RationalMatrix(d);
  for (std::size_t p = 0; p < d; ++p) {
    const auto [i, j] = plan.order[p];
    const int nj = plan.orbit[static_cast<std::size_t>(j)];
    if (i > 1) t.e(pos.at({i - 1, j}), p) = 1;
    t.h(p, p) = nj - 2 * i + 1;
    if (i < nj) t.f(pos.at({i + 1, j}), p) = i * (nj - i);
  }
  t.flag_dims = plan.flag_dims;
  t.abelianization_value = trace_on_prefix(t.h, plan.a);
  if (maximal_levi_sheet(kind, levi).type_tag == SheetType::Type1) {
    RationalMatrix hp(d);
    for (std::size_t p = 0; p < d; ++p) {
      if (plan.order[p].j == plan.a - 1) hp(p, p) = 1;
      if (plan.order[p].j == plan.a) hp(p, p) = -1;
    }
    t.h_prime_value = trace_on_prefix(hp, plan.a);
    t.h_prime = std::move(hp);
  }
  return t;
}

Sl2Triple sp4_triple() {
  Sl2Triple t;
  t.model = sp4_model();
  t.e = RationalMatrix::unit(4, 0, 2) + RationalMatrix::unit(4, 1, 3);
  t.h = RationalMatrix::diagonal({1, 1, -1, -1});
  t.f = RationalMatrix::unit(4, 2, 0) + RationalMatrix::unit(4, 3, 1);
  // Parabolic of the Levi G_m x Sp_2: V+ = <b1>, W = <b2, b3>, V- = <b4>.
  t.flag_dims = {1, 3, 4};
  t.abelianization_value = trace_on_prefix(t.h, 1);
  t.h_prime = RationalMatrix::diagonal({1, -1, 1, -1});
  t.h_prime_value = trace_on_prefix(*t.h_prime, 1);
  return t;
}

ParamMatrix sp4_slice_symbolic(SliceVariant v) {
  const RationalPoly t = RationalPoly::variable();
  const RationalPoly one(Rational(1));
  const RationalPoly c = (v == SliceVariant::Corrected ? Rational(4) : Rational(1)) * (t * t);
  const RationalPoly zero;
  const RationalPoly two_t = Rational(2) * t;
  ParamMatrix x{{two_t, zero, one, zero}, {zero, -two_t, zero, one}, {c, zero, two_t, zero}, {zero, c, zero, -two_t}};
  return RationalPoly(Rational(1, 4)) * x;
}

RationalMatrix sp4_slice(const Rational& t, SliceVariant v) { return substitute(sp4_slice_symbolic(v), t); }

RationalMatrix sp4_flip_generator() {
  return RationalMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

ParamMatrix negate_parameter(const ParamMatrix& m) {
  ParamMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      std::vector<Rational> c = m(i, j).coefficients();
      for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
      out(i, j) = RationalPoly(std::move(c));
    }
  return out;
}

ParamMatrix sp4_flip_action_symbolic(SliceVariant v) {
  const RationalMatrix s = sp4_flip_generator();
  const ParamMatrix image = lift(s) * sp4_slice_symbolic(v) * lift(inverse(s));
  if (image != negate_parameter(sp4_slice_symbolic(v))) throw std::logic_error("Ad_s(x_t) differs from x_{-t}");
  return image;
}

RationalMatrix sp4_flip_action(const Rational& t, SliceVariant v) {
  const RationalMatrix s = sp4_flip_generator();
  const RationalMatrix image = s * sp4_slice(t, v) * inverse(s);
  if (image != sp4_slice(-t, v)) throw std::logic_error("Ad_s(x_t) differs from x_{-t} at t = " + to_short_string(t));
  return image;
}

bool VerificationReport::all_ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

VerificationReport verify_triple(const std::string& subject, const Sl2Triple& t, std::optional<SheetType> type,
                                 std::optional<int> expected_d) {
  VerificationReport r;
  r.subject = subject;
  r.add("[h,e] = 2e", bracket(t.h, t.e) == Rational(2) * t.e);
  r.add("[h,f] = -2f", bracket(t.h, t.f) == Rational(-2) * t.f);
  r.add("[e,f] = h", bracket(t.e, t.f) == t.h);
  r.add("e in g", in_algebra(t.e, t.model));
  r.add("h in g", in_algebra(t.h, t.model));
  r.add("f in g", in_algebra(t.f, t.model));
  r.add("e in nilradical of the flag", is_strictly_block_upper(t.e, t.flag_dims));
  r.add("h in Levi", is_block_diagonal(t.h, t.flag_dims));
  r.add("abelianisation of h nonzero", t.abelianization_value != 0, "value " + to_short_string(t.abelianization_value));
  if (type == SheetType::Type1) {
    const bool present = t.h_prime.has_value();
    r.add("h' present", present);
    if (present) {
      r.add("[h',e] = 0", bracket(*t.h_prime, t.e).is_zero());
      r.add("h' in g", in_algebra(*t.h_prime, t.model));
      r.add("h' in Levi", is_block_diagonal(*t.h_prime, t.flag_dims));
      r.add("abelianisation of h' nonzero", t.h_prime_value && *t.h_prime_value != 0,
            "value " + (t.h_prime_value ? to_short_string(*t.h_prime_value) : std::string("none")));
    }
  }
  if (expected_d) {
    const auto d = static_cast<int>(centralizer_dim(t.e, t.model));
    r.add("dim c_g(e) = dim L", d == *expected_d,
          "centraliser " + std::to_string(d) + ", expected " + std::to_string(*expected_d));
  }
  return r;
}

VerificationReport verify_sp4_slice(SliceVariant v) {
  VerificationReport r;
  r.subject = v == SliceVariant::Corrected ? "sp4 slice x_t" : "sp4 slice x_t (entry t^2)";
  const ParamMatrix x = sp4_slice_symbolic(v);
  const LieAlgebraModel sp4 = sp4_model();
  r.add("x_t in sp4 (symbolic t)", in_algebra(x, sp4));

  const RationalPoly t = RationalPoly::variable();
  const auto expected = GradedPolynomial<RationalPoly>::from_weights({RationalPoly(), -(t * t), RationalPoly(), RationalPoly()});
  const auto cp = char_poly(x);
  r.add("char poly = λ^4 - t^2 λ^2 (symbolic t)", cp == expected, "got " + to_string(cp));

  for (const Rational& value : {Rational(-2), Rational(-1, 2), Rational(1), Rational(2), Rational(3)}) {
    const auto want = GradedPolynomial<Rational>::from_weights({0, Rational(-value * value), 0, 0});
    const auto got = char_poly(sp4_slice(value, v));
    r.add("char poly at t = " + to_short_string(value), got == want, "got " + to_string(got));
  }

  const Sl2Triple tr = sp4_triple();
  r.add("x_0 = e/4", sp4_slice(0, v) == Rational(1, 4) * tr.e);

  const RationalMatrix s = sp4_flip_generator();
  r.add("s in Sp4", s.transpose() * sp4_gram() * s == sp4_gram());
  r.add("Ad_s(x_t) = x_{-t} (symbolic t)", lift(s) * x * lift(inverse(s)) == negate_parameter(x));

  // F = Z/2 acts on the slice by t -> -t; its stabiliser is trivial away from
  // t = 0 exactly when the roots of the char poly in λ^2 stay distinct.
  const RationalPoly a2 = cp.weight_coefficient(2);
  const RationalPoly a4 = cp.weight_coefficient(4);
  const RationalPoly disc = a2 * a2 - Rational(4) * a4;
  bool monomial = disc.degree() >= 1;
  for (int k = 0; k < disc.degree(); ++k) monomial = monomial && disc.coefficient(static_cast<std::size_t>(k)) == 0;
  r.add("discriminant in λ^2 vanishes only at t = 0", monomial, "discriminant " + to_string(disc, "t"));

  const auto d1 = static_cast<int>(centralizer_dim(sp4_slice(1, v), sp4));
  r.add("dim c_g(x_1) = 4", d1 == 4, "centraliser " + std::to_string(d1));
  return r;
}

}  // namespace sheet_atlas
