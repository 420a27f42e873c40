#include "sheet_atlas/hitchin.hpp"

#include <algorithm>

namespace sheet_atlas {

namespace {

void check_genus(int g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + std::to_string(g));
}

}  // namespace

CurveParams::CurveParams(int g, Twist t) : genus(g), twist(t) { check_genus(g); }

int h0_canonical_power(int g, int j) {
  check_genus(g);
  if (j < 1) throw DomainError("h0(K^j) needs j >= 1");
  return j == 1 ? g : (2 * j - 1) * (g - 1);
}

int dim_s_hitchin_base_gln(const Partition& m, int g) {
  check_genus(g);
  const auto prof = profile(m);
  int total = 0;
  for (int i = 1; i <= prof.s(); ++i)
    for (int j = 1; j <= prof.l(i); ++j) total += h0_canonical_power(g, j);
  return total;
}

int dim_hitchin_base_sp4(int g) { return h0_canonical_power(g, 2) + h0_canonical_power(g, 4); }

int dim_s_hitchin_base_sp4_dix(int g) { return h0_canonical_power(g, 1); }

std::vector<int> fundamental_degrees(const GroupKind& kind) {
  kind.validate();
  std::vector<int> out;
  switch (kind.family) {
    case Family::A:
      for (int i = 1; i <= kind.rank; ++i) out.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= kind.rank; ++i) out.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < kind.rank; ++i) out.push_back(2 * i);
      out.push_back(kind.rank);
      std::sort(out.begin(), out.end());
      break;
    case Family::F4: out = {2, 6, 8, 12}; break;
  }
  return out;
}

int dim_hitchin_base(const GroupKind& kind, int g) {
  int total = 0;
  for (int d : fundamental_degrees(kind)) total += h0_canonical_power(g, d);
  return total;
}

SliceWeights slice_weights(const SheetDescriptor& s) {
  SliceWeights w;
  if (s.levi.type == LeviLabel::Type::GL) {
    const auto prof = profile(s.levi.gl_parts);
    for (int i = 1; i <= prof.s(); ++i)
      for (int j = 1; j <= prof.l(i); ++j) w.weights.push_back(j);
    std::sort(w.weights.begin(), w.weights.end());
    return w;
  }
  if (s.dim_z == 0) return w;
  if (s.kind == GroupKind::sp(2) && s.levi.type == LeviLabel::Type::Torus) {
    w.weights = fundamental_degrees(s.kind);
    return w;
  }
  if (s.dim_z == 1) {
    if (s.w_s_order == 1) w.weights = {1};
    else if (s.w_s_order == 2) w.weights = {2};
    else throw DomainError("no weight rule for |W_S| = " + s.w_s_order.get_str());
    return w;
  }
  throw DomainError("slice weights are not known for sheet " + s.id);
}

int dim_from_weights(const SliceWeights& w, int g) {
  check_genus(g);
  int total = 0;
  for (int e : w.weights) total += h0_canonical_power(g, e);
  return total;
}

Integer component_count(int katsylo_order, int g) {
  check_genus(g);
  if (katsylo_order == 1) return 1;
  if (katsylo_order == 2) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(2 * g));
    return r;
  }
  throw DomainError("component_count supports |F| in {1, 2}, got " + std::to_string(katsylo_order));
}

Integer s_cameral_degree(const SheetDescriptor& s) {
  if (!s.dixmier) throw DomainError("S-cameral degree is defined for Dixmier sheets; " + s.id + " is not Dixmier");
  return s.w_s_order * s.katsylo_order;
}

}  // namespace sheet_atlas
