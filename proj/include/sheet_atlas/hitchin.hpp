#pragma once

#include <vector>

#include "sheet_atlas/partitions.hpp"
#include "sheet_atlas/rational.hpp"
#include "sheet_atlas/sheets.hpp"

namespace sheet_atlas {

enum class Twist { Canonical };

/// Smooth projective curve of genus >= 2, twisted by K.
struct CurveParams {
  int genus = 2;
  Twist twist = Twist::Canonical;

  /// Throws DomainError when genus < 2.
  explicit CurveParams(int g, Twist t = Twist::Canonical);
};

/// Multiset of C^*-weights on the slice, sorted ascending.
struct SliceWeights {
  std::vector<int> weights;
  friend bool operator==(const SliceWeights&, const SliceWeights&) = default;
};

/// h^0(K^j): g for j = 1, (2j-1)(g-1) otherwise.
int h0_canonical_power(int g, int j);

/// Sum over i and j = 1..l_i of h^0(K^j).
int dim_s_hitchin_base_gln(const Partition& m, int g);

/// h^0(K^2) + h^0(K^4).
int dim_hitchin_base_sp4(int g);

/// Dimension of the distinguished component for S_Dix: h^0(K) = g.
int dim_s_hitchin_base_sp4_dix(int g);

/// Sum of h^0(K^d) over the fundamental degrees d of the group.
int dim_hitchin_base(const GroupKind& kind, int g);

/// Fundamental degrees: 1..n for GL_n, 2,4,..,2r for B/C, 2,..,2r-2 and r
/// for D, 2,6,8,12 for F4.
std::vector<int> fundamental_degrees(const GroupKind& kind);

/// Weights on z/W_S. Defined for gl_n sheets ({1..l_i} per i), the sp4 table,
/// and sheets with dim z <= 1 (weight 1 if W_S is trivial, 2 if |W_S| = 2).
/// Throws DomainError elsewhere.
SliceWeights slice_weights(const SheetDescriptor& s);

/// Sum of h^0(K^e) over the slice weights.
int dim_from_weights(const SliceWeights& w, int g);

/// Number of components, one per F-torsor: 1 if |F| = 1, 2^(2g) if |F| = 2.
Integer component_count(int katsylo_order, int g);

/// Degree |W_L| of the S-cameral cover. Dixmier sheets only.
Integer s_cameral_degree(const SheetDescriptor& s);

}  // namespace sheet_atlas
