#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheet_atlas/liealg.hpp"
#include "sheet_atlas/sheets.hpp"

namespace sheet_atlas {

/// e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h, together with the
/// parabolic flag 0 < V+ < V+ + W < V (recorded by its dimensions) and the
/// value of h under the abelianisation pairing of the Levi.
struct Sl2Triple {
  RationalMatrix e, h, f;
  LieAlgebraModel model;
  std::vector<int> flag_dims;
  Rational abelianization_value;
  /// Type 1 only: an element of c_g(e) in the Levi with nonzero image.
  std::optional<RationalMatrix> h_prime;
  std::optional<Rational> h_prime_value;
};

/// One basis vector v_{i,j} of a Jordan basis: position i (1-based, top of
/// the chain is 1) in chain j (0-based).
struct ChainVector {
  int i;
  int j;
  friend bool operator==(const ChainVector&, const ChainVector&) = default;
};

/// Normalised Jordan basis for a nilpotent of type `orbit`: chains are paired
/// by the involution `beta`, and (v_{i,j}, v_{n_j+1-i, beta(j)}) =
/// (-1)^(i-1) sign[j], all other pairings zero. `order` lists the basis in
/// the order V+, W, V-.
struct JordanBasisPlan {
  GroupKind kind;
  Partition orbit;
  std::vector<int> beta;
  int a = 0;
  std::vector<Rational> signs;
  std::vector<ChainVector> order;
  std::vector<int> flag_dims;
};

/// Throws std::logic_error if no consistent pairing exists (a planning bug).
JordanBasisPlan plan_jordan_basis(const GroupKind& kind, const LeviLabel& levi);

/// Gram matrix of the plan in its basis order.
RationalMatrix plan_gram(const JordanBasisPlan& plan);

/// GL_{m1+m2} triple for the Levi GL_{m1} x GL_{m2}, m1 >= m2 >= 1.
Sl2Triple build_gl_triple(int m1, int m2);

/// Triple for the Dixmier sheet of a maximal Levi of SO_n or Sp_n.
Sl2Triple build_bcd_triple(const GroupKind& kind, const LeviLabel& levi);

/// The sp4 triple e = E13 + E24, h = diag(1,1,-1,-1), f = E31 + E42.
Sl2Triple sp4_triple();

enum class SliceVariant { Corrected, AsPrinted };

/// x_t = 1/4 [[2t,0,1,0],[0,-2t,0,1],[c,0,2t,0],[0,c,0,-2t]] with c = 4t^2
/// (Corrected) or c = t^2 (AsPrinted).
ParamMatrix sp4_slice_symbolic(SliceVariant v = SliceVariant::Corrected);
RationalMatrix sp4_slice(const Rational& t, SliceVariant v = SliceVariant::Corrected);

/// Generator s of the component group: swaps basis vectors 1<->2 and 3<->4.
RationalMatrix sp4_flip_generator();

/// s x_t s^-1. Throws std::logic_error if it differs from x_{-t}.
ParamMatrix sp4_flip_action_symbolic(SliceVariant v = SliceVariant::Corrected);
RationalMatrix sp4_flip_action(const Rational& t, SliceVariant v = SliceVariant::Corrected);

/// t -> -t in every entry.
ParamMatrix negate_parameter(const ParamMatrix& m);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  bool all_ok() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Strictly block upper triangular / block diagonal for the flag with the
/// given cumulative dimensions.
bool is_strictly_block_upper(const RationalMatrix& x, const std::vector<int>& flag_dims);
bool is_block_diagonal(const RationalMatrix& x, const std::vector<int>& flag_dims);

/// Runs every triple check: sl2 relations, membership, flag conditions,
/// abelianisation, h' for Type 1, and (when `expected_d` is given) the
/// centraliser dimension of e.
VerificationReport verify_triple(const std::string& subject, const Sl2Triple& t, std::optional<SheetType> type,
                                 std::optional<int> expected_d);

/// Checks on the sp4 slice: symbolic membership, char poly, values at
/// sample points, x_0 = e/4, flip action, stabiliser discriminant.
VerificationReport verify_sp4_slice(SliceVariant v);

}  // namespace sheet_atlas
