#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sheet_atlas/partitions.hpp"
#include "sheet_atlas/rational.hpp"

namespace sheet_atlas {

/// Levi subgroup up to conjugacy. `GL` is a Levi of GL_n given by a partition
/// m; `MaxLevi` is GL_a x Sp_2p (type C, residual = p) or GL_a x SO_q (types
/// B/D, residual = q); `Torus` and `Whole` are the extreme Levis used by the
/// sp4 table; `F4B3` is the B3 Levi of F4.
struct LeviLabel {
  enum class Type { GL, MaxLevi, Torus, Whole, F4B3 };

  Type type = Type::Whole;
  Partition gl_parts;
  int a = 0;
  int residual = 0;

  static LeviLabel gl(Partition m) { return {Type::GL, std::move(m), 0, 0}; }
  static LeviLabel max_levi(int a, int residual) { return {Type::MaxLevi, {}, a, residual}; }
  static LeviLabel torus() { return {Type::Torus, {}, 0, 0}; }
  static LeviLabel whole() { return {Type::Whole, {}, 0, 0}; }
  static LeviLabel f4_b3() { return {Type::F4B3, {}, 0, 0}; }

  friend bool operator==(const LeviLabel&, const LeviLabel&) = default;
};

std::string to_string(const LeviLabel& levi);

/// Throws DomainError unless `levi` is a valid label for `kind`.
void validate_levi(const GroupKind& kind, const LeviLabel& levi);

/// Every maximal Levi label of a B/C/D kind (increasing a), or the two-part
/// partitions of n for type A.
std::vector<LeviLabel> maximal_levi_labels(const GroupKind& kind);

/// Dimension of the Levi subalgebra.
int levi_dim(const GroupKind& kind, const LeviLabel& levi);

enum class SheetClass { I = 1, II, III, IV, V, VI, VII, VIII, IX };
enum class SheetType { Type1, Type2 };

std::string to_string(SheetClass c);
SheetClass parse_sheet_class(const std::string& s);

struct BalaCarterLabel {
  std::string name;
  friend bool operator==(const BalaCarterLabel&, const BalaCarterLabel&) = default;
};

using OrbitLabel = std::variant<Partition, BalaCarterLabel>;

/// Invariant record of one sheet.
struct SheetDescriptor {
  std::string id;
  std::optional<std::string> name;
  GroupKind kind;
  LeviLabel levi;
  std::string levi_text;
  /// Rigid orbit of the decomposition data: "0" for Dixmier sheets.
  std::string decomposition_orbit = "0";
  bool dixmier = true;
  OrbitLabel nilpotent_orbit;
  std::optional<std::string> orbit_name;
  int d = 0;
  int dim_z = 0;
  int dim_g = 0;
  int dim_sheet = 0;
  Integer w_l_order = 1;
  int katsylo_order = 1;
  Integer w_s_order = 1;
  std::optional<int> component_group_order;
  std::optional<SheetClass> class_tag;
  std::optional<SheetType> type_tag;
  /// D-type Levis that are conjugate under O_n but not SO_n share one record.
  bool o_n_conjugacy_caveat = false;

  friend bool operator==(const SheetDescriptor&, const SheetDescriptor&) = default;
};

/// Throws std::logic_error naming the first violated invariant.
void check_invariants(const SheetDescriptor& s);

/// The Dixmier sheet of gl_n attached to the Levi GL_{m_1} x ... x GL_{m_r}.
SheetDescriptor gln_sheet(const Partition& m);

/// One sheet per partition of n, in reverse-lexicographic order of m.
std::vector<SheetDescriptor> enumerate_sheets_gln(int n);

/// The five sheets of sp4 in the order reg, S_Dix, S'_Dix, O_min, 0.
std::vector<SheetDescriptor> sheets_sp4();

/// Dixmier sheet of a maximal Levi (B/C/D) or two-part GL Levi (A), with
/// class, orbit, |F| and |W_L| from the maximal-Levi classification.
SheetDescriptor maximal_levi_sheet(const GroupKind& kind, const LeviLabel& levi);

SheetDescriptor f4_b3_sheet();

/// Every maximal-Levi sheet of GL_n, SO_n and Sp_n with natural dimension
/// n <= max_n, ordered by class, then kind, then label.
std::vector<SheetDescriptor> maximal_levi_table(int max_n = 12);

/// The Levi of gl_n met by the semisimple elements of the sheet, recorded
/// as the multiplicities of their eigenvalues (a, a, residual for B/C).
Partition ambient_gl_levi_partition(const GroupKind& kind, const LeviLabel& levi);

/// Resolves an id such as "A4:2,1,1", "C3:2;1", "C2:S_Dix" or "F4:B3".
SheetDescriptor find_sheet(const std::string& id);

/// Resolves --kind/--rank/--levi style selectors. For C2 the sp4 table row
/// is returned.
SheetDescriptor select_sheet(const GroupKind& kind, const LeviLabel& levi);

}  // namespace sheet_atlas
