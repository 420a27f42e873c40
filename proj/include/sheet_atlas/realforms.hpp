#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheet_atlas/partitions.hpp"
#include "sheet_atlas/rational.hpp"

namespace sheet_atlas {

/// SU(p,q) with p >= q >= 1, or SO*(2n) with n >= 3.
struct RealFormLabel {
  enum class Type { SU, SOStar };

  Type type = Type::SU;
  int p = 1;
  int q = 1;
  int n = 3;

  static RealFormLabel su(int p, int q);
  static RealFormLabel so_star(int n);

  /// Throws DomainError on p < q, q < 1 or n < 3.
  void validate() const;

  friend bool operator==(const RealFormLabel&, const RealFormLabel&) = default;
};

std::string to_string(const RealFormLabel& l);

/// "SU:p,q" or "SOSTAR:n" (the type word is case-insensitive).
RealFormLabel parse_real_form(const std::string& text);

/// A quantity of the form coefficient * (g - 1).
struct GenusLinear {
  std::string name;
  Rational coefficient;

  Rational at(int genus) const;
};

struct RealSheetReport {
  RealFormLabel label;
  GroupKind complex_group;
  /// Levi of the sheet S_H inside the complex group, as text.
  std::string levi_description;
  /// gl_n Levi partition of S_H (SU only).
  std::optional<Partition> sheet_partition;
  bool quasi_split = false;
  std::optional<std::string> abelianised_target;
  /// Rank of the group scheme J^H where known.
  std::optional<int> jh_rank;
  std::vector<GenusLinear> extra;
  bool positive_dim_fibres = false;
  std::vector<std::string> notes;
};

RealSheetReport sheet_of_real_form(const RealFormLabel& label);

/// 2(q deg V - p deg W)/(p+q).
Rational toledo(int p, int q, long deg_v, long deg_w);

/// 2q(g-1).
Rational toledo_max(int q, int g);

/// True for SU(p,q) with p - q > 1 and for SO*(4m+2).
bool abelianized_fiber_dim_is_positive(const RealFormLabel& label);

}  // namespace sheet_atlas
