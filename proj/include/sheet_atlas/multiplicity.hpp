#pragma once

#include <vector>

#include "sheet_atlas/rational.hpp"
#include "sheet_atlas/sheets.hpp"

namespace sheet_atlas {

/// A point of z/W_S on the slice of `sheet`; z = 0 is the nilpotent point.
struct SlicePoint {
  SheetDescriptor sheet;
  std::vector<Rational> z;

  bool is_nilpotent_point() const;
};

/// |Stab_F(z)|. Supported when |F| = 1, or |F| = 2 with dim z = 1 (F acts on
/// the line by -1). Throws DomainError otherwise or if z has the wrong length.
int inertia_order(const SlicePoint& p);

/// |F| / |Stab_F(z)|.
int orbit_method_multiplicity(const SlicePoint& p);

/// Size |F| of the orbit of polarisations. Dixmier sheets only.
int polarisation_orbit_count(const SheetDescriptor& s);

}  // namespace sheet_atlas
