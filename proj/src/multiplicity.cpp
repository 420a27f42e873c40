#include "sheet_atlas/multiplicity.hpp"

namespace sheet_atlas {

bool SlicePoint::is_nilpotent_point() const {
  for (const auto& x : z) {
    if (x != 0) return false;
  }
  return true;
}

int inertia_order(const SlicePoint& p) {
  const auto& s = p.sheet;
  if (static_cast<int>(p.z.size()) != s.dim_z) {
    throw DomainError("slice point for " + s.id + " needs " + std::to_string(s.dim_z) + " coordinates, got " +
                      std::to_string(p.z.size()));
  }
  if (s.katsylo_order == 1) return 1;
  if (s.katsylo_order == 2 && s.dim_z == 1) return p.is_nilpotent_point() ? 2 : 1;
  throw DomainError("inertia is only computed for |F| = 1, or |F| = 2 acting by sign on a line; " + s.id +
                    " is outside that scope");
}

int orbit_method_multiplicity(const SlicePoint& p) { return p.sheet.katsylo_order / inertia_order(p); }

int polarisation_orbit_count(const SheetDescriptor& s) {
  if (!s.dixmier) throw DomainError("polarisations are counted for Dixmier sheets; " + s.id + " is not Dixmier");
  return s.katsylo_order;
}

}  // namespace sheet_atlas
