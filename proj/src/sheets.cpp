#include "sheet_atlas/sheets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sheet_atlas {

std::string to_string(const LeviLabel& levi) {
  switch (levi.type) {
    case LeviLabel::Type::GL: {
      std::string s;
      for (std::size_t i = 0; i < levi.gl_parts.length(); ++i) {
        s += (i ? "," : "") + std::to_string(levi.gl_parts[i]);
      }
      return s;
    }
    case LeviLabel::Type::MaxLevi: return std::to_string(levi.a) + ";" + std::to_string(levi.residual);
    case LeviLabel::Type::Torus: return "T";
    case LeviLabel::Type::Whole: return "G";
    case LeviLabel::Type::F4B3: return "B3";
  }
  return "?";
}

void validate_levi(const GroupKind& kind, const LeviLabel& levi) {
  kind.validate();
  const std::string where = " for " + to_string(kind);
  switch (levi.type) {
    case LeviLabel::Type::GL:
      if (kind.family != Family::A) throw DomainError("GL partition labels are only valid for type A");
      if (levi.gl_parts.n() != kind.rank) {
        throw DomainError("Levi partition " + to_string(levi.gl_parts) + " does not partition " + std::to_string(kind.rank));
      }
      return;
    case LeviLabel::Type::MaxLevi: {
      if (levi.a < 1) throw DomainError("GL block size a must be positive");
      if (levi.residual < 0) throw DomainError("residual must be non-negative");
      switch (kind.family) {
        case Family::C:
          if (levi.a + levi.residual != kind.rank) throw DomainError("(a;p) needs a + p = r" + where);
          return;
        case Family::B:
          if (2 * levi.a + levi.residual != 2 * kind.rank + 1) throw DomainError("(a;q) needs 2a + q = 2r+1" + where);
          return;
        case Family::D:
          if (2 * levi.a + levi.residual != 2 * kind.rank) throw DomainError("(a;q) needs 2a + q = 2r" + where);
          if (levi.residual == 2) throw DomainError("(a;2) is not a maximal Levi" + where);
          return;
        default: throw DomainError("(a;residual) labels are only valid for B, C, D");
      }
    }
    case LeviLabel::Type::Torus:
    case LeviLabel::Type::Whole:
      if (kind.family == Family::F4) throw DomainError("F4 only carries the B3 Levi record");
      return;
    case LeviLabel::Type::F4B3:
      if (kind.family != Family::F4) throw DomainError("B3 Levi label is only valid for F4");
      return;
  }
}

std::vector<LeviLabel> maximal_levi_labels(const GroupKind& kind) {
  kind.validate();
  std::vector<LeviLabel> out;
  switch (kind.family) {
    case Family::A:
      for (int m2 = 1; 2 * m2 <= kind.rank; ++m2) out.push_back(LeviLabel::gl(Partition({kind.rank - m2, m2})));
      std::sort(out.begin(), out.end(),
                [](const LeviLabel& x, const LeviLabel& y) { return reverse_lex_less(x.gl_parts, y.gl_parts); });
      break;
    case Family::C:
      for (int a = 1; a <= kind.rank; ++a) out.push_back(LeviLabel::max_levi(a, kind.rank - a));
      break;
    case Family::B:
      for (int a = 1; a <= kind.rank; ++a) out.push_back(LeviLabel::max_levi(a, 2 * kind.rank + 1 - 2 * a));
      break;
    case Family::D:
      for (int a = 1; a <= kind.rank; ++a) {
        const int q = 2 * (kind.rank - a);
        if (q != 2) out.push_back(LeviLabel::max_levi(a, q));
      }
      break;
    case Family::F4: out.push_back(LeviLabel::f4_b3()); break;
  }
  return out;
}

int levi_dim(const GroupKind& kind, const LeviLabel& levi) {
  validate_levi(kind, levi);
  switch (levi.type) {
    case LeviLabel::Type::GL: {
      int d = 0;
      for (int m : levi.gl_parts.parts()) d += m * m;
      return d;
    }
    case LeviLabel::Type::MaxLevi: {
      const int a = levi.a, r = levi.residual;
      if (kind.family == Family::C) return a * a + r * (2 * r + 1);
      return a * a + r * (r - 1) / 2;
    }
    case LeviLabel::Type::Torus: return kind.rank;
    case LeviLabel::Type::Whole: return kind.dim_g();
    case LeviLabel::Type::F4B3: return 22;
  }
  return 0;
}

std::string to_string(SheetClass c) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  return names[static_cast<int>(c) - 1];
}

SheetClass parse_sheet_class(const std::string& s) {
  for (int i = 1; i <= 9; ++i) {
    if (to_string(static_cast<SheetClass>(i)) == s) return static_cast<SheetClass>(i);
  }
  throw DomainError("unknown class tag '" + s + "'");
}

namespace {

std::string id_prefix(const GroupKind& kind) { return to_string(kind) + ":"; }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("sheet invariant violated: " + what);
}

std::string gl_levi_text(const Partition& m) {
  std::string s;
  for (std::size_t i = 0; i < m.length(); ++i) s += (i ? " x GL_" : "GL_") + std::to_string(m[i]);
  return s;
}

std::string max_levi_text(const GroupKind& kind, const LeviLabel& levi) {
  std::string s = levi.a == 1 ? "G_m" : "GL_" + std::to_string(levi.a);
  if (levi.residual == 0) return s;
  if (kind.family == Family::C) return s + " x Sp_" + std::to_string(2 * levi.residual);
  return s + " x SO_" + std::to_string(levi.residual);
}

SheetType type_of(SheetClass c) {
  switch (c) {
    case SheetClass::II:
    case SheetClass::III:
    case SheetClass::VI:
    case SheetClass::VIII: return SheetType::Type1;
    default: return SheetType::Type2;
  }
}

struct ClassRow {
  SheetClass cls;
  Partition orbit;
  int katsylo;
  int w_l;
};

ClassRow classify_max_levi(const GroupKind& kind, const LeviLabel& levi) {
  const int a = levi.a;
  if (kind.family == Family::C) {
    const int p = levi.residual;
    if (a >= 2 * p) return {SheetClass::VII, Partition::from_blocks({{3, 2 * p}, {2, a - 2 * p}}), 1, 2};
    if (a % 2 == 1) {
      return {SheetClass::VIII, Partition::from_blocks({{3, a - 1}, {2, 2}, {1, 2 * p - a - 1}}), 2, 2};
    }
    return {SheetClass::IX, Partition::from_blocks({{3, a}, {1, 2 * p - a}}), 1, 2};
  }
  const int q = levi.residual;
  if (a < q) return {SheetClass::V, Partition::from_blocks({{3, a}, {1, q - a}}), 1, 2};
  if (q == 0 && a % 2 == 1) return {SheetClass::VI, Partition::from_blocks({{2, a - 1}, {1, 2}}), 1, 1};
  if ((a - q) % 2 == 0) return {SheetClass::IV, Partition::from_blocks({{3, q}, {2, a - q}}), 1, 2};
  return {SheetClass::III, Partition::from_blocks({{3, q}, {2, a - q - 1}, {1, 2}}), 2, 2};
}

void finish(SheetDescriptor& s) {
  s.dim_g = s.kind.dim_g();
  s.dim_sheet = s.dim_g - s.d + s.dim_z;
  s.w_s_order = s.w_l_order / s.katsylo_order;
}

}  // namespace

void check_invariants(const SheetDescriptor& s) {
  require(s.katsylo_order >= 1, "katsylo_order >= 1");
  require(s.w_l_order % s.katsylo_order == 0, "katsylo_order divides w_l_order");
  require(s.w_s_order * s.katsylo_order == s.w_l_order, "w_s_order * katsylo_order = w_l_order");
  require(s.dim_g == s.kind.dim_g(), "dim_g matches the group kind");
  require(s.dim_sheet == s.dim_g - s.d + s.dim_z, "dim_sheet = dim g - d + dim_z");
  if (s.dixmier) require(s.d == levi_dim(s.kind, s.levi), "Dixmier sheet has d = dim L");
  if (const auto* p = std::get_if<Partition>(&s.nilpotent_orbit)) {
    require(p->n() == s.kind.natural_dim(), "nilpotent orbit partitions n");
    require(is_valid_orbit_partition(s.kind, *p), "nilpotent orbit passes the parity rule");
  }
  if (s.class_tag) {
    require(s.type_tag.has_value(), "class tag comes with a type tag");
    require(*s.type_tag == type_of(*s.class_tag), "type tag follows the class");
    require(s.katsylo_order == 1 || s.katsylo_order == 2, "katsylo_order in {1,2} for classified sheets");
  }
}

SheetDescriptor gln_sheet(const Partition& m) {
  if (m.n() < 1) throw DomainError("gl_n sheets need n >= 1");
  const GroupKind kind = GroupKind::gl(m.n());
  SheetDescriptor s;
  s.kind = kind;
  s.levi = LeviLabel::gl(m);
  s.id = id_prefix(kind) + to_string(s.levi);
  s.levi_text = gl_levi_text(m);
  s.nilpotent_orbit = conjugate(m);
  s.d = levi_dim(kind, s.levi);
  s.dim_z = static_cast<int>(m.length());
  const auto prof = profile(m);
  Integer w = 1;
  for (int i = 1; i <= prof.s(); ++i) w *= factorial(static_cast<unsigned>(prof.l(i)));
  s.w_l_order = w;
  s.katsylo_order = 1;
  s.component_group_order = 1;
  if (m.length() == 2) {
    s.class_tag = m[0] == m[1] ? SheetClass::I : SheetClass::II;
    s.type_tag = type_of(*s.class_tag);
  }
  finish(s);
  return s;
}

std::vector<SheetDescriptor> enumerate_sheets_gln(int n) {
  if (n < 1 || n > 40) throw DomainError("enumerate_sheets_gln needs 1 <= n <= 40, got " + std::to_string(n));
  std::vector<SheetDescriptor> out;
  for (const auto& m : partitions_of(n)) out.push_back(gln_sheet(m));
  return out;
}

SheetDescriptor maximal_levi_sheet(const GroupKind& kind, const LeviLabel& levi) {
  validate_levi(kind, levi);
  if (kind.family == Family::A) {
    if (levi.gl_parts.length() != 2) throw DomainError("type A maximal Levis have exactly two blocks");
    return gln_sheet(levi.gl_parts);
  }
  if (levi.type != LeviLabel::Type::MaxLevi) throw DomainError("expected an (a;residual) label for " + to_string(kind));
  const ClassRow row = classify_max_levi(kind, levi);
  SheetDescriptor s;
  s.kind = kind;
  s.levi = levi;
  s.id = id_prefix(kind) + to_string(levi);
  s.levi_text = max_levi_text(kind, levi);
  s.nilpotent_orbit = row.orbit;
  s.d = levi_dim(kind, levi);
  s.dim_z = 1;
  s.w_l_order = row.w_l;
  s.katsylo_order = row.katsylo;
  s.class_tag = row.cls;
  s.type_tag = type_of(row.cls);
  s.o_n_conjugacy_caveat = kind.family == Family::D && levi.residual == 0 && levi.a % 2 == 0;
  finish(s);
  return s;
}

std::vector<SheetDescriptor> sheets_sp4() {
  const GroupKind c2 = GroupKind::sp(2);
  std::vector<SheetDescriptor> rows;

  SheetDescriptor reg;
  reg.kind = c2;
  reg.id = "C2:reg";
  reg.name = "g^reg";
  reg.levi = LeviLabel::torus();
  reg.levi_text = "T";
  reg.nilpotent_orbit = Partition({4});
  reg.orbit_name = "O_reg";
  reg.d = 2;
  reg.dim_z = 2;
  reg.w_l_order = 8;
  finish(reg);
  rows.push_back(reg);

  SheetDescriptor dix = maximal_levi_sheet(c2, LeviLabel::max_levi(1, 1));
  dix.id = "C2:S_Dix";
  dix.name = "S_Dix";
  dix.orbit_name = "O_sub";
  dix.component_group_order = 2;
  rows.push_back(dix);

  SheetDescriptor dix2 = maximal_levi_sheet(c2, LeviLabel::max_levi(2, 0));
  dix2.id = "C2:S'_Dix";
  dix2.name = "S'_Dix";
  dix2.orbit_name = "O_sub";
  rows.push_back(dix2);

  SheetDescriptor omin;
  omin.kind = c2;
  omin.id = "C2:O_min";
  omin.name = "O_min";
  omin.levi = LeviLabel::whole();
  omin.levi_text = "Sp_4";
  omin.decomposition_orbit = "O_min";
  omin.dixmier = false;
  omin.nilpotent_orbit = Partition({2, 1, 1});
  omin.orbit_name = "O_min";
  omin.d = 6;
  omin.dim_z = 0;
  finish(omin);
  rows.push_back(omin);

  SheetDescriptor zero;
  zero.kind = c2;
  zero.id = "C2:0";
  zero.name = "0";
  zero.levi = LeviLabel::whole();
  zero.levi_text = "Sp_4";
  zero.nilpotent_orbit = Partition({1, 1, 1, 1});
  zero.orbit_name = "0";
  zero.d = 10;
  zero.dim_z = 0;
  finish(zero);
  rows.push_back(zero);

  return rows;
}

SheetDescriptor f4_b3_sheet() {
  SheetDescriptor s;
  s.kind = GroupKind::f4();
  s.id = "F4:B3";
  s.levi = LeviLabel::f4_b3();
  s.levi_text = "B3 x G_m";
  s.nilpotent_orbit = BalaCarterLabel{"~A2"};
  s.d = 22;
  s.dim_z = 1;
  s.w_l_order = 2;
  s.katsylo_order = 1;
  s.type_tag = SheetType::Type2;
  finish(s);
  return s;
}

std::vector<SheetDescriptor> maximal_levi_table(int max_n) {
  std::vector<SheetDescriptor> all;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& l : maximal_levi_labels(GroupKind::gl(n))) all.push_back(maximal_levi_sheet(GroupKind::gl(n), l));
  }
  for (int r = 1; 2 * r + 1 <= max_n; ++r) {
    for (const auto& l : maximal_levi_labels(GroupKind::so_odd(r))) all.push_back(maximal_levi_sheet(GroupKind::so_odd(r), l));
  }
  for (int r = 1; 2 * r <= max_n; ++r) {
    for (const auto& l : maximal_levi_labels(GroupKind::sp(r))) all.push_back(maximal_levi_sheet(GroupKind::sp(r), l));
  }
  for (int r = 2; 2 * r <= max_n; ++r) {
    for (const auto& l : maximal_levi_labels(GroupKind::so_even(r))) all.push_back(maximal_levi_sheet(GroupKind::so_even(r), l));
  }
  std::stable_sort(all.begin(), all.end(), [](const SheetDescriptor& x, const SheetDescriptor& y) {
    return static_cast<int>(*x.class_tag) < static_cast<int>(*y.class_tag);
  });
  return all;
}

Partition ambient_gl_levi_partition(const GroupKind& kind, const LeviLabel& levi) {
  validate_levi(kind, levi);
  if (levi.type == LeviLabel::Type::GL) return levi.gl_parts;
  if (levi.type != LeviLabel::Type::MaxLevi) throw DomainError("ambient gl Levi is defined for GL and (a;residual) labels");
  const int rest = kind.family == Family::C ? 2 * levi.residual : levi.residual;
  std::vector<int> parts{levi.a, levi.a};
  if (rest > 0) parts.push_back(rest);
  return Partition(parts);
}

namespace {

std::vector<int> parse_int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw DomainError("bad integer '" + item + "' in '" + s + "'");
    }
  }
  return out;
}

}  // namespace

SheetDescriptor select_sheet(const GroupKind& kind, const LeviLabel& levi) {
  validate_levi(kind, levi);
  if (kind == GroupKind::sp(2)) {
    for (const auto& row : sheets_sp4()) {
      if (row.levi == levi && row.dixmier) return row;
    }
  }
  switch (levi.type) {
    case LeviLabel::Type::GL: return gln_sheet(levi.gl_parts);
    case LeviLabel::Type::MaxLevi: return maximal_levi_sheet(kind, levi);
    case LeviLabel::Type::F4B3: return f4_b3_sheet();
    default: break;
  }
  throw DomainError("no sheet record for Levi " + to_string(levi) + " in " + to_string(kind));
}

SheetDescriptor find_sheet(const std::string& id) {
  const auto colon = id.find(':');
  if (colon == std::string::npos) throw DomainError("sheet id '" + id + "' must look like KIND:LABEL");
  const std::string kind_text = id.substr(0, colon);
  const std::string label = id.substr(colon + 1);
  if (kind_text == "F4") {
    if (label == "B3") return f4_b3_sheet();
    throw DomainError("F4 only has the B3 sheet record");
  }
  if (kind_text == "C2") {
    for (const auto& row : sheets_sp4()) {
      if (row.id == id || (row.name && *row.name == label)) return row;
    }
  }
  if (kind_text.size() < 2) throw DomainError("sheet id '" + id + "' lacks a rank");
  const Family family = parse_family(kind_text.substr(0, 1));
  const auto rank = parse_int_list(kind_text.substr(1), ',');
  if (rank.size() != 1) throw DomainError("bad rank in sheet id '" + id + "'");
  const GroupKind kind{family, rank.front()};
  if (family == Family::A) return select_sheet(kind, LeviLabel::gl(Partition(parse_int_list(label, ','))));
  const auto pair = parse_int_list(label, ';');
  if (pair.size() != 2) throw DomainError("expected a;residual in sheet id '" + id + "'");
  return select_sheet(kind, LeviLabel::max_levi(pair[0], pair[1]));
}

}  // namespace sheet_atlas
