#include "sheet_atlas/serialize.hpp"

#include <limits>

namespace sheet_atlas {

namespace {

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON object lacks key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json rational_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw DomainError("integer must be a number or decimal string");
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition must be an array of integers");
  return Partition(j.get<std::vector<int>>());
}

Json profile_json(const MultiplicityProfile& p) {
  Json out = Json::object();
  for (int i = 1; i <= p.s(); ++i) out[std::to_string(i)] = p.l(i);
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const ParamMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Json coeffs = Json::array();
      for (const auto& c : m(i, j).coefficients()) coeffs.push_back(rational_json(c));
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json graded_json(const GradedPolynomial<Rational>& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(rational_json(p.weight_coefficient(k)));
  return Json{{"degree", p.degree()}, {"coefficients", coeffs}, {"text", to_string(p)}};
}

Json kind_json(const GroupKind& k) { return Json{{"family", family_letter(k.family)}, {"rank", k.rank}}; }

GroupKind kind_from_json(const Json& j) {
  GroupKind k{parse_family(field(j, "family").get<std::string>()), field(j, "rank").get<int>()};
  k.validate();
  return k;
}

Json levi_json(const LeviLabel& l) {
  switch (l.type) {
    case LeviLabel::Type::GL: return Json{{"type", "GL"}, {"parts", partition_json(l.gl_parts)}};
    case LeviLabel::Type::MaxLevi: return Json{{"type", "MaxLevi"}, {"a", l.a}, {"residual", l.residual}};
    case LeviLabel::Type::Torus: return Json{{"type", "Torus"}};
    case LeviLabel::Type::Whole: return Json{{"type", "Whole"}};
    case LeviLabel::Type::F4B3: return Json{{"type", "F4B3"}};
  }
  return nullptr;
}

LeviLabel levi_from_json(const Json& j) {
  const auto type = field(j, "type").get<std::string>();
  if (type == "GL") return LeviLabel::gl(partition_from_json(field(j, "parts")));
  if (type == "MaxLevi") return LeviLabel::max_levi(field(j, "a").get<int>(), field(j, "residual").get<int>());
  if (type == "Torus") return LeviLabel::torus();
  if (type == "Whole") return LeviLabel::whole();
  if (type == "F4B3") return LeviLabel::f4_b3();
  throw DomainError("unknown Levi type '" + type + "'");
}

Json sheet_json(const SheetDescriptor& s) {
  Json j;
  j["id"] = s.id;
  j["name"] = optional_json(s.name, [](const std::string& x) { return Json(x); });
  j["kind"] = kind_json(s.kind);
  j["levi"] = levi_json(s.levi);
  j["levi_text"] = s.levi_text;
  j["decomposition_orbit"] = s.decomposition_orbit;
  j["dixmier"] = s.dixmier;
  if (const auto* p = std::get_if<Partition>(&s.nilpotent_orbit)) {
    j["nilpotent_orbit"] = partition_json(*p);
  } else {
    j["nilpotent_orbit"] = Json{{"bala_carter", std::get<BalaCarterLabel>(s.nilpotent_orbit).name}};
  }
  j["orbit_name"] = optional_json(s.orbit_name, [](const std::string& x) { return Json(x); });
  j["d"] = s.d;
  j["dim_z"] = s.dim_z;
  j["dim_g"] = s.dim_g;
  j["dim_sheet"] = s.dim_sheet;
  j["w_l_order"] = integer_json(s.w_l_order);
  j["katsylo_order"] = s.katsylo_order;
  j["w_s_order"] = integer_json(s.w_s_order);
  j["component_group_order"] = optional_json(s.component_group_order, [](int x) { return Json(x); });
  j["class"] = optional_json(s.class_tag, [](SheetClass c) { return Json(to_string(c)); });
  j["type"] = optional_json(s.type_tag, [](SheetType t) { return Json(t == SheetType::Type1 ? "Type1" : "Type2"); });
  j["o_n_conjugacy_caveat"] = s.o_n_conjugacy_caveat;
  return j;
}

SheetDescriptor sheet_from_json(const Json& j) {
  SheetDescriptor s;
  s.id = field(j, "id").get<std::string>();
  if (!field(j, "name").is_null()) s.name = j.at("name").get<std::string>();
  s.kind = kind_from_json(field(j, "kind"));
  s.levi = levi_from_json(field(j, "levi"));
  s.levi_text = field(j, "levi_text").get<std::string>();
  s.decomposition_orbit = field(j, "decomposition_orbit").get<std::string>();
  s.dixmier = field(j, "dixmier").get<bool>();
  const Json& orbit = field(j, "nilpotent_orbit");
  if (orbit.is_array()) {
    s.nilpotent_orbit = partition_from_json(orbit);
  } else {
    s.nilpotent_orbit = BalaCarterLabel{field(orbit, "bala_carter").get<std::string>()};
  }
  if (!field(j, "orbit_name").is_null()) s.orbit_name = j.at("orbit_name").get<std::string>();
  s.d = field(j, "d").get<int>();
  s.dim_z = field(j, "dim_z").get<int>();
  s.dim_g = field(j, "dim_g").get<int>();
  s.dim_sheet = field(j, "dim_sheet").get<int>();
  s.w_l_order = integer_from_json(field(j, "w_l_order"));
  s.katsylo_order = field(j, "katsylo_order").get<int>();
  s.w_s_order = integer_from_json(field(j, "w_s_order"));
  if (!field(j, "component_group_order").is_null()) s.component_group_order = j.at("component_group_order").get<int>();
  if (!field(j, "class").is_null()) s.class_tag = parse_sheet_class(j.at("class").get<std::string>());
  if (!field(j, "type").is_null()) {
    const auto t = j.at("type").get<std::string>();
    if (t != "Type1" && t != "Type2") throw DomainError("unknown type tag '" + t + "'");
    s.type_tag = t == "Type1" ? SheetType::Type1 : SheetType::Type2;
  }
  s.o_n_conjugacy_caveat = field(j, "o_n_conjugacy_caveat").get<bool>();
  return s;
}

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return Json{{"subject", r.subject}, {"ok", r.all_ok()}, {"checks", checks}};
}

Json triple_json(const Sl2Triple& t) {
  Json j;
  j["kind"] = kind_json(t.model.kind);
  j["e"] = matrix_json(t.e);
  j["h"] = matrix_json(t.h);
  j["f"] = matrix_json(t.f);
  j["gram"] = t.model.form ? matrix_json(t.model.form->gram()) : Json(nullptr);
  j["flag_dims"] = t.flag_dims;
  j["abelianization_value"] = rational_json(t.abelianization_value);
  j["h_prime"] = t.h_prime ? matrix_json(*t.h_prime) : Json(nullptr);
  j["h_prime_value"] = t.h_prime_value ? rational_json(*t.h_prime_value) : Json(nullptr);
  return j;
}

Json real_report_json(const RealSheetReport& r, std::optional<int> genus) {
  Json j;
  j["label"] = to_string(r.label);
  j["complex_group"] = kind_json(r.complex_group);
  j["levi"] = r.levi_description.empty() ? Json(nullptr) : Json(r.levi_description);
  j["sheet_partition"] = r.sheet_partition ? partition_json(*r.sheet_partition) : Json(nullptr);
  j["quasi_split"] = r.quasi_split;
  j["abelianised_target"] = r.abelianised_target ? Json(*r.abelianised_target) : Json(nullptr);
  j["jh_rank"] = r.jh_rank ? Json(*r.jh_rank) : Json(nullptr);
  Json extra = Json::object();
  for (const auto& e : r.extra) {
    Json item{{"coefficient_of_g_minus_1", rational_json(e.coefficient)}};
    item["value"] = genus ? rational_json(e.at(*genus)) : Json(nullptr);
    extra[e.name] = item;
  }
  j["extra"] = extra;
  j["genus"] = genus ? Json(*genus) : Json(nullptr);
  j["positive_dim_fibres"] = r.positive_dim_fibres;
  j["notes"] = r.notes;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json rows_json(const std::vector<SheetDescriptor>& rows) {
  Json out = Json::array();
  for (const auto& s : rows) out.push_back(sheet_json(s));
  return out;
}

}  // namespace

std::string table1_fixture() {
  Json j;
  j["table"] = "sheets of sp4";
  j["group"] = kind_json(GroupKind::sp(2));
  j["rows"] = rows_json(sheets_sp4());
  return dump(j);
}

std::string table2_fixture() {
  Json j;
  j["table"] = "Dixmier sheets of maximal Levi subgroups";
  j["max_n"] = 12;
  j["rows"] = rows_json(maximal_levi_table(12));
  return dump(j);
}

std::string roundtrip_fixture(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("fixture is not valid JSON: ") + e.what());
  }
  Json out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "rows") {
      Json rows = Json::array();
      for (const auto& row : it.value()) rows.push_back(sheet_json(sheet_from_json(row)));
      out["rows"] = rows;
    } else {
      out[it.key()] = it.value();
    }
  }
  return dump(out);
}

}  // namespace sheet_atlas
