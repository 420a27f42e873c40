#include "sheet_atlas/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "sheet_atlas/hitchin.hpp"
#include "sheet_atlas/multiplicity.hpp"
#include "sheet_atlas/realforms.hpp"
#include "sheet_atlas/serialize.hpp"
#include "sheet_atlas/sheets.hpp"
#include "sheet_atlas/spectral.hpp"
#include "sheet_atlas/triples.hpp"

namespace sheet_atlas {

namespace {

/// Raised for malformed flag values that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError("expected an integer, got '" + s + "'");
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split(s, s.find(';') != std::string::npos ? ';' : ',')) out.push_back(to_int(x));
  return out;
}

GroupKind make_kind(const std::string& family, std::optional<int> rank) {
  const Family f = parse_family(family);
  if (f == Family::F4) return GroupKind::f4();
  if (!rank) throw UsageError("--rank is required for " + family);
  GroupKind k{f, *rank};
  k.validate();
  return k;
}

LeviLabel parse_levi(const GroupKind& kind, const std::string& text) {
  if (text == "T") return LeviLabel::torus();
  if (text == "G") return LeviLabel::whole();
  if (text == "B3") return LeviLabel::f4_b3();
  const auto nums = int_list(text);
  if (kind.family == Family::A) return LeviLabel::gl(Partition(nums));
  if (nums.size() != 2) throw UsageError("Levi label for " + to_string(kind) + " must be a,residual");
  return LeviLabel::max_levi(nums[0], nums[1]);
}

std::string orbit_text(const OrbitLabel& o) {
  if (const auto* p = std::get_if<Partition>(&o)) return to_string(*p);
  return std::get<BalaCarterLabel>(o).name;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void print_sheets(std::ostream& out, const std::vector<SheetDescriptor>& sheets) {
  std::vector<std::vector<std::string>> rows{
      {"id", "levi", "orbit", "d", "dim_z", "|W_L|", "|F|", "|W_S|", "dim_S", "class", "type"}};
  for (const auto& s : sheets) {
    rows.push_back({s.id, s.levi_text, orbit_text(s.nilpotent_orbit), std::to_string(s.d), std::to_string(s.dim_z),
                    s.w_l_order.get_str(), std::to_string(s.katsylo_order), s.w_s_order.get_str(),
                    std::to_string(s.dim_sheet), s.class_tag ? to_string(*s.class_tag) : "-",
                    s.type_tag ? (*s.type_tag == SheetType::Type1 ? "Type1" : "Type2") : "-"});
  }
  print_table(out, rows);
}

void print_key_values(std::ostream& out, const Json& j) {
  std::vector<std::vector<std::string>> rows;
  for (auto it = j.begin(); it != j.end(); ++it) {
    rows.push_back({it.key() + ":", it.value().is_string() ? it.value().get<std::string>() : it.value().dump()});
  }
  print_table(out, rows);
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << r.subject << "\n";
  for (const auto& c : r.checks) {
    out << (c.ok ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << "result: " << (r.all_ok() ? "PASS" : "FAIL") << "\n";
}

struct SheetSelector {
  std::string sheet_id;
  std::string family;
  std::optional<int> rank;
  std::string levi;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--sheet", sheet_id, "sheet id, e.g. A4:2,1,1, C3:2;1, C2:S_Dix, F4:B3");
    cmd->add_option("--kind", family, "group kind: A, B, C, D or F4");
    cmd->add_option("--rank", rank, "rank (n for A)");
    cmd->add_option("--levi", levi, "Levi label: parts for A, a,residual for B/C/D, T, G or B3");
  }
  bool has_sheet() const { return !sheet_id.empty() || !levi.empty() || family == "F4"; }
  SheetDescriptor resolve() const {
    if (!sheet_id.empty()) return find_sheet(sheet_id);
    if (family.empty()) throw UsageError("give --sheet or --kind/--rank/--levi");
    const GroupKind kind = make_kind(family, rank);
    if (kind.family == Family::F4) return f4_b3_sheet();
    if (levi.empty()) throw UsageError("--levi is required to select a sheet");
    return select_sheet(kind, parse_levi(kind, levi));
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sheets of classical Lie algebras: invariants, sl2-triples, Hitchin bases and spectral data"};
  app.name("sheet-atlas");
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (also forced by SHEET_ATLAS_JSON=1)");

  std::string family;
  std::optional<int> rank;
  std::string levi;
  auto* sheets_cmd = app.add_subcommand("sheets", "list sheets of a group kind");
  sheets_cmd->add_option("--kind", family, "A, B, C, D or F4")->required();
  sheets_cmd->add_option("--rank", rank, "rank (n for A)");
  sheets_cmd->add_option("--levi", levi, "restrict to one Levi label");

  SheetSelector info_sel;
  auto* info_cmd = app.add_subcommand("sheet-info", "full record of one sheet");
  info_sel.add_to(info_cmd);

  std::string case_text;
  bool as_printed = false;
  bool matrices = false;
  auto* triple_cmd = app.add_subcommand("triple-verify", "build and verify an sl2-triple or the sp4 slice");
  triple_cmd->add_option("--case", case_text, "gl:m1,m2 | bcd:KIND,a,res | sp4 | sp4-slice")->required();
  triple_cmd->add_flag("--as-printed", as_printed, "sp4-slice: use the entry t^2 instead of 4t^2");
  triple_cmd->add_flag("--matrices", matrices, "include matrices in JSON output");

  int genus = 0;
  SheetSelector hitchin_sel;
  auto* hitchin_cmd = app.add_subcommand("hitchin-dim", "Hitchin and S-Hitchin base dimensions");
  hitchin_cmd->add_option("--genus", genus, "curve genus (>= 2)")->required();
  hitchin_sel.add_to(hitchin_cmd);

  std::string profile_text, factors_text;
  auto* mu_cmd = app.add_subcommand("mu-s", "image of a point of the S-Hitchin base of a gl_n sheet");
  mu_cmd->add_option("--profile", profile_text, "Levi partition m, e.g. 2,1,1")->required();
  mu_cmd->add_option("--factors", factors_text, "xi_1;...;xi_s, each as coefficients highest first, e.g. \"1,0,-1;1,1\"")
      ->required();

  std::string mult_sheet, z_text;
  auto* mult_cmd = app.add_subcommand("multiplicity", "orbit-method multiplicity at a slice point");
  mult_cmd->add_option("--sheet", mult_sheet, "sheet id")->required();
  mult_cmd->add_option("--z", z_text, "slice coordinates, comma separated rationals")->required();

  std::string label_text;
  std::optional<int> real_genus;
  auto* real_cmd = app.add_subcommand("realform", "sheet and abelianisation data of a real form");
  real_cmd->add_option("--label", label_text, "SU:p,q or SOSTAR:n")->required();
  real_cmd->add_option("--genus", real_genus, "evaluate genus-linear quantities");

  bool regen = false;
  std::string fixture_dir = "fixtures";
  auto* fix_cmd = app.add_subcommand("fixtures", "check or regenerate table1.json and table2.json");
  fix_cmd->add_flag("--regen", regen, "write the fixtures instead of checking them");
  fix_cmd->add_option("--dir", fixture_dir, "fixture directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const char* env = std::getenv("SHEET_ATLAS_JSON");
  const bool json = json_flag || (env != nullptr && std::string(env) == "1");

  try {
    if (sheets_cmd->parsed()) {
      const GroupKind kind = make_kind(family, rank);
      std::vector<SheetDescriptor> list;
      if (!levi.empty()) {
        list.push_back(select_sheet(kind, parse_levi(kind, levi)));
      } else if (kind.family == Family::A) {
        list = enumerate_sheets_gln(kind.rank);
      } else if (kind.family == Family::F4) {
        list.push_back(f4_b3_sheet());
      } else if (kind == GroupKind::sp(2)) {
        list = sheets_sp4();
      } else {
        for (const auto& l : maximal_levi_labels(kind)) list.push_back(maximal_levi_sheet(kind, l));
      }
      if (json) {
        Json arr = Json::array();
        for (const auto& s : list) arr.push_back(sheet_json(s));
        out << dump(arr);
      } else {
        print_sheets(out, list);
      }
      return 0;
    }

    if (info_cmd->parsed()) {
      const SheetDescriptor s = info_sel.resolve();
      if (json) out << dump(sheet_json(s));
      else print_key_values(out, sheet_json(s));
      return 0;
    }

    if (triple_cmd->parsed()) {
      VerificationReport report;
      Json payload = nullptr;
      if (case_text == "sp4-slice") {
        const auto v = as_printed ? SliceVariant::AsPrinted : SliceVariant::Corrected;
        report = verify_sp4_slice(v);
        if (matrices) payload = Json{{"x_t", matrix_json(sp4_slice_symbolic(v))}, {"s", matrix_json(sp4_flip_generator())}};
      } else {
        if (as_printed) throw UsageError("--as-printed only applies to --case sp4-slice");
        Sl2Triple t;
        if (case_text == "sp4") {
          t = sp4_triple();
          report = verify_triple("sp4 triple", t, SheetType::Type1, 4);
        } else if (case_text.rfind("gl:", 0) == 0) {
          const auto m = int_list(case_text.substr(3));
          if (m.size() != 2) throw UsageError("gl case must be gl:m1,m2");
          t = build_gl_triple(m[0], m[1]);
          const SheetDescriptor s = gln_sheet(Partition(m));
          report = verify_triple("GL(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ") triple", t, s.type_tag, s.d);
        } else if (case_text.rfind("bcd:", 0) == 0) {
          const auto parts = split(case_text.substr(4), ',');
          if (parts.size() != 3 || parts[0].size() < 2) throw UsageError("bcd case must be bcd:KIND,a,res, e.g. bcd:C3,2,1");
          const GroupKind kind = make_kind(parts[0].substr(0, 1), to_int(parts[0].substr(1)));
          const LeviLabel l = LeviLabel::max_levi(to_int(parts[1]), to_int(parts[2]));
          const SheetDescriptor s = maximal_levi_sheet(kind, l);
          t = build_bcd_triple(kind, l);
          report = verify_triple(s.id + " triple (class " + to_string(*s.class_tag) + ")", t, s.type_tag, s.d);
        } else {
          throw UsageError("unknown case '" + case_text + "'");
        }
        if (matrices) payload = triple_json(t);
      }
      if (json) {
        Json j = report_json(report);
        if (!payload.is_null()) j["matrices"] = payload;
        out << dump(j);
      } else {
        print_report(out, report);
      }
      return report.all_ok() ? 0 : 1;
    }

    if (hitchin_cmd->parsed()) {
      const CurveParams curve(genus);
      Json j;
      if (!hitchin_sel.has_sheet()) {
        if (hitchin_sel.family.empty()) throw UsageError("give --kind/--rank or a sheet");
        const GroupKind kind = make_kind(hitchin_sel.family, hitchin_sel.rank);
        const int base = dim_hitchin_base(kind, curve.genus);
        if (!json) {
          out << base << "\n";
          return 0;
        }
        j = Json{{"sheet", nullptr}, {"genus", curve.genus}, {"dim_base", base}, {"dim_s_base", nullptr},
                 {"components", nullptr}, {"cameral_degree", nullptr}, {"weights", nullptr}};
      } else {
        const SheetDescriptor s = hitchin_sel.resolve();
        const SliceWeights w = slice_weights(s);
        const int dim_s = s.levi.type == LeviLabel::Type::GL ? dim_s_hitchin_base_gln(s.levi.gl_parts, curve.genus)
                                                             : dim_from_weights(w, curve.genus);
        j["sheet"] = s.id;
        j["genus"] = curve.genus;
        j["dim_base"] = dim_hitchin_base(s.kind, curve.genus);
        j["dim_s_base"] = dim_s;
        j["components"] = integer_json(component_count(s.katsylo_order, curve.genus));
        j["cameral_degree"] = s.dixmier ? integer_json(s_cameral_degree(s)) : Json(nullptr);
        j["weights"] = w.weights;
      }
      if (json) out << dump(j);
      else print_key_values(out, j);
      return 0;
    }

    if (mu_cmd->parsed()) {
      const Partition m(int_list(profile_text));
      const auto point = make_base_point<Rational>(profile(m), parse_factors(factors_text));
      Json factors = Json::array();
      for (const auto& f : point.factors) factors.push_back(graded_json(f));
      Json j{{"profile", profile_json(point.profile)},
             {"factors", factors},
             {"image", graded_json(mu_s(point))},
             {"min_poly", graded_json(min_poly(point))},
             {"in_heart", in_heart(point)}};
      if (json) {
        out << dump(j);
      } else {
        out << "image:     " << to_string(mu_s(point)) << "\n";
        out << "min_poly:  " << to_string(min_poly(point)) << "\n";
        out << "in_heart:  " << (in_heart(point) ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (mult_cmd->parsed()) {
      SlicePoint p{find_sheet(mult_sheet), {}};
      for (const auto& x : split(z_text, ',')) p.z.push_back(parse_rational(x));
      Json z = Json::array();
      for (const auto& x : p.z) z.push_back(rational_json(x));
      Json j{{"sheet", p.sheet.id},
             {"z", z},
             {"inertia_order", inertia_order(p)},
             {"multiplicity", orbit_method_multiplicity(p)},
             {"polarisations", p.sheet.dixmier ? Json(polarisation_orbit_count(p.sheet)) : Json(nullptr)}};
      if (json) out << dump(j);
      else print_key_values(out, j);
      return 0;
    }

    if (real_cmd->parsed()) {
      if (real_genus) (void)CurveParams(*real_genus);
      const Json j = real_report_json(sheet_of_real_form(parse_real_form(label_text)), real_genus);
      if (json) out << dump(j);
      else print_key_values(out, j);
      return 0;
    }

    if (fix_cmd->parsed()) {
      namespace fs = std::filesystem;
      const std::vector<std::pair<std::string, std::string>> files{{"table1.json", table1_fixture()},
                                                                   {"table2.json", table2_fixture()}};
      bool all_same = true;
      for (const auto& [name, text] : files) {
        const fs::path path = fs::path(fixture_dir) / name;
        if (regen) {
          fs::create_directories(fixture_dir);
          std::ofstream f(path, std::ios::binary);
          f << text;
          if (!f) throw DomainError("cannot write " + path.string());
          out << "wrote " << path.string() << "\n";
          continue;
        }
        std::ifstream f(path, std::ios::binary);
        std::stringstream buf;
        buf << f.rdbuf();
        const bool same = f.good() || f.eof() ? buf.str() == text : false;
        all_same = all_same && same;
        out << path.string() << ": " << (same ? "up to date" : "differs") << "\n";
      }
      return all_same ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sheet_atlas
