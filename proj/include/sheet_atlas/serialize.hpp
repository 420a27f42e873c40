#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sheet_atlas/graded_polynomial.hpp"
#include "sheet_atlas/matrix.hpp"
#include "sheet_atlas/partitions.hpp"
#include "sheet_atlas/realforms.hpp"
#include "sheet_atlas/sheets.hpp"
#include "sheet_atlas/triples.hpp"

namespace sheet_atlas {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Integers that fit in 64 bits become numbers, larger ones decimal strings.
Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json profile_json(const MultiplicityProfile& p);

Json matrix_json(const RationalMatrix& m);
/// Entries become coefficient arrays in t, lowest degree first.
Json matrix_json(const ParamMatrix& m);

/// {"degree": d, "coefficients": [1, a_1, ..., a_d]}.
Json graded_json(const GradedPolynomial<Rational>& p);

Json kind_json(const GroupKind& k);
GroupKind kind_from_json(const Json& j);

Json levi_json(const LeviLabel& l);
LeviLabel levi_from_json(const Json& j);

Json sheet_json(const SheetDescriptor& s);
SheetDescriptor sheet_from_json(const Json& j);

Json report_json(const VerificationReport& r);
Json triple_json(const Sl2Triple& t);
Json real_report_json(const RealSheetReport& r, std::optional<int> genus);

/// The sp4 table and the maximal-Levi table as pretty-printed JSON text,
/// newline terminated. These are the committed fixtures.
std::string table1_fixture();
std::string table2_fixture();

/// Parses a fixture and re-serialises it; identity on well-formed fixtures.
std::string roundtrip_fixture(const std::string& text);

/// indent 2, trailing newline.
std::string dump(const Json& j);

}  // namespace sheet_atlas
