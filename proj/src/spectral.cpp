#include "sheet_atlas/spectral.hpp"

#include <sstream>

namespace sheet_atlas {

template GradedPolynomial<Rational> mu_s(const SheetBasePoint<Rational>&);
template GradedPolynomial<RationalPoly> mu_s(const SheetBasePoint<RationalPoly>&);

GradedPolynomial<Rational> parse_factor(const std::string& text) {
  std::vector<Rational> desc;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) desc.push_back(parse_rational(item));
  if (desc.empty()) throw DomainError("empty factor");
  if (desc.front() != 1) throw DomainError("factor '" + text + "' is not monic");
  return GradedPolynomial<Rational>(RationalPoly(std::vector<Rational>(desc.rbegin(), desc.rend())));
}

std::vector<GradedPolynomial<Rational>> parse_factors(const std::string& text) {
  std::vector<GradedPolynomial<Rational>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_factor(item));
  if (out.empty()) throw DomainError("no factors given");
  return out;
}

}  // namespace sheet_atlas
