#include "sheet_atlas/realforms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sheet_atlas {

RealFormLabel RealFormLabel::su(int p, int q) {
  RealFormLabel l;
  l.type = Type::SU;
  l.p = p;
  l.q = q;
  l.validate();
  return l;
}

RealFormLabel RealFormLabel::so_star(int n) {
  RealFormLabel l;
  l.type = Type::SOStar;
  l.n = n;
  l.validate();
  return l;
}

void RealFormLabel::validate() const {
  if (type == Type::SU) {
    if (q < 1 || p < q) throw DomainError("SU(p,q) needs p >= q >= 1");
  } else if (n < 3) {
    throw DomainError("SO*(2n) needs n >= 3");
  }
}

std::string to_string(const RealFormLabel& l) {
  if (l.type == RealFormLabel::Type::SU) return "SU(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
  return "SO*(" + std::to_string(2 * l.n) + ")";
}

RealFormLabel parse_real_form(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("real form '" + text + "' must be SU:p,q or SOSTAR:n");
  std::string head = text.substr(0, colon);
  std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::toupper(c); });
  std::vector<int> nums;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw DomainError("bad integer '" + item + "' in real form '" + text + "'");
    }
  }
  if (head == "SU" && nums.size() == 2) return RealFormLabel::su(nums[0], nums[1]);
  if (head == "SOSTAR" && nums.size() == 1) return RealFormLabel::so_star(nums[0]);
  throw DomainError("real form '" + text + "' must be SU:p,q or SOSTAR:n");
}

Rational GenusLinear::at(int genus) const { return coefficient * (genus - 1); }

RealSheetReport sheet_of_real_form(const RealFormLabel& label) {
  label.validate();
  RealSheetReport r;
  r.label = label;
  r.positive_dim_fibres = abelianized_fiber_dim_is_positive(label);
  if (label.type == RealFormLabel::Type::SU) {
    const int p = label.p, q = label.q, diff = p - q;
    r.complex_group = GroupKind::gl(p + q);
    std::vector<int> parts(static_cast<std::size_t>(2 * q), 1);
    if (diff > 0) parts.push_back(diff);
    r.sheet_partition = Partition(parts);
    std::string levi;
    for (int part : r.sheet_partition->parts()) levi += (levi.empty() ? "GL_" : " x GL_") + std::to_string(part);
    r.levi_description = levi;
    r.quasi_split = diff <= 1;
    if (diff > 1) {
      r.abelianised_target = "Hitchin fibration for U(" + std::to_string(q) + "," + std::to_string(q) + ") at maximal Toledo invariant";
      r.extra.push_back({"toledo_max", Rational(2 * q)});
    } else if (diff == 1) {
      r.abelianised_target = "Hitchin fibration for " + to_string(label);
      r.notes.push_back("the reduction to U(q,q) is still defined for p - q = 1, but it is nowhere injective because SU(q+1,q) is quasi-split");
    } else {
      r.abelianised_target = "Hitchin fibration for " + to_string(label);
      r.notes.push_back("p = q: the abelianised fibration is the Hitchin fibration of the group itself");
    }
    return r;
  }
  r.complex_group = GroupKind::so_even(label.n);
  // SO*(2n) is not quasi-split for any n >= 3 (standard classification).
  r.quasi_split = false;
  if (label.n % 2 == 1) {
    const int m = (label.n - 1) / 2;
    r.levi_description = (m == 1 ? std::string("GL_2") : "GL_2^" + std::to_string(m)) + " x G_m";
    r.abelianised_target = "Pic(Σ) x A_K(" + to_string(label) + ")";
    r.jh_rank = 1;
    r.extra.push_back({"fixed_degree", Rational(4 * m)});
    r.notes.push_back("J^H is recorded by its rank only");
  } else {
    r.notes.push_back("Levi and abelianisation data are only computed for SO*(4m+2)");
  }
  return r;
}

Rational toledo(int p, int q, long deg_v, long deg_w) {
  if (p < 1 || q < 1) throw DomainError("toledo needs p, q >= 1");
  return Rational(Rational(2 * (q * deg_v - p * deg_w)) / (p + q));
}

Rational toledo_max(int q, int g) {
  if (q < 1) throw DomainError("toledo_max needs q >= 1");
  if (g < 2) throw DomainError("genus must be at least 2, got " + std::to_string(g));
  return Rational(2 * q * (g - 1));
}

bool abelianized_fiber_dim_is_positive(const RealFormLabel& label) {
  label.validate();
  if (label.type == RealFormLabel::Type::SU) return label.p - label.q > 1;
  return label.n % 2 == 1;
}

}  // namespace sheet_atlas
