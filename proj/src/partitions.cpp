#include "sheet_atlas/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sheet_atlas/rational.hpp"

namespace sheet_atlas {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw DomainError("partition parts must be positive, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_blocks(const std::vector<std::pair<int, int>>& size_count) {
  std::vector<int> parts;
  for (auto [size, count] : size_count) {
    if (count < 0) throw DomainError("negative block count in partition");
    parts.insert(parts.end(), static_cast<std::size_t>(count), size);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int size) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

int MultiplicityProfile::weighted_total() const {
  int t = 0;
  for (int i = 1; i <= s(); ++i) t += i * l(i);
  return t;
}

int MultiplicityProfile::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Partition conjugate(const Partition& m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m.largest()));
  for (int i = 1; i <= m.largest(); ++i) {
    out.push_back(static_cast<int>(std::count_if(m.parts().begin(), m.parts().end(), [i](int x) { return x >= i; })));
  }
  return Partition(std::move(out));
}

MultiplicityProfile profile(const Partition& m) {
  MultiplicityProfile prof;
  prof.counts.assign(static_cast<std::size_t>(m.largest()), 0);
  for (int p : m.parts()) ++prof.counts[static_cast<std::size_t>(p - 1)];
  return prof;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::F4: return "F4";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "F4") return Family::F4;
  throw DomainError("unknown group kind '" + s + "' (expected A, B, C, D or F4)");
}

std::string to_string(const GroupKind& k) {
  if (k.family == Family::F4) return "F4";
  return family_letter(k.family) + std::to_string(k.rank);
}

void GroupKind::validate() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
      if (rank < 1) throw DomainError("rank must be positive for " + family_letter(family));
      return;
    case Family::D:
      if (rank < 2) throw DomainError("type D requires rank >= 2");
      return;
    case Family::F4:
      if (rank != 4) throw DomainError("F4 has rank 4");
      return;
  }
}

int GroupKind::natural_dim() const {
  switch (family) {
    case Family::A: return rank;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D: return 2 * rank;
    case Family::F4: return 26;
  }
  return 0;
}

int GroupKind::dim_g() const {
  switch (family) {
    case Family::A: return rank * rank;
    case Family::B:
    case Family::C: return rank * (2 * rank + 1);
    case Family::D: return rank * (2 * rank - 1);
    case Family::F4: return 52;
  }
  return 0;
}

bool is_valid_orbit_partition(const GroupKind& kind, const Partition& p) {
  kind.validate();
  if (kind.family == Family::F4) throw DomainError("F4 orbits are not labelled by partitions");
  if (p.n() != kind.natural_dim()) {
    throw DomainError("partition " + to_string(p) + " of " + std::to_string(p.n()) + " does not match " +
                      to_string(kind) + " (natural dimension " + std::to_string(kind.natural_dim()) + ")");
  }
  if (kind.family == Family::A) return true;
  const int bad_parity = kind.orthogonal() ? 0 : 1;
  const auto prof = profile(p);
  for (int i = 1; i <= prof.s(); ++i) {
    if (i % 2 == bad_parity && prof.l(i) % 2 != 0) return false;
  }
  return true;
}

int nilpotent_centralizer_dim(const GroupKind& kind, const Partition& p) {
  const auto dual = conjugate(p);
  int squares = 0;
  for (int x : dual.parts()) squares += x * x;
  int odd_parts = 0;
  for (int x : p.parts()) odd_parts += x % 2;
  switch (kind.family) {
    case Family::A: return squares;
    case Family::B:
    case Family::D: return (squares - odd_parts) / 2;
    case Family::C: return (squares + odd_parts) / 2;
    case Family::F4: break;
  }
  throw DomainError("no partition formula for F4");
}

}  // namespace sheet_atlas
