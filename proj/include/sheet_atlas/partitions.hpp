#pragma once

#include <map>
#include <string>
#include <vector>

namespace sheet_atlas {

/// Integer partition, parts stored largest first. The empty partition of 0 is
/// allowed.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into weakly decreasing order. Throws DomainError on a
  /// non-positive part.
  explicit Partition(std::vector<int> parts);

  /// Builds (size^count) blocks, e.g. from_blocks({{3, q}, {2, a - q}}).
  /// Blocks with count 0 are skipped.
  static Partition from_blocks(const std::vector<std::pair<int, int>>& size_count);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to `size`.
  int multiplicity(int size) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Reverse-lexicographic order: (4) sorts before (3,1) before (2,2).
  friend bool reverse_lex_less(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::string to_string(const Partition& p);

/// l_i for i = 1..s (s = largest part). Index 0 of `counts` is l_1.
struct MultiplicityProfile {
  std::vector<int> counts;

  int s() const { return static_cast<int>(counts.size()); }
  int l(int i) const { return (i >= 1 && i <= s()) ? counts[static_cast<std::size_t>(i - 1)] : 0; }
  /// Sum of i * l_i.
  int weighted_total() const;
  /// Sum of l_i.
  int total() const;

  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

Partition conjugate(const Partition& m);
MultiplicityProfile profile(const Partition& m);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

enum class Family { A, B, C, D, F4 };

/// GL_n (A, rank = n), SO_{2r+1} (B), Sp_{2r} (C), SO_{2r} (D), or F4.
struct GroupKind {
  Family family = Family::A;
  int rank = 1;

  static GroupKind gl(int n) { return {Family::A, n}; }
  static GroupKind so_odd(int r) { return {Family::B, r}; }
  static GroupKind sp(int r) { return {Family::C, r}; }
  static GroupKind so_even(int r) { return {Family::D, r}; }
  static GroupKind f4() { return {Family::F4, 4}; }

  /// Throws DomainError if the rank is not allowed for the family.
  void validate() const;
  /// Dimension of the defining representation (n for A, 2r+1, 2r, 2r).
  int natural_dim() const;
  int dim_g() const;
  bool orthogonal() const { return family == Family::B || family == Family::D; }

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

std::string family_letter(Family f);
Family parse_family(const std::string& s);
std::string to_string(const GroupKind& k);

/// Nilpotent-orbit parity rule: orthogonal kinds need even parts with even
/// multiplicity, symplectic kinds odd parts with even multiplicity. Throws
/// DomainError when p does not partition the natural dimension of `kind`.
bool is_valid_orbit_partition(const GroupKind& kind, const Partition& p);

/// Centraliser dimension of a nilpotent with Jordan type p, by the classical
/// closed forms in terms of the conjugate partition.
int nilpotent_centralizer_dim(const GroupKind& kind, const Partition& p);

}  // namespace sheet_atlas
