#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cmcells {

/// Default ceiling on the size of partitions that may be enumerated.
inline constexpr int kDefaultMaxPartitionSize = 40;

/// A box s_pq of a Young diagram: row p, column q, both 1-indexed,
/// diagram justified to the northwest. Ordered row-major.
struct Box {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Box&, const Box&) = default;
  std::string str() const;
};

/// A residue class modulo ell, always normalized to 0 <= value < modulus.
struct ResidueClass {
  int value = 0;
  int modulus = 1;

  ResidueClass() = default;
  ResidueClass(int value, int modulus);

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// Residue p - q mod ell of a box.
ResidueClass residue(const Box& b, int ell);

/// A subset J of {0, ..., ell-1}.
class TypeJ {
 public:
  explicit TypeJ(int modulus = 1, std::vector<int> members = {});

  static TypeJ single(int j, int modulus) { return TypeJ(modulus, {j}); }

  int modulus() const { return modulus_; }
  /// Sorted, duplicate-free.
  const std::vector<int>& members() const { return members_; }
  bool contains(int j) const;
  bool empty() const { return members_.empty(); }

  friend bool operator==(const TypeJ&, const TypeJ&) = default;

 private:
  int modulus_;
  std::vector<int> members_;
};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Comparison is lexicographic on the parts; the canonical enumeration order
/// used throughout the engine is *decreasing* lexicographic.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidParameter unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Builds a partition from a sequence that may contain trailing zeros.
  static Partition from_rows(std::vector<int> rows);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Length of row p (1-indexed); 0 beyond the last row.
  int row(int p) const;
  /// Length of column q (1-indexed); 0 beyond the first row.
  int column(int q) const;

  bool contains(const Box& b) const;
  Partition conjugate() const;

  /// The partition obtained by deleting a removable box.
  Partition without(const Box& b) const;
  /// The partition obtained by adding an addable box.
  Partition with(const Box& b) const;

  bool is_removable(const Box& b) const;
  bool is_addable(const Box& b) const;

  /// Every cell of `other` lies in this diagram.
  bool includes(const Partition& other) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// The staircase (r, r-1, ..., 1).
Partition staircase(int r);

/// All boxes of the diagram in row-major order.
std::vector<Box> boxes(const Partition& lambda);

std::vector<Box> removable_boxes(const Partition& lambda);
std::vector<Box> addable_boxes(const Partition& lambda);
/// j-removable boxes, row-major.
std::vector<Box> removable_boxes(const Partition& lambda, ResidueClass j);
/// j-addable boxes, row-major.
std::vector<Box> addable_boxes(const Partition& lambda, ResidueClass j);

/// Repeatedly strips j-removable boxes with j in J. Greedy: the first
/// eligible box in row order is removed each round.
Partition j_heart(const Partition& lambda, const TypeJ& J);

bool same_j_class(const Partition& lambda, const Partition& mu, const TypeJ& J);

/// All partitions of n in decreasing lexicographic order.
/// Throws EnumerationLimit if n exceeds max_size.
std::vector<Partition> enumerate_partitions(int n, int max_size = kDefaultMaxPartitionSize);

}  // namespace cmcells
