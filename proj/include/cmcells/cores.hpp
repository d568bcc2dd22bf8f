#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmcells/partition.hpp"

namespace cmcells {

/// A sum-zero integer vector s in Z_0^ell.
class Charge {
 public:
  Charge() = default;
  /// Throws InvalidParameter if the entries do not sum to zero.
  explicit Charge(std::vector<int> entries);
  static Charge zero(int ell) { return Charge(std::vector<int>(ell, 0)); }

  int level() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t k) const { return entries_[k]; }

  std::string str() const;

  friend auto operator<=>(const Charge&, const Charge&) = default;

 private:
  std::vector<int> entries_;
};

/// An ell-tuple of partitions. Empty components are allowed.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  static Multipartition empty(int ell) { return Multipartition(std::vector<Partition>(ell)); }

  int level() const { return static_cast<int>(components_.size()); }
  int size() const;
  const std::vector<Partition>& components() const { return components_; }
  const Partition& operator[](std::size_t k) const { return components_[k]; }

  std::string str() const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// Default ceiling on |P(ell, n)| for a single enumeration.
inline constexpr std::size_t kDefaultMaxMultipartitions = 2'000'000;

/// All ell-multipartitions of n. Canonical order: component size vectors in
/// decreasing lexicographic order, then components in decreasing lexicographic
/// order with component 0 varying slowest. The first entry is ((n), ∅, ..., ∅).
std::vector<Multipartition> enumerate_multipartitions(
    int ell, int n, int max_size = kDefaultMaxPartitionSize,
    std::size_t max_count = kDefaultMaxMultipartitions);

/// An ell-runner abacus. Runner k holds the beta-numbers congruent to k mod ell;
/// every position below `floor()` is occupied on every runner.
class Abacus {
 public:
  static Abacus of_partition(const Partition& lambda, int ell);
  static Abacus of_quotient(const Charge& s, const Multipartition& quotient);

  int ell() const { return static_cast<int>(runners_.size()); }
  int floor() const { return floor_; }
  /// Bead positions at or above floor() on runner k, descending.
  const std::vector<int>& runner(int k) const { return runners_.at(k); }

  Charge charges() const;
  Multipartition quotient() const;
  Partition partition() const;
  /// Slides every bead as far up its runner as it goes.
  Abacus core() const;

 private:
  Abacus(int floor, std::vector<std::vector<int>> runners)
      : floor_(floor), runners_(std::move(runners)) {}

  int floor_ = 0;
  std::vector<std::vector<int>> runners_;
};

Partition ell_core(const Partition& lambda, int ell);

/// The ell-core whose abacus has runner charges s.
Partition core_of_charge(const Charge& s);

/// The bijection (s, quotient) -> partition. Runner k carries component k.
Partition tau(const Charge& s, const Multipartition& mp);

/// Inverse of tau for a fixed charge. Throws WrongCore if the ell-core of
/// lambda is not core_of_charge(s).
Multipartition tau_inverse(const Charge& s, const Partition& lambda);

/// Partitions of r(r+1)/2 + 2n whose 2-core is the staircase (r, ..., 1),
/// in decreasing lexicographic order. Filters enumerate_partitions, so the
/// cost is O(p(N) N) for N = r(r+1)/2 + 2n.
std::vector<Partition> enumerate_P_r(int n, int r, int max_size = kDefaultMaxPartitionSize);

/// Size of the rank-r staircase, r(r+1)/2.
inline int staircase_size(int r) { return r * (r + 1) / 2; }

}  // namespace cmcells
