#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cmcells/alcove.hpp"
#include "cmcells/cores.hpp"
#include "cmcells/partition.hpp"
#include "cmcells/rational.hpp"

namespace cmcells {

/// One block of the CM_c-partition, labelled by its shared J-heart.
struct Block {
  Partition heart;
  std::vector<Multipartition> members;  ///< canonical multipartition order
};

/// The CM_c-partition of P(ell, n). Blocks are ordered by their first member
/// in canonical multipartition order.
struct BlockPartition {
  int ell = 0;
  int n = 0;
  ThetaPoint theta;
  ReductionResult reduction;
  std::vector<Block> blocks;

  /// Label-free form: member indices into enumerate_multipartitions(ell, n).
  std::vector<std::vector<std::size_t>> index_classes() const;
};

struct BlockOptions {
  int max_size = kDefaultMaxPartitionSize;
  std::size_t max_count = kDefaultMaxMultipartitions;
  /// Threads used to evaluate hearts; 0 means hardware concurrency.
  unsigned workers = 1;
};

struct BlockStatistics {
  std::size_t block_count = 0;
  std::size_t total = 0;
  std::vector<std::size_t> sizes;                 ///< descending
  std::map<std::size_t, std::size_t> size_counts;  ///< size -> number of blocks
};

/// (w.mp)_{w(i)} = mp_i, i.e. component i of the result is mp_{w^{-1}(i)}.
Multipartition permute_components(const Permutation& w, const Multipartition& mp);

/// Blocks are fibres of mp -> j_heart(tau(s, w.mp), J) for the given data.
/// `theta` and `reduction` are recorded on the result as supplied.
BlockPartition cm_partition_for(int n, const ThetaPoint& theta, const ReductionResult& reduction,
                                const BlockOptions& options = {});

/// The CM_c-partition of P(ell, n) for theta in Theta_1, using the canonical
/// reduction of theta.
BlockPartition cm_partition(int ell, int n, const ThetaPoint& theta, const BlockOptions& options = {});

/// Type B entry point: signs of c_s and c_t are dropped, then
/// theta'(c) = (1 - c_t/c_s, c_t/c_s) is fed to cm_partition.
/// Throws InvalidParameter if either parameter is zero.
BlockPartition cm_partition_from_c_type_B(const Rational& c_s, const Rational& c_t, int n,
                                          const BlockOptions& options = {});

/// cm_partition_for every member of adjacent_alcove_reductions(theta). The
/// underlying set partitions must coincide; labels need not.
std::vector<BlockPartition> cm_partitions_adjacent(int ell, int n, const ThetaPoint& theta,
                                                   const BlockOptions& options = {});

BlockStatistics block_statistics(const BlockPartition& bp);

}  // namespace cmcells
