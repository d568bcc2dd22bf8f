#include "cmcells/blocks.hpp"

#include <algorithm>

#include "cmcells/errors.hpp"
#include "cmcells/parallel.hpp"
#include "cmcells/set_partition.hpp"

namespace cmcells {

Multipartition permute_components(const Permutation& w, const Multipartition& mp) {
  if (w.size() != mp.level()) throw InvalidParameter("permutation and multipartition levels differ");
  std::vector<Partition> out(mp.level());
  for (int i = 0; i < mp.level(); ++i) out[w(i)] = mp[i];
  return Multipartition(std::move(out));
}

std::vector<std::vector<std::size_t>> BlockPartition::index_classes() const {
  auto all = enumerate_multipartitions(ell, n);
  std::map<Multipartition, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  std::vector<std::vector<std::size_t>> classes;
  for (const auto& block : blocks) {
    std::vector<std::size_t> ids;
    for (const auto& mp : block.members) ids.push_back(index.at(mp));
    classes.push_back(std::move(ids));
  }
  return canonical_set_partition(std::move(classes));
}

BlockPartition cm_partition_for(int n, const ThetaPoint& theta, const ReductionResult& reduction,
                                const BlockOptions& options) {
  const int ell = reduction.element.ell();
  const Charge& s = reduction.element.translation();
  const Permutation& w = reduction.element.permutation();
  auto members = enumerate_multipartitions(ell, n, options.max_size, options.max_count);
  auto hearts = parallel_map<Partition>(members.size(), options.workers, [&](std::size_t i) {
    return j_heart(tau(s, permute_components(w, members[i])), reduction.type);
  });

  BlockPartition out;
  out.ell = ell;
  out.n = n;
  out.theta = theta;
  out.reduction = reduction;
  for (auto& [heart, group] : group_by_key(members, hearts)) {
    out.blocks.push_back(Block{heart, std::move(group)});
  }
  return out;
}

BlockPartition cm_partition(int ell, int n, const ThetaPoint& theta, const BlockOptions& options) {
  if (theta.ell() != ell) {
    throw InvalidParameter("theta has " + std::to_string(theta.ell()) + " coordinates but ell = " +
                           std::to_string(ell));
  }
  if (n < 0) throw InvalidParameter("n must be nonnegative");
  return cm_partition_for(n, theta, reduce_to_fundamental(theta), options);
}

BlockPartition cm_partition_from_c_type_B(const Rational& c_s, const Rational& c_t, int n,
                                          const BlockOptions& options) {
  if (c_s.is_zero() || c_t.is_zero()) {
    throw InvalidParameter("type B parameters must be nonzero (got c_s = " + c_s.str() +
                           ", c_t = " + c_t.str() + ")");
  }
  ThetaPoint theta = normalize_to_theta1(theta_from_c_type_B(c_s.abs(), c_t.abs()));
  return cm_partition(2, n, theta, options);
}

std::vector<BlockPartition> cm_partitions_adjacent(int ell, int n, const ThetaPoint& theta,
                                                   const BlockOptions& options) {
  if (theta.ell() != ell) throw InvalidParameter("theta does not have ell coordinates");
  std::vector<BlockPartition> out;
  for (const auto& reduction : adjacent_alcove_reductions(theta)) {
    out.push_back(cm_partition_for(n, theta, reduction, options));
  }
  return out;
}

BlockStatistics block_statistics(const BlockPartition& bp) {
  BlockStatistics stats;
  stats.block_count = bp.blocks.size();
  for (const auto& block : bp.blocks) {
    stats.sizes.push_back(block.members.size());
    stats.total += block.members.size();
    ++stats.size_counts[block.members.size()];
  }
  std::sort(stats.sizes.begin(), stats.sizes.end(), std::greater<>());
  return stats;
}

}  // namespace cmcells
