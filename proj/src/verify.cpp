#include "cmcells/verify.hpp"

#include <algorithm>
#include <map>

#include "cmcells/errors.hpp"
#include "cmcells/parallel.hpp"
#include "cmcells/set_partition.hpp"

namespace cmcells {

namespace {

ThetaPoint wall_point(int r) { return ThetaPoint({Rational(-r), Rational(r + 1)}); }

std::string describe(const std::vector<Partition>& cls) {
  std::string out = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? " " : "") + cls[i].str();
  return out + "}";
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceResult& i) { return i.passed(); });
}

const InstanceResult* VerifyReport::first_failure() const {
  for (const auto& i : instances) {
    if (!i.passed()) return &i;
  }
  return nullptr;
}

ReductionResult type_b_wall_reduction(int r) {
  if (r < 0) throw InvalidParameter("wall index r must be nonnegative");
  const AffineElement label = type_b_alcove_label(-r);
  for (auto& reduction : adjacent_alcove_reductions(wall_point(r))) {
    if (reduction.element == label) return reduction;
  }
  throw ContractViolation("no reduction of (-r, r+1) lands in the alcove A_{-r} for r = " + std::to_string(r));
}

std::vector<std::vector<Partition>> transported_blocks(int n, int r, Fault fault) {
  ReductionResult reduction = type_b_wall_reduction(r);
  if (fault == Fault::flip_residue_parity) reduction.type = TypeJ::single(1 - r % 2, 2);
  const BlockPartition bp = cm_partition_for(n, wall_point(r), reduction);
  const Charge& s = reduction.element.translation();
  const Permutation& w = reduction.element.permutation();
  std::vector<std::vector<Partition>> classes;
  for (const auto& block : bp.blocks) {
    std::vector<Partition> images;
    for (const auto& mp : block.members) {
      Partition lambda = tau(s, permute_components(w, mp));
      if (!in_P_r(lambda, r)) {
        throw ContractViolation("tau_s sends " + mp.str() + " to " + lambda.str() + " outside P_r(n)");
      }
      images.push_back(std::move(lambda));
    }
    classes.push_back(std::move(images));
  }
  return canonical_set_partition(std::move(classes));
}

InstanceResult verify_instance(int n, int r, Fault fault) {
  InstanceResult result;
  result.n = n;
  result.r = r;

  const CellPartition cells = r_cells(n, r);
  result.cells = cells.cells.size();
  result.edges = cells.edges.size();
  for (const auto& c : cells.cells) result.shapes += c.size();
  const auto cell_classes = canonical_set_partition(cells.cells);
  const auto block_classes = transported_blocks(n, r, fault);
  result.cells_match = cell_classes == block_classes;

  if (!result.cells_match) {
    std::map<Partition, std::vector<Partition>> cell_of;
    std::map<Partition, std::vector<Partition>> block_of;
    for (const auto& c : cell_classes) for (const auto& x : c) cell_of[x] = c;
    for (const auto& c : block_classes) for (const auto& x : c) block_of[x] = c;
    for (const auto& [shape, cell] : cell_of) {
      if (block_of[shape] != cell) {
        result.counterexample = "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + shape.str() +
                                " lies in r-cell " + describe(cell) + " but in CM block " +
                                describe(block_of[shape]);
        break;
      }
    }
  }

  auto variants = cm_partitions_adjacent(2, n, wall_point(r));
  result.wall_invariant = variants.size() == 2;
  for (const auto& v : variants) {
    if (v.index_classes() != variants.front().index_classes()) result.wall_invariant = false;
  }
  if (!result.wall_invariant && result.counterexample.empty()) {
    result.counterexample = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                            ": adjacent alcoves of the wall give different block partitions";
  }
  return result;
}

VerifyReport run_verification(const VerifyOptions& options) {
  std::vector<std::pair<int, int>> grid;
  for (int n = options.min_n; n <= options.max_n; ++n) {
    for (int r = 0; r <= options.max_r; ++r) grid.emplace_back(n, r);
  }
  for (const auto& e : options.extra) {
    if (std::find(grid.begin(), grid.end(), e) == grid.end()) grid.push_back(e);
  }
  VerifyReport report;
  report.instances = parallel_map<InstanceResult>(grid.size(), options.workers, [&](std::size_t i) {
    return verify_instance(grid[i].first, grid[i].second, options.fault);
  });
  return report;
}

}  // namespace cmcells
