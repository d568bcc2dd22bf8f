#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cmcells/alcove.hpp"
#include "cmcells/blocks.hpp"
#include "cmcells/domino.hpp"

namespace cmcells {

/// Negative control: replace J = {r mod 2} by its complement on the block
/// side only. Any correct harness must then report a counterexample.
enum class Fault { none, flip_residue_parity };

struct VerifyOptions {
  int min_n = 1;
  int max_n = 4;
  int max_r = 3;
  /// Extra (n, r) instances beyond the grid, e.g. {5, 0}, {5, 1}, {5, 2}.
  std::vector<std::pair<int, int>> extra;
  Fault fault = Fault::none;
  unsigned workers = 1;
};

struct InstanceResult {
  int n = 0;
  int r = 0;
  std::size_t shapes = 0;
  std::size_t cells = 0;
  std::size_t edges = 0;
  bool cells_match = false;     ///< transported blocks == r-cells
  bool wall_invariant = false;  ///< both adjacent alcoves give one set partition
  std::string counterexample;   ///< empty when both checks pass

  bool passed() const { return cells_match && wall_invariant; }
};

struct VerifyReport {
  std::vector<InstanceResult> instances;
  bool passed() const;
  const InstanceResult* first_failure() const;
};

/// The ell = 2 reduction of the wall point (-r, r+1) that uses the alcove
/// A_{-r}, whose charge has core (r, ..., 1).
ReductionResult type_b_wall_reduction(int r);

/// The CM_c-partition of P(2, n) at the wall (-r, r+1), pushed to P_r(n)
/// through mp -> tau_s(w.mp). Classes are in label-free canonical form.
std::vector<std::vector<Partition>> transported_blocks(int n, int r, Fault fault = Fault::none);

InstanceResult verify_instance(int n, int r, Fault fault = Fault::none);

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace cmcells
