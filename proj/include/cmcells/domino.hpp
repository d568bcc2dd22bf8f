#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cmcells/cores.hpp"
#include "cmcells/partition.hpp"

namespace cmcells {

/// Two edge-adjacent boxes, stored in rim order (south-west box first).
struct Domino {
  Box first;
  Box second;

  bool vertical() const { return first.col == second.col; }
  bool contains(const Box& b) const { return b == first || b == second; }

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// A standard domino tableau of rank r: the staircase (r, ..., 1) is filled
/// with 0 and labels 1..n each occupy one domino; labels weakly increase
/// along rows and down columns.
class DominoTableau {
 public:
  /// `labels[p-1][q-1]` is the label of s_pq; rows must match `shape`.
  /// Throws InvalidParameter if any tableau invariant fails.
  DominoTableau(Partition shape, int rank, std::vector<std::vector<int>> labels);

  /// The occupied cells must form a Young diagram.
  static DominoTableau from_cells(int rank, const std::map<Box, int>& cells);

  const Partition& shape() const { return shape_; }
  int rank() const { return rank_; }
  int n() const { return n_; }
  const std::vector<std::vector<int>>& labels() const { return labels_; }

  /// Label of b, or -1 when b is outside the diagram.
  int label(const Box& b) const;
  /// The domino carrying label k, 1 <= k <= n.
  Domino domino(int k) const;

  std::map<Box, int> cells() const;
  std::string str() const;

  friend bool operator==(const DominoTableau&, const DominoTableau&) = default;

 private:
  Partition shape_;
  int rank_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> labels_;
};

/// An edge-connected strip of rim boxes, listed from the south-west end to the
/// north-east end, with a domino tiling in the same order.
struct RimRibbon {
  std::vector<Box> boxes;
  std::vector<Domino> tiling;

  const Box& start() const { return boxes.front(); }
  const Box& end() const { return boxes.back(); }
  bool contains(const Box& b) const;
};

/// Moving a j-removable box to a j-addable box. Forward moves satisfy
/// removed = s_pq, added = s_tu with p >= t, q <= u and no other j-addable or
/// j-removable box in the rectangle between them. A reverse move undoes a
/// forward move of its target shape.
struct ElementaryMove {
  Partition source;
  Box removed;
  Box added;
  int j = 0;
  bool reverse = false;

  Partition target() const { return source.without(removed).with(added); }
  /// The same move seen from the other side.
  ElementaryMove inverted() const;

  friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

/// Evidence that an elementary move is realized by moving through a cycle.
struct MoveWitness {
  DominoTableau tableau;  ///< shape is move.source
  RimRibbon ribbon;       ///< the cycle inside `tableau`
  DominoTableau moved;    ///< shape is move.target()
  RimRibbon image;        ///< the same labels inside `moved`
};

struct CellEdge {
  Partition from;
  Partition to;
  Box removed;
  Box added;
};

/// The r-cells of P_r(n). Cells and their members follow the canonical
/// (decreasing lexicographic) order of P_r(n); cells are ordered by first member.
struct CellPartition {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Partition>> cells;
  std::vector<CellEdge> edges;  ///< one per forward elementary move, each witnessed
};

struct CellOptions {
  int max_size = kDefaultMaxPartitionSize;
  std::size_t max_tableaux = 1'000'000;
  unsigned workers = 1;
};

/// Dominoes whose removal leaves a Young diagram.
std::vector<Domino> removable_dominoes(const Partition& lambda);

/// Whether lambda is in P_r(n) for n = (|lambda| - r(r+1)/2) / 2.
bool in_P_r(const Partition& lambda, int r);

/// All standard domino tableaux of shape lambda and rank r. Throws
/// InvalidShape unless lambda is in P_r(n).
std::vector<DominoTableau> enumerate_tableaux(const Partition& lambda, int r,
                                              const CellOptions& options = {});

/// Some tableau of shape lambda: dominoes are peeled off greedily.
DominoTableau any_tableau(const Partition& lambda, int r);

/// The rim ribbon of lambda from `start` to `end`, tiled by consecutive pairs
/// from `start`. Throws ContractViolation if `end` is not reached along the
/// rim or the ribbon has odd length.
RimRibbon tile_rim_ribbon(const Partition& lambda, const Box& start, const Box& end);

/// Violations of the tiling structure (pivot shape, diagonal exclusions) of a
/// ribbon running from a j-removable box to s_{t,u-1}. Empty when all hold.
std::vector<std::string> tiling_property_violations(const Partition& lambda, const RimRibbon& ribbon);

/// Moves every domino of the cycle through its pivot (the box of residue
/// r + 1 mod 2). Throws ContractViolation if the result is not a tableau.
DominoTableau move_through(const DominoTableau& tableau, const RimRibbon& ribbon);

/// The dominoes of `moved` carrying the labels that `ribbon` carries in `tableau`.
RimRibbon image_ribbon(const DominoTableau& tableau, const RimRibbon& ribbon,
                       const DominoTableau& moved);

/// Forward moves of lambda (j = r mod 2), then reverse moves.
std::vector<ElementaryMove> elementary_moves(const Partition& lambda, int r);

/// Builds the tableau and ribbon for a move, moves through, and checks the
/// target shape and the involution. Throws ContractViolation on any failure.
MoveWitness witness(const ElementaryMove& move, int r);

CellPartition r_cells(int n, int r, const CellOptions& options = {});

/// A move sequence from lambda to mu through the shape that puts the
/// removable boxes as far left as possible. Throws NoPath if the j-hearts
/// differ. Every step is witnessed.
std::vector<ElementaryMove> path_between(const Partition& lambda, const Partition& mu, int r);

/// Applies the moves in order; throws ContractViolation if a move's source
/// does not match the running shape.
Partition replay(const Partition& lambda, const std::vector<ElementaryMove>& moves);

}  // namespace cmcells
