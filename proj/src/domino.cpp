#include "cmcells/domino.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cmcells/errors.hpp"
#include "cmcells/parallel.hpp"
#include "cmcells/set_partition.hpp"

namespace cmcells {

namespace {

bool adjacent(const Box& a, const Box& b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

int parity(const Box& b) { return residue(b, 2).value; }

Domino make_domino(Box a, Box b) {
  // South-west box first: the lower box of a vertical pair, the left box of
  // a horizontal pair.
  if (a.col == b.col ? a.row < b.row : a.col > b.col) std::swap(a, b);
  return Domino{a, b};
}

}  // namespace

DominoTableau::DominoTableau(Partition shape, int rank, std::vector<std::vector<int>> labels)
    : shape_(std::move(shape)), rank_(rank), labels_(std::move(labels)) {
  if (rank_ < 0) throw InvalidParameter("tableau rank must be nonnegative");
  if (static_cast<int>(labels_.size()) != shape_.length()) {
    throw InvalidParameter("label rows do not match the shape " + shape_.str());
  }
  const Partition core = staircase(rank_);
  std::map<int, std::vector<Box>> positions;
  for (int p = 1; p <= shape_.length(); ++p) {
    if (static_cast<int>(labels_[p - 1].size()) != shape_.row(p)) {
      throw InvalidParameter("label row " + std::to_string(p) + " does not match the shape " + shape_.str());
    }
    for (int q = 1; q <= shape_.row(p); ++q) {
      const int k = labels_[p - 1][q - 1];
      const Box b{p, q};
      if (k < 0) throw InvalidParameter("negative label at " + b.str());
      if ((k == 0) != core.contains(b)) {
        throw InvalidParameter("label 0 must fill exactly the staircase core; found " + std::to_string(k) +
                               " at " + b.str());
      }
      if (k > 0) positions[k].push_back(b);
      if (q > 1 && labels_[p - 1][q - 2] > k) throw InvalidParameter("labels decrease along row " + std::to_string(p));
      if (p > 1 && labels_[p - 2][q - 1] > k) throw InvalidParameter("labels decrease down column " + std::to_string(q));
    }
  }
  n_ = positions.empty() ? 0 : positions.rbegin()->first;
  if (static_cast<int>(positions.size()) != n_) throw InvalidParameter("labels 1..n are not all present");
  for (const auto& [k, where] : positions) {
    if (where.size() != 2 || !adjacent(where[0], where[1])) {
      throw InvalidParameter("label " + std::to_string(k) + " does not occupy a domino");
    }
  }
}

DominoTableau DominoTableau::from_cells(int rank, const std::map<Box, int>& cells) {
  std::vector<std::vector<int>> rows;
  for (const auto& [b, k] : cells) {
    if (b.row < 1 || b.col < 1) throw InvalidParameter("cell " + b.str() + " outside the quadrant");
    if (static_cast<int>(rows.size()) < b.row) rows.resize(b.row);
    auto& row = rows[b.row - 1];
    if (static_cast<int>(row.size()) != b.col - 1) {
      throw InvalidParameter("cells are not left-justified at " + b.str());
    }
    row.push_back(k);
  }
  std::vector<int> parts;
  for (const auto& row : rows) {
    if (row.empty()) throw InvalidParameter("empty row inside a diagram");
    parts.push_back(static_cast<int>(row.size()));
  }
  return DominoTableau(Partition(std::move(parts)), rank, std::move(rows));
}

int DominoTableau::label(const Box& b) const {
  if (!shape_.contains(b)) return -1;
  return labels_[b.row - 1][b.col - 1];
}

Domino DominoTableau::domino(int k) const {
  if (k < 1 || k > n_) throw InvalidParameter("no domino labelled " + std::to_string(k));
  std::vector<Box> where;
  for (int p = 1; p <= shape_.length(); ++p) {
    for (int q = 1; q <= shape_.row(p); ++q) {
      if (labels_[p - 1][q - 1] == k) where.push_back({p, q});
    }
  }
  return make_domino(where.at(0), where.at(1));
}

std::map<Box, int> DominoTableau::cells() const {
  std::map<Box, int> out;
  for (int p = 1; p <= shape_.length(); ++p) {
    for (int q = 1; q <= shape_.row(p); ++q) out.emplace(Box{p, q}, labels_[p - 1][q - 1]);
  }
  return out;
}

std::string DominoTableau::str() const {
  std::ostringstream os;
  for (const auto& row : labels_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

bool RimRibbon::contains(const Box& b) const {
  return std::find(boxes.begin(), boxes.end(), b) != boxes.end();
}

ElementaryMove ElementaryMove::inverted() const {
  return ElementaryMove{target(), added, removed, j, !reverse};
}

std::vector<Domino> removable_dominoes(const Partition& lambda) {
  std::vector<Domino> out;
  for (int p = 1; p <= lambda.length(); ++p) {
    const int len = lambda.row(p);
    if (len >= 2 && lambda.row(p + 1) <= len - 2) out.push_back(Domino{{p, len - 1}, {p, len}});
    if (lambda.row(p + 1) == len && lambda.row(p + 2) < len) out.push_back(Domino{{p + 1, len}, {p, len}});
  }
  return out;
}

bool in_P_r(const Partition& lambda, int r) {
  if (r < 0) return false;
  const int excess = lambda.size() - staircase_size(r);
  return excess >= 0 && excess % 2 == 0 && ell_core(lambda, 2) == staircase(r);
}

namespace {

void require_P_r(const Partition& lambda, int r) {
  if (!in_P_r(lambda, r)) {
    throw InvalidShape(lambda.str() + " does not have 2-core " + staircase(r).str());
  }
}

Partition remove_cells(const Partition& lambda, const std::vector<Box>& cells) {
  std::vector<int> rows = lambda.parts();
  std::map<int, int> removed_per_row;
  for (const Box& b : cells) {
    if (!lambda.contains(b)) throw ContractViolation(b.str() + " is not in " + lambda.str());
    ++removed_per_row[b.row];
  }
  for (const Box& b : cells) {
    if (b.col <= lambda.row(b.row) - removed_per_row[b.row]) {
      throw ContractViolation("removing " + b.str() + " leaves a hole in " + lambda.str());
    }
  }
  for (auto [row, count] : removed_per_row) rows[row - 1] -= count;
  try {
    return Partition::from_rows(std::move(rows));
  } catch (const InvalidParameter&) {
    throw ContractViolation("removing the ribbon from " + lambda.str() + " does not leave a diagram");
  }
}

using CellMap = std::map<Box, int>;

void tableaux_rec(const Partition& shape, const Partition& core, int label,
                  std::map<Partition, std::vector<CellMap>>& memo, std::size_t limit) {
  if (memo.contains(shape)) return;
  std::vector<CellMap> out;
  if (shape == core) {
    CellMap zeros;
    for (const Box& b : boxes(core)) zeros.emplace(b, 0);
    out.push_back(std::move(zeros));
  } else {
    for (const Domino& d : removable_dominoes(shape)) {
      if (core.contains(d.first) || core.contains(d.second)) continue;
      Partition smaller = remove_cells(shape, {d.first, d.second});
      tableaux_rec(smaller, core, label - 1, memo, limit);
      for (CellMap cells : memo.at(smaller)) {
        cells[d.first] = label;
        cells[d.second] = label;
        out.push_back(std::move(cells));
        if (out.size() > limit) {
          throw EnumerationLimit("more than " + std::to_string(limit) + " tableaux of shape " + shape.str());
        }
      }
    }
  }
  memo.emplace(shape, std::move(out));
}

}  // namespace

std::vector<DominoTableau> enumerate_tableaux(const Partition& lambda, int r, const CellOptions& options) {
  require_P_r(lambda, r);
  if (lambda.size() > options.max_size) {
    throw EnumerationLimit("shape " + lambda.str() + " exceeds the size bound");
  }
  const int n = (lambda.size() - staircase_size(r)) / 2;
  std::map<Partition, std::vector<CellMap>> memo;
  tableaux_rec(lambda, staircase(r), n, memo, options.max_tableaux);
  std::vector<DominoTableau> out;
  for (const auto& cells : memo.at(lambda)) out.push_back(DominoTableau::from_cells(r, cells));
  std::sort(out.begin(), out.end(), [](const DominoTableau& a, const DominoTableau& b) {
    return a.labels() < b.labels();
  });
  return out;
}

DominoTableau any_tableau(const Partition& lambda, int r) {
  require_P_r(lambda, r);
  const Partition core = staircase(r);
  CellMap cells;
  for (const Box& b : boxes(core)) cells.emplace(b, 0);
  Partition current = lambda;
  for (int label = (lambda.size() - core.size()) / 2; label >= 1; --label) {
    auto dominoes = removable_dominoes(current);
    auto it = std::find_if(dominoes.begin(), dominoes.end(), [&](const Domino& d) {
      return !core.contains(d.first) && !core.contains(d.second);
    });
    if (it == dominoes.end()) throw ContractViolation("no removable domino outside the core of " + current.str());
    cells[it->first] = label;
    cells[it->second] = label;
    current = remove_cells(current, {it->first, it->second});
  }
  if (current != core) throw ContractViolation("domino peeling of " + lambda.str() + " missed the core");
  return DominoTableau::from_cells(r, cells);
}

RimRibbon tile_rim_ribbon(const Partition& lambda, const Box& start, const Box& end) {
  auto on_rim = [&](const Box& b) { return lambda.contains(b) && !lambda.contains({b.row + 1, b.col + 1}); };
  if (!on_rim(start)) throw ContractViolation(start.str() + " is not a rim box of " + lambda.str());
  if (!on_rim(end)) throw ContractViolation(end.str() + " is not a rim box of " + lambda.str());
  RimRibbon ribbon;
  Box current = start;
  ribbon.boxes.push_back(current);
  while (current != end) {
    if (current.col - current.row >= end.col - end.row) {
      throw ContractViolation("rim walk from " + start.str() + " passed " + end.str());
    }
    if (lambda.contains({current.row, current.col + 1})) {
      current = {current.row, current.col + 1};
    } else if (current.row > 1) {
      current = {current.row - 1, current.col};
    } else {
      throw ContractViolation("rim walk from " + start.str() + " left the diagram");
    }
    ribbon.boxes.push_back(current);
  }
  if (ribbon.boxes.size() % 2 != 0) {
    throw ContractViolation("ribbon from " + start.str() + " to " + end.str() + " has odd length");
  }
  for (std::size_t i = 0; i < ribbon.boxes.size(); i += 2) {
    ribbon.tiling.push_back(Domino{ribbon.boxes[i], ribbon.boxes[i + 1]});
  }
  return ribbon;
}

std::vector<std::string> tiling_property_violations(const Partition& lambda, const RimRibbon& ribbon) {
  std::vector<std::string> out;
  if (ribbon.boxes.empty()) return {"empty ribbon"};
  const int j = parity(ribbon.start());
  auto inside = [&](const Box& x) { return x.row == 0 || x.col == 0 || lambda.contains(x); };
  if (parity(ribbon.end()) != 1 - j) out.push_back("end box does not have residue j+1");

  std::multiset<Box> covered;
  for (const Domino& d : ribbon.tiling) {
    if (!adjacent(d.first, d.second)) out.push_back("tile " + d.first.str() + d.second.str() + " is not a domino");
    covered.insert(d.first);
    covered.insert(d.second);
  }
  if (covered != std::multiset<Box>(ribbon.boxes.begin(), ribbon.boxes.end())) {
    out.push_back("tiling does not cover the ribbon exactly once");
  }

  for (const Box& b : ribbon.boxes) {
    if (parity(b) == j || b == ribbon.end()) continue;
    const int v = b.row;
    const int w = b.col;
    auto tile = std::find_if(ribbon.tiling.begin(), ribbon.tiling.end(),
                             [&](const Domino& d) { return d.contains(b); });
    const std::string where = " at pivot " + b.str();
    if (tile == ribbon.tiling.end()) {
      out.push_back("pivot not tiled" + where);
      continue;
    }
    const Box partner = tile->first == b ? tile->second : tile->first;
    const bool below = partner == Box{v + 1, w};
    const bool left = partner == Box{v, w - 1};
    if (!below && !left) out.push_back("tile shape: not {s(v+1,w), s(v,w)} or {s(v,w-1), s(v,w)}" + where);
    const Box diag{v - 1, w + 1};
    if (inside(diag) && !ribbon.contains({v, w + 1})) {
      out.push_back("east step: s(v-1,w+1) in shape but s(v,w+1) not in ribbon" + where);
    }
    if (left && ribbon.contains(diag)) out.push_back("east step: horizontal tile with s(v-1,w+1) in ribbon" + where);
    if (!inside(diag) && !ribbon.contains({v - 1, w})) {
      out.push_back("north step: s(v-1,w+1) outside shape but s(v-1,w) not in ribbon" + where);
    }
  }
  return out;
}

namespace {

/// Moves the dominoes carrying `labels` through their pivots simultaneously,
/// reading all comparisons from the original tableau. Boxes in row 0 or
/// column 0 compare as lower than every domino.
DominoTableau move_labels(const DominoTableau& tableau, const std::vector<int>& labels) {
  const int pivot_parity = (tableau.rank() + 1) % 2;
  auto lower = [&](const Box& x, int k) {
    if (x.row == 0 || x.col == 0) return true;
    const int lx = tableau.label(x);
    return lx >= 0 && lx < k;
  };

  CellMap cells = tableau.cells();
  std::vector<std::pair<int, Domino>> placed;
  for (int k : labels) {
    const Domino d = tableau.domino(k);
    const Box pivot = parity(d.first) == pivot_parity ? d.first : d.second;
    const Box other = pivot == d.first ? d.second : d.first;
    if (parity(other) == pivot_parity) throw ContractViolation("domino " + std::to_string(k) + " has no pivot");
    const int v = pivot.row;
    const int w = pivot.col;
    Box partner;
    if (other == Box{v + 1, w} || other == Box{v, w - 1}) {
      partner = lower({v - 1, w + 1}, k) ? Box{v, w + 1} : Box{v - 1, w};
    } else {
      partner = lower({v + 1, w - 1}, k) ? Box{v + 1, w} : Box{v, w - 1};
    }
    if (partner.row < 1 || partner.col < 1) {
      throw ContractViolation("domino " + std::to_string(k) + " would leave the quadrant");
    }
    placed.emplace_back(k, make_domino(pivot, partner));
  }
  for (int k : labels) {
    const Domino d = tableau.domino(k);
    cells.erase(d.first);
    cells.erase(d.second);
  }
  for (const auto& [k, d] : placed) {
    for (const Box& b : {d.first, d.second}) {
      if (!cells.emplace(b, k).second) {
        throw ContractViolation("moved domino " + std::to_string(k) + " collides at " + b.str());
      }
    }
  }
  try {
    return DominoTableau::from_cells(tableau.rank(), cells);
  } catch (const InvalidParameter& e) {
    throw ContractViolation(std::string("moving through the cycle broke the tableau: ") + e.what());
  }
}

std::vector<int> ribbon_labels(const DominoTableau& tableau, const RimRibbon& ribbon) {
  std::vector<int> labels;
  for (const Domino& d : ribbon.tiling) {
    const int k = tableau.label(d.first);
    if (k < 1 || tableau.label(d.second) != k || !(tableau.domino(k) == make_domino(d.first, d.second))) {
      throw ContractViolation("ribbon tile " + d.first.str() + d.second.str() + " is not a domino of the tableau");
    }
    labels.push_back(k);
  }
  return labels;
}

bool betweenness_holds(const Partition& lambda, const Box& removed, const Box& added, int j) {
  const ResidueClass rj(j, 2);
  if (!lambda.is_removable(removed) || residue(removed, 2) != rj) return false;
  if (!lambda.is_addable(added) || residue(added, 2) != rj) return false;
  if (!(removed.row >= added.row && removed.col <= added.col)) return false;
  auto inside = [&](const Box& b) {
    return b != removed && b != added && removed.row >= b.row && b.row >= added.row && removed.col <= b.col &&
           b.col <= added.col;
  };
  for (const Box& b : removable_boxes(lambda, rj)) {
    if (inside(b)) return false;
  }
  for (const Box& b : addable_boxes(lambda, rj)) {
    if (inside(b)) return false;
  }
  return true;
}

}  // namespace

DominoTableau move_through(const DominoTableau& tableau, const RimRibbon& ribbon) {
  return move_labels(tableau, ribbon_labels(tableau, ribbon));
}

RimRibbon image_ribbon(const DominoTableau& tableau, const RimRibbon& ribbon, const DominoTableau& moved) {
  RimRibbon image;
  for (int k : ribbon_labels(tableau, ribbon)) {
    const Domino d = moved.domino(k);
    image.tiling.push_back(d);
    image.boxes.push_back(d.first);
    image.boxes.push_back(d.second);
  }
  std::sort(image.boxes.begin(), image.boxes.end(),
            [](const Box& a, const Box& b) { return a.col - a.row < b.col - b.row; });
  return image;
}

std::vector<ElementaryMove> elementary_moves(const Partition& lambda, int r) {
  require_P_r(lambda, r);
  const int j = r % 2;
  const ResidueClass rj(j, 2);
  const auto removable = removable_boxes(lambda, rj);
  const auto addable = addable_boxes(lambda, rj);
  std::vector<ElementaryMove> forward;
  std::vector<ElementaryMove> reverse;
  for (const Box& a : removable) {
    for (const Box& b : addable) {
      if (betweenness_holds(lambda, a, b, j)) forward.push_back(ElementaryMove{lambda, a, b, j, false});
    }
  }
  // Reverse moves: remove b, add a south-west of it, such that the forward
  // move a -> b is admissible in the resulting shape.
  for (const Box& b : removable) {
    for (const Box& a : addable) {
      if (!(a.row >= b.row && a.col <= b.col)) continue;
      const Partition mu = lambda.without(b).with(a);
      if (betweenness_holds(mu, a, b, j)) reverse.push_back(ElementaryMove{lambda, b, a, j, true});
    }
  }
  forward.insert(forward.end(), reverse.begin(), reverse.end());
  return forward;
}

MoveWitness witness(const ElementaryMove& move, int r) {
  if (move.reverse) {
    MoveWitness w = witness(move.inverted(), r);
    return MoveWitness{w.moved, w.image, w.tableau, w.ribbon};
  }
  const Partition& lambda = move.source;
  require_P_r(lambda, r);
  if (move.j != r % 2 || !betweenness_holds(lambda, move.removed, move.added, move.j)) {
    throw ContractViolation("move " + move.removed.str() + " -> " + move.added.str() + " on " + lambda.str() +
                            " does not satisfy the betweenness hypothesis");
  }

  const Box end{move.added.row, move.added.col - 1};
  RimRibbon ribbon = tile_rim_ribbon(lambda, move.removed, end);
  if (auto bad = tiling_property_violations(lambda, ribbon); !bad.empty()) {
    throw ContractViolation("ribbon on " + lambda.str() + " violates " + bad.front());
  }

  // T' on lambda minus the ribbon, then the ribbon's dominoes on top in an
  // order that keeps every prefix a Young diagram.
  const Partition base = remove_cells(lambda, ribbon.boxes);
  if (!in_P_r(base, r)) throw ContractViolation("removing the ribbon from " + lambda.str() + " changed the 2-core");
  CellMap cells = any_tableau(base, r).cells();
  int label = (base.size() - staircase_size(r)) / 2;
  Partition current = base;
  std::vector<Domino> pending = ribbon.tiling;
  while (!pending.empty()) {
    auto fits = std::find_if(pending.begin(), pending.end(), [&](const Domino& d) {
      Box lo = std::min(d.first, d.second);
      Box hi = std::max(d.first, d.second);
      return current.is_addable(lo) && current.with(lo).is_addable(hi);
    });
    if (fits == pending.end()) throw ContractViolation("ribbon dominoes of " + lambda.str() + " cannot be ordered");
    Box lo = std::min(fits->first, fits->second);
    Box hi = std::max(fits->first, fits->second);
    current = current.with(lo).with(hi);
    ++label;
    cells[lo] = label;
    cells[hi] = label;
    pending.erase(fits);
  }
  DominoTableau tableau = DominoTableau::from_cells(r, cells);

  DominoTableau moved = move_through(tableau, ribbon);
  if (moved.shape() != move.target()) {
    throw ContractViolation("moving through the ribbon of " + lambda.str() + " gave " + moved.shape().str() +
                            " instead of " + move.target().str());
  }
  RimRibbon image = image_ribbon(tableau, ribbon, moved);
  if (move_through(moved, image) != tableau) {
    throw ContractViolation("moving through the cycle twice did not restore the tableau on " + lambda.str());
  }
  return MoveWitness{std::move(tableau), std::move(ribbon), std::move(moved), std::move(image)};
}

CellPartition r_cells(int n, int r, const CellOptions& options) {
  const auto shapes = enumerate_P_r(n, r, options.max_size);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < shapes.size(); ++i) index.emplace(shapes[i], i);

  auto moves = parallel_map<std::vector<ElementaryMove>>(shapes.size(), options.workers, [&](std::size_t i) {
    std::vector<ElementaryMove> forward;
    for (auto& m : elementary_moves(shapes[i], r)) {
      if (m.reverse) continue;
      witness(m, r);
      forward.push_back(std::move(m));
    }
    return forward;
  });

  CellPartition out;
  out.n = n;
  out.r = r;
  DisjointSets sets(shapes.size());
  for (const auto& per_shape : moves) {
    for (const auto& m : per_shape) {
      const Partition to = m.target();
      auto it = index.find(to);
      if (it == index.end()) throw ContractViolation("move target " + to.str() + " left P_r(n)");
      sets.unite(index.at(m.source), it->second);
      out.edges.push_back(CellEdge{m.source, to, m.removed, m.added});
    }
  }
  for (const auto& cls : sets.classes()) {
    std::vector<Partition> cell;
    for (std::size_t i : cls) cell.push_back(shapes[i]);
    out.cells.push_back(std::move(cell));
  }
  return out;
}

namespace {

/// Forward moves carrying the removable boxes of `from` (indices into
/// `corners`) onto those of `to`, rightmost first, one corner at a time.
std::vector<ElementaryMove> hops(const Partition& start, const std::vector<Box>& corners,
                                 std::vector<std::size_t> from, std::vector<std::size_t> to, int j) {
  std::sort(from.begin(), from.end(), std::greater<>());
  std::sort(to.begin(), to.end(), std::greater<>());
  std::vector<ElementaryMove> out;
  Partition shape = start;
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t a = from[i]; a < to[i]; ++a) {
      ElementaryMove m{shape, corners[a], corners[a + 1], j, false};
      shape = m.target();
      out.push_back(std::move(m));
    }
    if (from[i] > to[i]) throw ContractViolation("leftmost filling is not left of the target");
  }
  return out;
}

std::vector<std::size_t> occupied_corners(const Partition& lambda, const Partition& heart,
                                          const std::vector<Box>& corners) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (lambda.contains(corners[i])) out.push_back(i);
  }
  Partition rebuilt = heart;
  for (std::size_t i : out) rebuilt = rebuilt.with(corners[i]);
  if (rebuilt != lambda) {
    throw ContractViolation(lambda.str() + " is not its heart " + heart.str() + " plus addable corners");
  }
  return out;
}

}  // namespace

std::vector<ElementaryMove> path_between(const Partition& lambda, const Partition& mu, int r) {
  require_P_r(lambda, r);
  require_P_r(mu, r);
  const int j = r % 2;
  const TypeJ J = TypeJ::single(j, 2);
  const Partition heart = j_heart(lambda, J);
  if (lambda.size() != mu.size() || j_heart(mu, J) != heart) {
    throw NoPath(lambda.str() + " and " + mu.str() + " have different " + std::to_string(j) + "-hearts");
  }
  if (lambda == mu) return {};

  auto corners = addable_boxes(heart, ResidueClass(j, 2));
  std::sort(corners.begin(), corners.end(), [](const Box& a, const Box& b) { return a.col < b.col; });
  const auto from = occupied_corners(lambda, heart, corners);
  const auto to = occupied_corners(mu, heart, corners);

  std::vector<std::size_t> leftmost(from.size());
  for (std::size_t i = 0; i < leftmost.size(); ++i) leftmost[i] = i;
  Partition nu = heart;
  for (std::size_t i : leftmost) nu = nu.with(corners[i]);

  std::vector<ElementaryMove> path;
  auto down = hops(nu, corners, leftmost, from, j);
  for (auto it = down.rbegin(); it != down.rend(); ++it) path.push_back(it->inverted());
  auto up = hops(nu, corners, leftmost, to, j);
  path.insert(path.end(), up.begin(), up.end());

  for (const auto& step : path) witness(step, r);
  if (replay(lambda, path) != mu) throw ContractViolation("path replay did not reach " + mu.str());
  return path;
}

Partition replay(const Partition& lambda, const std::vector<ElementaryMove>& moves) {
  Partition current = lambda;
  for (const auto& m : moves) {
    if (m.source != current) {
      throw ContractViolation("move source " + m.source.str() + " does not match " + current.str());
    }
    current = m.target();
  }
  return current;
}

}  // namespace cmcells
