#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "../oracles.hpp"
#include "cmcells/cores.hpp"
#include "cmcells/domino.hpp"
#include "cmcells/errors.hpp"

using namespace cmcells;

namespace {

using MoveKey = std::tuple<Partition, Box, Box, bool>;

MoveKey key(const ElementaryMove& m) { return {m.source, m.removed, m.added, m.reverse}; }

// Forward moves straight from the definition: a j-removable box a, a
// j-addable box b weakly north-east of it, and nothing j-removable or
// j-addable in the rectangle they span.
std::set<MoveKey> forward_by_definition(const Partition& lambda, int r) {
  const int j = r % 2;
  std::set<MoveKey> out;
  const int rows = lambda.length() + 1;
  const int cols = lambda.row(1) + 1;
  auto jrem = [&](const Box& x) { return oracle::removable(lambda, x) && oracle::res(x, 2) == j; };
  auto jadd = [&](const Box& x) { return oracle::addable(lambda, x) && oracle::res(x, 2) == j; };
  for (int ap = 1; ap <= rows; ++ap)
    for (int aq = 1; aq <= cols; ++aq)
      for (int bp = 1; bp <= ap; ++bp)
        for (int bq = aq; bq <= cols; ++bq) {
          Box a{ap, aq}, b{bp, bq};
          if (!jrem(a) || !jadd(b)) continue;
          bool clear = true;
          for (int p = bp; p <= ap && clear; ++p)
            for (int q = aq; q <= bq && clear; ++q) {
              Box x{p, q};
              if (x != a && x != b && (jrem(x) || jadd(x))) clear = false;
            }
          if (clear) out.insert({lambda, a, b, false});
        }
  return out;
}

}  // namespace

TEST_SUITE("domino_cells") {

TEST_CASE("P_r membership") {
  CHECK(in_P_r(Partition{2, 1}, 2));
  CHECK_FALSE(in_P_r(Partition{2, 1}, 1));
  CHECK(in_P_r(Partition{3}, 1));
  CHECK(in_P_r(Partition{3, 3, 1, 1}, 0));
  CHECK(in_P_r(Partition{4, 1}, 2));
  CHECK_FALSE(in_P_r(Partition{5, 2, 1}, 2));
}

TEST_CASE("tableau counts match tilings times admissible orderings") {
  CHECK(enumerate_tableaux(Partition{2, 2}, 0).size() == 2);
  CHECK(oracle::domino_tableau_count(Partition{2, 2}, 0) == 2);
  for (int r = 0; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : enumerate_P_r(n, r)) {
        CAPTURE(lambda.str());
        auto all = enumerate_tableaux(lambda, r);
        CHECK(static_cast<long long>(all.size()) == oracle::domino_tableau_count(lambda, r));
        CHECK(std::is_sorted(all.begin(), all.end(), [](const DominoTableau& a, const DominoTableau& b) {
          return a.labels() < b.labels();
        }));
        for (const auto& t : all) {
          CHECK(t.shape() == lambda);
          CHECK(t.n() == n);
          CHECK(DominoTableau::from_cells(r, t.cells()) == t);
        }
      }
}

TEST_CASE("tableaux validate their input") {
  CHECK_THROWS_AS(DominoTableau::from_cells(0, {{{1, 1}, 1}, {{2, 2}, 1}}), InvalidParameter);
  CHECK_THROWS_AS(DominoTableau::from_cells(0, {{{1, 1}, 2}, {{1, 2}, 2}}), InvalidParameter);
  CHECK_THROWS_AS(DominoTableau::from_cells(0, {{{1, 1}, 2}, {{1, 2}, 2}, {{2, 1}, 1}, {{3, 1}, 1}}), InvalidParameter);
  CHECK_NOTHROW(DominoTableau::from_cells(0, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 2}, {{3, 1}, 2}}));
  CHECK_NOTHROW(DominoTableau::from_cells(1, {{{1, 1}, 0}, {{1, 2}, 1}, {{1, 3}, 1}}));
}

TEST_CASE("elementary moves agree with the definition") {
  for (int r = 0; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      std::set<MoveKey> forward, reverse, expect_forward, expect_reverse;
      for (const auto& lambda : enumerate_P_r(n, r)) {
        for (const auto& m : elementary_moves(lambda, r)) {
          CHECK(m.source == lambda);
          CHECK(in_P_r(m.target(), r));
          (m.reverse ? reverse : forward).insert(key(m));
        }
        for (const auto& k : forward_by_definition(lambda, r)) {
          expect_forward.insert(k);
          const auto& [src, a, b, rev] = k;
          expect_reverse.insert(key(ElementaryMove{src, a, b, r % 2, false}.inverted()));
        }
      }
      CAPTURE(r);
      CAPTURE(n);
      CHECK(forward == expect_forward);
      CHECK(reverse == expect_reverse);
    }
}

TEST_CASE("every move is witnessed, and moving through twice is the identity") {
  std::size_t witnessed = 0;
  for (int r = 0; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& lambda : enumerate_P_r(n, r))
        for (const auto& m : elementary_moves(lambda, r)) {
          CAPTURE(lambda.str());
          MoveWitness w = witness(m, r);
          CHECK(w.tableau.shape() == m.source);
          CHECK(w.moved.shape() == m.target());
          CHECK(move_through(w.tableau, w.ribbon) == w.moved);
          CHECK(move_through(w.moved, w.image) == w.tableau);
          if (!m.reverse) CHECK(tiling_property_violations(m.source, w.ribbon).empty());
          ++witnessed;
        }
  CHECK(witnessed > 50);
}

TEST_CASE("rim ribbon tiling") {
  Partition lambda{4, 2};
  RimRibbon ribbon = tile_rim_ribbon(lambda, {2, 2}, {1, 4});
  CHECK(ribbon.boxes == std::vector<Box>{{2, 2}, {1, 2}, {1, 3}, {1, 4}});
  REQUIRE(ribbon.tiling.size() == 2);
  CHECK(tiling_property_violations(lambda, ribbon).empty());
  CHECK_THROWS_AS(tile_rim_ribbon(lambda, {2, 2}, {1, 3}), ContractViolation);
}

TEST_CASE("r-cells for r = 0, n = 2") {
  auto cells = r_cells(2, 0);
  REQUIRE(cells.cells.size() == 3);
  CHECK(cells.cells[0] == std::vector<Partition>{{4}});
  CHECK(cells.cells[1] == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
  CHECK(cells.cells[2] == std::vector<Partition>{{1, 1, 1, 1}});
  CHECK(cells.edges.size() == 2);
}

TEST_CASE("cells are unions of j-heart classes and connected by explicit paths") {
  for (int r = 0; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      auto cells = r_cells(n, r);
      TypeJ J = TypeJ::single(r % 2, 2);
      std::map<Partition, std::size_t> cell_of;
      for (std::size_t i = 0; i < cells.cells.size(); ++i)
        for (const auto& x : cells.cells[i]) cell_of[x] = i;
      for (const auto& [a, ca] : cell_of)
        for (const auto& [b, cb] : cell_of) {
          CAPTURE(a.str());
          CAPTURE(b.str());
          if (ca == cb) {
            auto path = path_between(a, b, r);
            CHECK(replay(a, path) == b);
            for (const auto& m : path) {
              auto options = elementary_moves(m.source, r);
              CHECK(std::find(options.begin(), options.end(), m) != options.end());
            }
          } else {
            CHECK_THROWS_AS(path_between(a, b, r), NoPath);
          }
          CHECK((ca == cb) == same_j_class(a, b, J));
        }
    }
}

TEST_CASE("worker count does not change the cells") {
  auto one = r_cells(5, 1, CellOptions{kDefaultMaxPartitionSize, 1'000'000, 1});
  auto many = r_cells(5, 1, CellOptions{kDefaultMaxPartitionSize, 1'000'000, 4});
  CHECK(one.cells == many.cells);
  CHECK(one.edges.size() == many.edges.size());
}

}
